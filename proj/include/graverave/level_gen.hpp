#pragma once

#include <stdexcept>
#include <vector>

#include "graverave/level.hpp"

namespace graverave {

struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Boolean cell mask of arbitrary size; the generator uses 15x15 ones, tests
// exercise smaller fixtures.
struct CellMask {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> cells;

    CellMask() = default;
    CellMask(int w, int h) : width(w), height(h), cells(static_cast<size_t>(w) * h, 0) {}

    uint8_t& at(int x, int y) { return cells[static_cast<size_t>(y) * width + x]; }
    uint8_t at(int x, int y) const { return cells[static_cast<size_t>(y) * width + x]; }

    bool operator==(const CellMask&) const = default;
};

// `runs` cellular-automaton passes over `occupied`. Each pass reads the
// pre-pass mask and writes a fresh one (double-buffered). A cell converts to
// occupied when it is neither occupied nor blocked and strictly more than
// `neighbour_number` occupied cells lie within euclidean distance `depth`
// (inclusive) of it. `blocked` may be null.
void refine_cells(CellMask& occupied, const CellMask* blocked, int runs,
                  int neighbour_number, int depth);

// True iff the non-occupied cells of `rocks` form one 4-connected component
// (vacuously true with fewer than two free cells).
bool connectivity_check(const CellMask& rocks);

// The seeded 6-step generator. Throws GenerationError after 1000 restart
// attempts or on out-of-range params.
Level generate(const GeneratorParams& params);

}  // namespace graverave
