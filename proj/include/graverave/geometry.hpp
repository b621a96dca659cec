#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>

namespace graverave {

struct Coord {
    int x = 0;
    int y = 0;

    bool operator==(const Coord&) const = default;
};

// Cardinal directions. Enum order N,E,S,W is the fixed tie-break order used
// by every deterministic choice in the simulation and the agents.
enum class Dir : uint8_t { N = 0, E = 1, S = 2, W = 3 };

inline constexpr Coord kDirOffset[4] = {
    {0, -1},  // N
    {1, 0},   // E
    {0, 1},   // S
    {-1, 0},  // W
};

inline Coord step_toward(Coord c, Dir d) {
    const Coord o = kDirOffset[static_cast<int>(d)];
    return {c.x + o.x, c.y + o.y};
}

inline int manhattan(Coord a, Coord b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

inline double euclidean(Coord a, Coord b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

inline const char* dir_token(Dir d) {
    switch (d) {
        case Dir::N: return "n";
        case Dir::E: return "e";
        case Dir::S: return "s";
        case Dir::W: return "w";
    }
    return "?";
}

}  // namespace graverave
