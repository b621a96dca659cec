#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "graverave/geometry.hpp"
#include "graverave/params.hpp"

namespace graverave {

inline constexpr int kGridSize = 15;
inline constexpr int kGraveCount = 5;
inline constexpr int kTreeHits = 3;

enum class TileKind : uint8_t { Empty, Rock, Tree, Grave, Base };

struct Tile {
    TileKind kind = TileKind::Empty;
    uint8_t tree_hits = 0;  // 1..3 while kind == Tree, else 0

    bool operator==(const Tile&) const = default;
};

inline Tile make_tree() { return Tile{TileKind::Tree, kTreeHits}; }

// Fixed 15x15 tile matrix, row-major; (x, y) with y as the row index.
class TileGrid {
public:
    static bool in_bounds(Coord c) {
        return c.x >= 0 && c.x < kGridSize && c.y >= 0 && c.y < kGridSize;
    }

    Tile& at(Coord c) { return tiles_[c.y * kGridSize + c.x]; }
    const Tile& at(Coord c) const { return tiles_[c.y * kGridSize + c.x]; }

    bool operator==(const TileGrid&) const = default;

private:
    std::array<Tile, kGridSize * kGridSize> tiles_{};
};

// Integer codes for grid snapshots; 0..5 mirror the serialization alphabet
// ".RTGBP"; 6 marks an active enemy in mid-game observations.
inline constexpr int kCodeEmpty = 0;
inline constexpr int kCodeRock = 1;
inline constexpr int kCodeTree = 2;
inline constexpr int kCodeGrave = 3;
inline constexpr int kCodeBase = 4;
inline constexpr int kCodePlayer = 5;
inline constexpr int kCodeEnemy = 6;

char tile_code_char(int code);

struct Level {
    TileGrid grid;
    Coord player_start;
    Coord base_pos;
    std::array<Coord, kGraveCount> grave_positions;  // row-major; index = enemy spawn_index
    double flee_distance = 0.0;
    GeneratorParams params;  // provenance

    bool operator==(const Level&) const = default;
};

// Empty when all Level invariants hold, else one message per violation.
std::vector<std::string> validate_level(const Level& level);

// JSON with the grid as 15 strings over ".RTGBP", plus flee_distance and
// params. 'P' marks the player start (an empty tile), 'B' the base.
std::string serialize_level(const Level& level);
Level parse_level(const std::string& json_text);  // throws std::runtime_error with field context

}  // namespace graverave
