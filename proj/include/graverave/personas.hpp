#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "graverave/game.hpp"

namespace graverave {

enum class PersonaId : uint8_t { R01 = 0, R02 = 1, R03 = 2, R04 = 3 };

inline constexpr std::array<PersonaId, 4> kAllPersonas = {
    PersonaId::R01, PersonaId::R02, PersonaId::R03, PersonaId::R04};

const char* persona_token(PersonaId p);  // "r01".."r04"
std::optional<PersonaId> parse_persona(std::string_view token);

// R02 pursues only while the most base-threatening enemy is strictly closer
// than this euclidean distance to the base.
inline constexpr double kDefendThreshold = 4.0;

struct ThreatEntry {
    int spawn_index;
    double threat;  // -euclidean(enemy, reference); higher is more threatening
    bool is_target;
};

// One entry per non-Dead enemy; exactly one target (max threat, ties to the
// lowest spawn_index). Empty when no enemy lives.
std::vector<ThreatEntry> threat_ranking(const Observation& obs, Coord reference);

// True iff from and to share a row or column with no Rock, Tree, or Base
// strictly between them.
bool line_of_sight(const TileGrid& grid, Coord from, Coord to);

enum class PathMode : uint8_t {
    BlockTrees,  // BFS; Rock, Tree, Base impassable (R01-R03)
    BreakTrees,  // weighted; Tree enterable at cost 1 + hits_remaining (R04)
};

// Distances and first moves from one origin to every reachable cell;
// deterministic (expansion order N,E,S,W; weighted ties by insertion order).
struct PathField {
    std::array<int, kGridSize * kGridSize> cost;     // -1 where unreachable
    std::array<int8_t, kGridSize * kGridSize> step;  // Dir index of the first move; -1 at origin
};
PathField compute_paths(const TileGrid& grid, Coord from, PathMode mode);

// Shortest path from..to (excluding from, including to), or nullopt.
std::optional<std::vector<Coord>> find_path(const TileGrid& grid, Coord from,
                                            Coord to, PathMode mode);

// The persona's action for this observation; total and deterministic.
Action act(PersonaId persona, const Observation& obs);

}  // namespace graverave
