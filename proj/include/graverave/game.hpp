#pragma once

#include <array>
#include <vector>

#include "graverave/level.hpp"

namespace graverave {

inline constexpr int kEnemyCount = 5;
inline constexpr int kInitialBaseHp = 10;
inline constexpr int kEmergenceStep = 20;  // buried enemies rise once step_count reaches this
inline constexpr int kRushStep = 70;       // fleeing stops for good at this step count
inline constexpr int kStepLimit = 500;

struct Action {
    enum class Type : uint8_t { Move, Attack };

    Type type = Type::Move;
    Dir dir = Dir::N;  // meaningful for Move only

    static Action move(Dir d) { return {Type::Move, d}; }
    static Action attack() { return {Type::Attack, Dir::N}; }

    bool operator==(const Action&) const = default;
};

const char* action_token(Action a);  // "move_n".."move_w", "attack"

enum class EnemyStatus : uint8_t { Buried, Active, Dead };

struct EnemyState {
    Coord pos;
    EnemyStatus status = EnemyStatus::Buried;
    int spawn_index = 0;

    bool operator==(const EnemyState&) const = default;
};

enum class TerminalStatus : uint8_t { Running, Won, Lost, StepLimit };

const char* terminal_token(TerminalStatus t);  // "running", "won", "lost", "steplimit"

struct Projectile {
    Coord pos;  // tile currently occupied; a just-fired one sits on the player's tile
    Dir dir;

    bool operator==(const Projectile&) const = default;
};

// Self-contained episode state; copying the level grid keeps episodes
// value-semantic and safe to run on any worker.
struct GameState {
    TileGrid grid;
    Coord base_pos;
    double flee_distance = 0.0;
    Coord player_pos;
    Dir facing = Dir::N;
    int base_hp = kInitialBaseHp;
    std::array<EnemyState, kEnemyCount> enemies;
    std::vector<Projectile> projectiles;
    int step_count = 0;
    int cumulative_reward = 0;
    TerminalStatus terminal = TerminalStatus::Running;

    bool operator==(const GameState&) const = default;
};

// Read-only snapshot handed to agents.
struct Observation {
    TileGrid grid;
    Coord player_pos;
    Dir facing = Dir::N;
    Coord base_pos;
    int base_hp = 0;
    std::array<EnemyState, kEnemyCount> enemies;
    std::vector<Projectile> projectiles;
    int step_count = 0;
    int cumulative_reward = 0;
    double flee_distance = 0.0;

    // Tile codes with active enemies (6) and the player (5) overlaid.
    std::array<int, kGridSize * kGridSize> coded_grid() const;

    bool operator==(const Observation&) const = default;
};

// Validates the level, then places the player at player_start facing the
// base, base at 10 HP, and the five enemies buried in their graves.
GameState reset(const Level& level);  // throws std::invalid_argument on a bad level

// One game step. Resolution order is fixed: in-flight projectiles advance
// and resolve, the player acts, each enemy acts in spawn order (emergence
// check first), step_count increments, terminal status updates. Returns the
// step reward = kills this step - base HP lost this step.
int step(GameState& state, Action action);  // throws std::logic_error on a terminated state

TerminalStatus is_terminal(const GameState& state);

Observation observe(const GameState& state);

// Where the enemy would go this step (flee / greedy descent toward base),
// ignoring its attack option; exposed for tests.
struct EnemyIntent {
    enum class Kind : uint8_t { Stay, Move, AttackTree, AttackBase };
    Kind kind = Kind::Stay;
    Coord target;  // destination tile or attacked tile
};
EnemyIntent enemy_move(const GameState& state, const EnemyState& enemy);

}  // namespace graverave
