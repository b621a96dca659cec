#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "graverave/personas.hpp"

namespace graverave {

struct EpisodeSummary {
    int enemies_remaining = 0;  // final non-Dead enemy count
    int base_hp = 0;            // final base health
    int cumulative_reward = 0;
    int steps = 0;
    TerminalStatus outcome = TerminalStatus::Running;

    bool operator==(const EpisodeSummary&) const = default;
};

enum class MetricId : uint8_t { Hardcore = 0, Easy = 1, CloseCall = 2 };

inline constexpr std::array<MetricId, 3> kAllMetrics = {
    MetricId::Hardcore, MetricId::Easy, MetricId::CloseCall};

const char* metric_token(MetricId m);  // "hardcore", "easy", "close-call"
std::optional<MetricId> parse_metric(std::string_view token);

// Negated cumulative reward: -((5 - E) - (10 - B)).
double fitness_hardcore(const EpisodeSummary& s);
// Exactly -fitness_hardcore.
double fitness_easy(const EpisodeSummary& s);
// (10 - B) while the base survives, -1 when it fell.
double fitness_close_call(const EpisodeSummary& s);

double metric_fitness(MetricId metric, const EpisodeSummary& s);

// One full deterministic episode: reset, then act/step until termination.
EpisodeSummary play_episode(const Level& level, PersonaId persona);

std::pair<double, EpisodeSummary> evaluate(const Level& level, PersonaId persona,
                                           MetricId metric);

}  // namespace graverave
