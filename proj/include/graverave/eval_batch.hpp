#pragma once

#include <span>
#include <vector>

#include "graverave/metrics.hpp"

namespace graverave {

// One generate-and-play job: the kernels regenerate the level from its
// params, so tasks are pure values and trivially parallel.
struct EvalTask {
    GeneratorParams params;
    PersonaId persona;
    MetricId metric;
};

struct EvalResult {
    double fitness = 0.0;  // -inf when generation failed
    EpisodeSummary summary;
    bool generation_failed = false;
};

// Serial reference implementation; the parallel kernel must match it
// bit-for-bit, result i belonging to task i in both.
std::vector<EvalResult> evaluate_tasks_serial(std::span<const EvalTask> tasks);

// OpenMP kernel (falls back to the serial path in non-OpenMP builds).
// Results are gathered in task order, so scheduling never alters output.
// Worker count follows OMP_NUM_THREADS.
std::vector<EvalResult> evaluate_tasks_parallel(std::span<const EvalTask> tasks);

// Default entry point used by the evolver and the harness.
std::vector<EvalResult> evaluate_tasks(std::span<const EvalTask> tasks);

}  // namespace graverave
