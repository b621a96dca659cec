#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "graverave/eval_batch.hpp"

namespace graverave {

using Genome = GeneratorParams;

struct EvolutionConfig {
    int population_size = 100;
    int generations = 30;
    double elite_fraction = 0.30;
    double mutation_rate = 0.05;
    bool seed_only = false;
    double seed_only_mutation_rate = 0.20;
    PersonaId persona = PersonaId::R01;
    MetricId metric = MetricId::Hardcore;
    uint64_t master_rng_seed = 1;
};

void require_valid(const EvolutionConfig& cfg);  // throws std::invalid_argument

struct GenerationStats {
    int generation = 0;
    double mean_fitness = 0.0;
    double std_fitness = 0.0;  // population standard deviation
    double min_fitness = 0.0;
    double max_fitness = 0.0;
    double mean_reward = 0.0;
    std::vector<Genome> elites;  // fitness-descending
    std::vector<double> elite_fitness;
};

struct EvolutionRun {
    std::vector<Genome> final_population;  // head = last generation's elites, unchanged
    std::vector<GenerationStats> stats;
};

// population_size genomes via random_params (seed-only mode randomizes all
// ten genes here too).
std::vector<Genome> init_population(const EvolutionConfig& cfg, Rng& rng);

// Stable-sorts by fitness descending, carries the top floor(elite_fraction*N)
// unchanged, and fills back to N with round-robin mutated copies of them.
// Mutation re-samples a gene uniformly until it differs; seed-only mode
// mutates only random_seed, at seed_only_mutation_rate.
std::vector<Genome> select_and_reproduce(const std::vector<Genome>& population,
                                         const std::vector<double>& fitness,
                                         const EvolutionConfig& cfg, Rng& rng);

// generations x (evaluate population, record stats, reproduce); fully
// reproducible from cfg. Generation failures score -inf, never abort.
EvolutionRun run_evolution(const EvolutionConfig& cfg);

enum class SpecStat : uint8_t { Reward, BaseHp };

using Matrix4 = std::array<std::array<double, 4>, 4>;

// populations_for[j] holds, per run, the final population evolved for
// persona j. Cell (i,j) = mean statistic over all runs and genomes when
// persona i plays those levels. Run counts must match across personas.
Matrix4 specificity_matrix(
    const std::array<std::vector<std::vector<Genome>>, 4>& populations_for,
    SpecStat stat);

}  // namespace graverave
