#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "graverave/evolver.hpp"

namespace graverave {

// --- Baseline (play each persona over one shared set of random levels) ---

struct BaselineRow {
    PersonaId persona;
    double mean_reward = 0.0;
    int episodes = 0;  // successful ones; generation failures are skipped
    int skipped = 0;
};

struct BaselineResult {
    std::vector<GeneratorParams> level_params;
    std::array<std::vector<EvalResult>, 4> episodes;  // [persona][level]
    std::array<BaselineRow, 4> rows;
};

BaselineResult run_baseline(int level_count, uint64_t seed);
void write_baseline_files(const BaselineResult& result, const std::filesystem::path& out_dir);

// --- Evolution campaigns ---

struct CampaignSpec {
    EvolutionConfig base;  // persona/master_rng_seed overridden per run
    std::vector<PersonaId> personas{kAllPersonas.begin(), kAllPersonas.end()};
    int runs = 15;
    std::filesystem::path out_dir;  // empty = keep results in memory only
};

struct PersonaCampaign {
    PersonaId persona;
    std::vector<EvolutionRun> runs;
};

struct CampaignResult {
    CampaignSpec spec;
    std::vector<PersonaCampaign> personas;
};

// Independent per-(persona, run) seeds from one master seed: a splitmix64
// finalizer chain over (master, persona_index+1, run_index+1).
uint64_t derive_run_seed(uint64_t master_seed, int persona_index, int run_index);

CampaignResult run_campaign(const CampaignSpec& spec);

// "desk" = population 30 / 15 generations / 5 runs; "paper" = 100 / 30 / 15.
bool apply_preset(std::string_view name, EvolutionConfig& cfg, int& runs);

// --- Archives on disk ---

struct ArchiveConfig {
    EvolutionConfig base;
    int runs = 0;
    std::vector<PersonaId> personas;
};

ArchiveConfig read_archive_config(const std::filesystem::path& dir);

// Per-run final populations for one persona, run order.
std::vector<std::vector<Genome>> read_final_populations(const std::filesystem::path& dir,
                                                        PersonaId persona);

struct RunCurve {
    std::vector<double> mean_fitness, std_fitness, min_fitness, max_fitness, mean_reward;
};
RunCurve read_run_curve(const std::filesystem::path& dir, PersonaId persona, int run_index);

// Recomputes every aggregate CSV from the per-run files and byte-compares;
// also checks row counts. Returns true when the archive is internally
// consistent; diagnostics (when non-null) gets one line per mismatch.
bool verify_archive(const std::filesystem::path& dir, std::string* diagnostics);

// --- Specificity matrices from archives ---

struct SpecificityResult {
    Matrix4 reward;
    std::optional<Matrix4> base_hp;  // emitted for close-call archives
};

// The dirs must jointly cover all four personas with mutually consistent
// configs and run counts. Writes specificity_reward.csv (and
// specificity_base_hp.csv for close-call) into out_dir when non-empty.
SpecificityResult specificity_from_archives(const std::vector<std::filesystem::path>& dirs,
                                            const std::filesystem::path& out_dir);

std::string format_matrix_csv(const Matrix4& m, std::string_view stat_name);

// --- Replay / audit ---

// Canonical trace: one "step=N action=... reward=R base_hp=H" line per step
// plus a final outcome line. Byte-stable for identical inputs.
std::string replay_trace(const Level& level, PersonaId persona);

// Trace with an ASCII frame after every step when with_grids is set.
void print_replay(const Level& level, PersonaId persona, std::ostream& out, bool with_grids);

std::string render_frame(const Observation& obs);

}  // namespace graverave
