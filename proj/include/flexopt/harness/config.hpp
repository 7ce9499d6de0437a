#pragma once
// Declarative experiment configuration.
//
// Every tunable of a run lives here: circuit geometry, GA parameters, the
// goal schedule, training and test goal families, the normalized-fitness
// threshold policy, seeds, and output handling.  Unknown keys are rejected
// and override values are type-checked against the same schema as files.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "flexopt/circuit/contexts.hpp"
#include "flexopt/evolve/ga.hpp"
#include "flexopt/harness/toml.hpp"

namespace flexopt::harness {

enum class FailureMode { exclude, cap };

const char* failure_mode_name(FailureMode mode);

struct ExperimentConfig {
    circuit::CircuitParams circuit;
    circuit::CyclePolicy cycle_policy = circuit::CyclePolicy::settle;
    evolve::GAParams ga;
    bool mutation_rate_explicit = false;   // otherwise defaults to 1/B

    int epoch_len = 20;
    int pretrain_epochs = 10;
    bool reset_population_on_switch = false;

    double fn_threshold = 0.8;
    int baseline_populations = 20;

    std::vector<circuit::GoalFamily> training;
    std::vector<circuit::GoalFamily> test;

    std::vector<std::uint64_t> seeds;
    std::uint64_t master_seed = 42;
    FailureMode failure_mode = FailureMode::exclude;
    int threads = 0;                 // 0 = hardware concurrency
    std::string out_dir = "out";

    int pretrain_generations() const { return epoch_len * pretrain_epochs; }
    int resolved_threads() const;

    void validate() const;

    // Stable canonical dump of all result-affecting fields (sorted keys;
    // out_dir and threads excluded since they cannot change results).
    std::string canonical() const;

    // FNV-1a of the canonical dump, as 16 hex digits.
    std::string hash() const;

    static ExperimentConfig defaults();
    static ExperimentConfig from_doc(const TomlDoc& doc);
    static ExperimentConfig from_file(const std::string& path,
                                      const std::vector<std::string>& overrides = {});
};

// Apply "dotted.key=value" overrides on top of a parsed document.
void apply_overrides(TomlDoc& doc, const std::vector<std::string>& overrides);

} // namespace flexopt::harness
