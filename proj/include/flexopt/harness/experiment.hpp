#pragma once
// End-to-end experiment: pretrain under FG and MVG schedules, adapt to every
// test task, record costs, aggregate, persist.
//
// Work units are (seed, scenario) cells; a bounded worker pool executes
// them and results land in slots indexed by cell, so outputs are identical
// no matter how the pool schedules.  All records are persisted before any
// aggregate is written.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "flexopt/harness/records.hpp"
#include "flexopt/harness/report.hpp"

namespace flexopt::harness {

struct ExperimentResult {
    std::vector<RunRecord> records;          // deterministic (seed, scenario, task) order
    SummaryStats stats;
    FlexibilityReport report;
    std::map<std::string, double> baseline_by_family;   // F_r per goal label
    std::map<std::string, double> eps_by_family;
    std::vector<std::string> warnings;
};

using ProgressFn = std::function<void(const std::string&)>;

// Compute a full experiment without touching the filesystem.
ExperimentResult run_experiment(const ExperimentConfig& cfg, const ProgressFn& progress = {});

// records.jsonl, summary.csv, hist_FG.csv, hist_MVG.csv, report.json under
// cfg.out_dir; records are written first.
void write_outputs(const ExperimentResult& result, const ExperimentConfig& cfg);

// Per-goal baseline estimation shared by runs and replays.
std::map<std::string, double> estimate_baselines(const ExperimentConfig& cfg);

std::map<std::string, double> eps_from_baselines(const std::map<std::string, double>& baselines,
                                                 double fn_threshold);

// Pretrained population + its best genotype for one (seed, scenario) cell.
struct PretrainedCell {
    evolve::Population population;
    circuit::Genotype best;
    std::string final_goal_id;
    evolve::RunTrace trace;
};

PretrainedCell pretrain_cell(const ExperimentConfig& cfg, const std::map<std::string, double>& eps,
                             std::uint64_t seed, evolve::ScheduleKind kind, int threads = 1);

// One test-task adaptation from a pretrained cell (the cell is copied).
struct AdaptOutcome {
    RunRecord record;
    evolve::RunTrace trace;
};

AdaptOutcome adapt_cell_to_task(const ExperimentConfig& cfg, const PretrainedCell& cell,
                                const std::map<std::string, double>& eps, std::uint64_t seed,
                                evolve::ScheduleKind kind, std::size_t task_index, int threads = 1);

} // namespace flexopt::harness
