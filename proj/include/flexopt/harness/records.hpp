#pragma once
// Run records, summary statistics, and their file formats.
//
// One record captures a single adaptation episode: pretrained state, test
// task, costs, and outcome.  Records serialize to JSON lines; summaries to
// CSV with the fixed header scenario,task,mean_ada,stderr_ada,mean_reco,
// fail_frac,n.  Every output file starts with a metadata line carrying the
// config hash and master seed.

#include <cstdint>
#include <string>
#include <vector>

#include "flexopt/harness/config.hpp"

namespace flexopt::harness {

struct RunRecord {
    std::uint64_t seed = 0;
    std::string scenario;        // "FG" or "MVG"
    std::string task_id;
    std::string pre;             // genotype bit strings
    std::string post;
    int adaption_cost = 0;       // generations; the cap value when !solved
    int reconfig_cost = 0;       // Hamming bits
    bool solved = true;
    double wall_time = 0.0;      // seconds

    std::string to_json_line() const;
    static RunRecord from_json_line(const std::string& line);

    void validate(const ExperimentConfig& cfg) const;
};

struct ScenarioTaskStats {
    std::string scenario;
    std::string task;            // task id or "ALL"
    double mean_ada = 0.0;
    double stderr_ada = 0.0;
    double median_ada = 0.0;     // reported in the JSON report, not the CSV
    double mean_reco = 0.0;
    double fail_frac = 0.0;
    std::size_t n = 0;           // records in the cell
};

struct SummaryStats {
    std::vector<ScenarioTaskStats> rows;    // per (scenario, task), then per-scenario ALL rows
    double ada_cost_ratio_fg_mvg = 0.0;     // mean FG adaption cost / mean MVG adaption cost
    double reco_cost_ratio_fg_mvg = 0.0;

    const ScenarioTaskStats* find(const std::string& scenario, const std::string& task) const;
};

// Aggregate records; in exclude mode failed runs leave the means and only
// show up in fail_frac, in cap mode they contribute cap_generations.
SummaryStats summarize(const std::vector<RunRecord>& records, FailureMode mode, int cap_generations);

struct FileMeta {
    std::string config_hash;
    std::uint64_t master_seed = 0;
};

std::string summary_csv(const SummaryStats& stats, const FileMeta& meta);

// Adaption-cost histogram (cost,count) for one scenario.
std::string histogram_csv(const std::vector<RunRecord>& records, const std::string& scenario,
                          const FileMeta& meta);

void write_text_file(const std::string& path, const std::string& content);

void write_records_jsonl(const std::string& path, const std::vector<RunRecord>& records,
                         const FileMeta& meta);

struct ImportedRecords {
    std::vector<RunRecord> records;
    FileMeta meta;
    std::vector<std::string> errors;   // malformed lines, with line numbers
};

ImportedRecords read_records_jsonl(const std::string& path);

} // namespace flexopt::harness
