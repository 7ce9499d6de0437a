#include "flexopt/harness/records.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

#include "json.hpp"

namespace flexopt::harness {

namespace {

// Fixed double formatting shared by all CSV writers, so recomputed files
// compare byte for byte.
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

double median_of(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

} // namespace

std::string RunRecord::to_json_line() const {
    nlohmann::json j;
    j["seed"] = seed;
    j["scenario"] = scenario;
    j["task"] = task_id;
    j["pre"] = pre;
    j["post"] = post;
    j["ada"] = adaption_cost;
    j["reco"] = reconfig_cost;
    j["solved"] = solved;
    j["wall"] = wall_time;
    return j.dump();
}

RunRecord RunRecord::from_json_line(const std::string& line) {
    const nlohmann::json j = nlohmann::json::parse(line);
    RunRecord r;
    r.seed = j.at("seed").get<std::uint64_t>();
    r.scenario = j.at("scenario").get<std::string>();
    r.task_id = j.at("task").get<std::string>();
    r.pre = j.at("pre").get<std::string>();
    r.post = j.at("post").get<std::string>();
    r.adaption_cost = j.at("ada").get<int>();
    r.reconfig_cost = j.at("reco").get<int>();
    r.solved = j.at("solved").get<bool>();
    r.wall_time = j.at("wall").get<double>();
    if (r.scenario != "FG" && r.scenario != "MVG")
        throw UsageError("record scenario must be FG or MVG");
    return r;
}

void RunRecord::validate(const ExperimentConfig& cfg) const {
    if (reconfig_cost < 0 || reconfig_cost > cfg.circuit.genome_bits())
        throw UsageError("record reconfiguration cost exceeds genome length");
    if (adaption_cost < 0 || adaption_cost > cfg.ga.max_generations)
        throw UsageError("record adaption cost exceeds the generation cap");
}

const ScenarioTaskStats* SummaryStats::find(const std::string& scenario, const std::string& task) const {
    for (const auto& row : rows)
        if (row.scenario == scenario && row.task == task) return &row;
    return nullptr;
}

SummaryStats summarize(const std::vector<RunRecord>& records, FailureMode mode, int cap_generations) {
    // Cells keyed by (scenario, task); scenario-wide cells keyed with "ALL".
    // Row order: FG rows first, each scenario's per-task rows in first-seen
    // order followed by its ALL row.
    struct Cell {
        std::vector<double> ada;
        std::vector<double> reco;
        std::size_t n = 0;
        std::size_t failed = 0;
    };
    std::map<std::string, std::map<std::string, Cell>> cells;
    std::map<std::string, std::vector<std::string>> task_order;
    for (const auto& r : records) {
        auto& order = task_order[r.scenario];
        if (std::find(order.begin(), order.end(), r.task_id) == order.end()) order.push_back(r.task_id);
        for (const std::string& key : {r.task_id, std::string("ALL")}) {
            Cell& cell = cells[r.scenario][key];
            ++cell.n;
            cell.reco.push_back(static_cast<double>(r.reconfig_cost));
            if (r.solved)
                cell.ada.push_back(static_cast<double>(r.adaption_cost));
            else if (mode == FailureMode::cap)
                cell.ada.push_back(static_cast<double>(cap_generations));
            else
                ++cell.failed;
        }
    }

    SummaryStats out;
    for (const std::string& scenario : {std::string("FG"), std::string("MVG")}) {
        if (!cells.count(scenario)) continue;
        auto emit = [&](const std::string& task, const Cell& cell) {
            ScenarioTaskStats row;
            row.scenario = scenario;
            row.task = task;
            row.n = cell.n;
            row.fail_frac = cell.n == 0 ? 0.0 : static_cast<double>(cell.failed) / static_cast<double>(cell.n);
            const Estimate ada = Estimate::from_samples(cell.ada);
            row.mean_ada = ada.mean;
            row.stderr_ada = ada.std_error;
            row.median_ada = median_of(cell.ada);
            row.mean_reco = Estimate::from_samples(cell.reco).mean;
            out.rows.push_back(std::move(row));
        };
        for (const auto& task : task_order[scenario]) emit(task, cells[scenario][task]);
        emit("ALL", cells[scenario]["ALL"]);
    }

    const ScenarioTaskStats* fg = out.find("FG", "ALL");
    const ScenarioTaskStats* mvg = out.find("MVG", "ALL");
    if (fg && mvg && mvg->mean_ada > 0.0) out.ada_cost_ratio_fg_mvg = fg->mean_ada / mvg->mean_ada;
    if (fg && mvg && mvg->mean_reco > 0.0) out.reco_cost_ratio_fg_mvg = fg->mean_reco / mvg->mean_reco;
    return out;
}

namespace {
std::string meta_comment(const FileMeta& meta) {
    return "# config_hash=" + meta.config_hash + " master_seed=" + std::to_string(meta.master_seed) + "\n";
}
} // namespace

std::string summary_csv(const SummaryStats& stats, const FileMeta& meta) {
    std::string out = meta_comment(meta);
    out += "scenario,task,mean_ada,stderr_ada,mean_reco,fail_frac,n\n";
    for (const auto& row : stats.rows) {
        out += row.scenario + "," + row.task + "," + fmt(row.mean_ada) + "," + fmt(row.stderr_ada) + "," +
               fmt(row.mean_reco) + "," + fmt(row.fail_frac) + "," + std::to_string(row.n) + "\n";
    }
    return out;
}

std::string histogram_csv(const std::vector<RunRecord>& records, const std::string& scenario,
                          const FileMeta& meta) {
    std::map<int, std::size_t> counts;
    for (const auto& r : records)
        if (r.scenario == scenario && r.solved) ++counts[r.adaption_cost];
    std::string out = meta_comment(meta);
    out += "ada_cost,count\n";
    for (const auto& [cost, count] : counts)
        out += std::to_string(cost) + "," + std::to_string(count) + "\n";
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw ConfigError("cannot open '" + path + "' for writing");
    f << content;
    if (!f) throw ConfigError("write failed for '" + path + "'");
}

void write_records_jsonl(const std::string& path, const std::vector<RunRecord>& records,
                         const FileMeta& meta) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw ConfigError("cannot open '" + path + "' for writing");
    nlohmann::json m;
    m["meta"] = true;
    m["config_hash"] = meta.config_hash;
    m["master_seed"] = meta.master_seed;
    f << m.dump() << '\n';
    for (const auto& r : records) {
        f << r.to_json_line() << '\n';
        if (!f) throw ConfigError("write failed for '" + path + "'");
    }
}

ImportedRecords read_records_jsonl(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open records file '" + path + "'");
    ImportedRecords out;
    std::string line;
    std::size_t line_no = 0;
    bool meta_seen = false;
    while (std::getline(f, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            if (!meta_seen) {
                const nlohmann::json j = nlohmann::json::parse(line);
                if (!j.contains("meta") || !j.contains("config_hash") || !j.contains("master_seed"))
                    throw UsageError("first line must be the metadata object");
                out.meta.config_hash = j.at("config_hash").get<std::string>();
                out.meta.master_seed = j.at("master_seed").get<std::uint64_t>();
                meta_seen = true;
                continue;
            }
            out.records.push_back(RunRecord::from_json_line(line));
        } catch (const std::exception& e) {
            out.errors.push_back("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!meta_seen) out.errors.push_back("line 1: missing metadata line");
    if (out.records.empty() && out.errors.empty()) out.errors.push_back("no records found");
    return out;
}

} // namespace flexopt::harness
