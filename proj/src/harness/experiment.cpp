#include "flexopt/harness/experiment.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <set>
#include <thread>

#include "flexopt/evolve/baseline.hpp"

namespace flexopt::harness {

namespace {

// Stream tags under a cell seed.
constexpr std::uint64_t kInitStream = 0;
constexpr std::uint64_t kPretrainStream = 1;
constexpr std::uint64_t kAdaptStreamBase = 2;

constexpr std::uint64_t kBaselineTag = 0xba5e;

std::uint64_t scenario_tag(evolve::ScheduleKind kind) {
    return kind == evolve::ScheduleKind::FG ? 1 : 2;
}

std::uint64_t label_stream(const std::string& label) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::vector<circuit::BooleanGoal> goals_of(const std::vector<circuit::GoalFamily>& families) {
    std::vector<circuit::BooleanGoal> goals;
    goals.reserve(families.size());
    for (const auto& fam : families) goals.push_back(circuit::modular_goal(fam));
    return goals;
}

} // namespace

std::map<std::string, double> estimate_baselines(const ExperimentConfig& cfg) {
    cfg.validate();
    std::map<std::string, circuit::BooleanGoal> unique;
    for (const auto& goal : goals_of(cfg.training)) unique.emplace(goal.label, goal);
    for (const auto& goal : goals_of(cfg.test)) unique.emplace(goal.label, goal);

    std::map<std::string, double> baselines;
    const Rng base(derive_seed(cfg.master_seed, kBaselineTag));
    for (const auto& [label, goal] : unique) {
        // Per-goal stream keyed by the label so list order cannot matter.
        Rng goal_rng = base.split(label_stream(label));
        const std::vector<double> fr = evolve::estimate_random_baseline(
            cfg.ga, cfg.circuit, {goal}, cfg.baseline_populations, goal_rng, cfg.cycle_policy,
            cfg.resolved_threads());
        baselines[label] = fr.front();
    }
    return baselines;
}

std::map<std::string, double> eps_from_baselines(const std::map<std::string, double>& baselines,
                                                 double fn_threshold) {
    std::map<std::string, double> eps;
    for (const auto& [label, fr] : baselines) eps[label] = evolve::eps_from_baseline(fr, fn_threshold);
    return eps;
}

PretrainedCell pretrain_cell(const ExperimentConfig& cfg, const std::map<std::string, double>& eps,
                             std::uint64_t seed, evolve::ScheduleKind kind, int threads) {
    const Rng cell_rng(derive_seed(seed, scenario_tag(kind)));

    Rng init_rng = cell_rng.split(kInitStream);
    evolve::Population pop = evolve::init_population(cfg.ga, cfg.circuit, init_rng);

    std::vector<evolve::GoalEvaluator> train_evals;
    for (const auto& goal : goals_of(cfg.training)) {
        evolve::GoalEvaluator eval(goal, cfg.circuit, cfg.cycle_policy);
        eval.set_eps(eps.at(goal.label));
        train_evals.push_back(std::move(eval));
    }

    evolve::Schedule schedule;
    schedule.kind = kind;
    schedule.epoch_len = cfg.epoch_len;
    schedule.reset_on_switch = cfg.reset_population_on_switch;
    if (kind == evolve::ScheduleKind::MVG) {
        const std::size_t n = cfg.training.size();
        schedule.transition.assign(n, std::vector<double>(n, 1.0 / static_cast<double>(n)));
    }

    evolve::ScheduleResult result = evolve::run_schedule(
        pop, schedule, train_evals, cfg.ga, cfg.pretrain_generations(), cell_rng.split(kPretrainStream),
        threads);

    PretrainedCell cell;
    cell.population = std::move(pop);
    cell.best = result.final_best;
    cell.final_goal_id = std::string(circuit::kTrainPrefix) + train_evals[result.final_goal].label();
    cell.trace = std::move(result.trace);
    return cell;
}

AdaptOutcome adapt_cell_to_task(const ExperimentConfig& cfg, const PretrainedCell& cell,
                                const std::map<std::string, double>& eps, std::uint64_t seed,
                                evolve::ScheduleKind kind, std::size_t task_index, int threads) {
    if (task_index >= cfg.test.size()) throw UsageError("test task index out of range");
    const Rng cell_rng(derive_seed(seed, scenario_tag(kind)));

    const circuit::BooleanGoal goal = circuit::modular_goal(cfg.test[task_index]);
    evolve::GoalEvaluator eval(goal, cfg.circuit, cfg.cycle_policy);
    const double task_eps = eps.at(goal.label);
    eval.set_eps(task_eps);

    evolve::Population pop = cell.population;
    const auto t0 = std::chrono::steady_clock::now();
    evolve::SolveResult solve = evolve::run_until_solved(pop, eval, task_eps, cfg.ga,
                                                         cell_rng.split(kAdaptStreamBase + task_index),
                                                         threads);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t0;

    AdaptOutcome out;
    out.record.seed = seed;
    out.record.scenario = evolve::schedule_name(kind);
    out.record.task_id = std::string(circuit::kTestPrefix) + goal.label;
    out.record.pre = circuit::to_bit_string(cell.best);
    out.record.post = circuit::to_bit_string(solve.best);
    out.record.adaption_cost = solve.generations;
    out.record.reconfig_cost = circuit::hamming(cell.best, solve.best);
    out.record.solved = solve.solved;
    out.record.wall_time = elapsed.count();
    out.trace = std::move(solve.trace);
    return out;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, const ProgressFn& progress) {
    cfg.validate();
    auto report_progress = [&](const std::string& msg) {
        if (progress) progress(msg);
    };

    ExperimentResult result;
    {
        std::set<std::string> seen;
        for (const auto& fam : cfg.test)
            if (!seen.insert(fam.name()).second)
                result.warnings.push_back("duplicate family in test list: " + fam.name());
    }

    report_progress("estimating random-population baselines");
    result.baseline_by_family = estimate_baselines(cfg);
    result.eps_by_family = eps_from_baselines(result.baseline_by_family, cfg.fn_threshold);

    struct Cell {
        std::uint64_t seed;
        evolve::ScheduleKind kind;
    };
    std::vector<Cell> cells;
    for (std::uint64_t seed : cfg.seeds)
        for (auto kind : {evolve::ScheduleKind::FG, evolve::ScheduleKind::MVG})
            cells.push_back({seed, kind});

    // Slots indexed by (cell, task): output order never depends on pool
    // scheduling.
    std::vector<std::vector<RunRecord>> slots(cells.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};

    auto worker = [&] {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= cells.size()) return;
            const Cell& cell = cells[c];
            const PretrainedCell trained = pretrain_cell(cfg, result.eps_by_family, cell.seed, cell.kind, 1);
            std::vector<RunRecord>& out = slots[c];
            out.reserve(cfg.test.size());
            for (std::size_t ti = 0; ti < cfg.test.size(); ++ti)
                out.push_back(adapt_cell_to_task(cfg, trained, result.eps_by_family, cell.seed, cell.kind,
                                                 ti, 1)
                                  .record);
            report_progress("cell " + std::to_string(done.fetch_add(1) + 1) + "/" +
                            std::to_string(cells.size()) + " done (" +
                            std::string(evolve::schedule_name(cell.kind)) + ")");
        }
    };

    const int n_threads = std::min<int>(cfg.resolved_threads(), static_cast<int>(cells.size()));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_threads));
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (auto& slot : slots)
        for (auto& record : slot) result.records.push_back(std::move(record));

    result.stats = summarize(result.records, cfg.failure_mode, cfg.ga.max_generations);
    result.report = flexibility_report(result.records, cfg);
    return result;
}

void write_outputs(const ExperimentResult& result, const ExperimentConfig& cfg) {
    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);
    const FileMeta meta{cfg.hash(), cfg.master_seed};
    const fs::path dir(cfg.out_dir);

    // Records first: aggregates are derivable, raw records are not.
    write_records_jsonl((dir / "records.jsonl").string(), result.records, meta);
    write_text_file((dir / "summary.csv").string(), summary_csv(result.stats, meta));
    write_text_file((dir / "hist_FG.csv").string(), histogram_csv(result.records, "FG", meta));
    write_text_file((dir / "hist_MVG.csv").string(), histogram_csv(result.records, "MVG", meta));
    write_text_file((dir / "report.json").string(), result.report.to_json(meta));
}

} // namespace flexopt::harness
