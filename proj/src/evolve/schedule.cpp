#include "flexopt/evolve/schedule.hpp"

#include <string>

namespace flexopt::evolve {

namespace {
// Stream 0 feeds the schedule walker; streams g >= 1 feed generation g;
// high streams feed population resets at goal switches.
constexpr std::uint64_t kWalkerStream = 0;
constexpr std::uint64_t kGenStreamBase = 1;
constexpr std::uint64_t kResetStreamBase = std::uint64_t{1} << 40;
} // namespace

const char* schedule_name(ScheduleKind kind) { return kind == ScheduleKind::FG ? "FG" : "MVG"; }

ScheduleKind schedule_from_name(std::string_view name) {
    if (name == "FG") return ScheduleKind::FG;
    if (name == "MVG") return ScheduleKind::MVG;
    throw UsageError("unknown schedule '" + std::string(name) + "' (expected FG or MVG)");
}

void Schedule::validate(std::size_t n_tasks) const {
    if (epoch_len < 1) throw ConfigError("schedule epoch length must be >= 1");
    if (kind == ScheduleKind::FG) return;
    if (transition.size() != n_tasks) throw ConfigError("transition matrix must have one row per task");
    constexpr double tol = 1e-9;
    for (const auto& row : transition) {
        if (row.size() != n_tasks) throw ConfigError("transition matrix rows must match task count");
        double sum = 0.0;
        for (double p : row) {
            if (p < 0.0) throw ConfigError("transition probabilities must be nonnegative");
            sum += p;
        }
        if (sum < 1.0 - tol || sum > 1.0 + tol) throw ConfigError("transition matrix rows must sum to 1");
    }
}

ScheduleWalker::ScheduleWalker(const Schedule& schedule, std::size_t n_tasks, Rng rng)
    : schedule_(schedule), n_tasks_(n_tasks), rng_(rng) {
    schedule.validate(n_tasks);
    if (n_tasks == 0) throw ConfigError("schedule requires at least one task");
}

std::size_t ScheduleWalker::next() {
    if (schedule_.kind == ScheduleKind::FG) return current_;
    current_ = detail::draw_weighted(schedule_.transition[current_], rng_);
    return current_;
}

namespace {

TraceRow make_row(int gen, const std::string& goal, const GenStats& stats, const Population& pop) {
    TraceRow row;
    row.gen = gen;
    row.goal = goal;
    row.best_f = stats.best_fitness;
    row.mean_f = stats.mean_fitness;
    row.best_hash = circuit::genotype_hash(pop[static_cast<std::size_t>(stats.best_index)]);
    return row;
}

} // namespace

SolveResult run_until_solved(Population& pop, const GoalEvaluator& eval, double eps, const GAParams& ga,
                             Rng run_rng, int threads) {
    ga.validate();
    SolveResult result;
    std::vector<double> fitness = evaluate_population(pop, eval, threads);
    result.trace.rows.push_back(make_row(0, eval.label(), population_stats(fitness), pop));
    int hit = first_qualifying(fitness, eps);
    if (hit >= 0) {
        result.solved = true;
        result.generations = 0;
        result.best = pop[static_cast<std::size_t>(hit)];
        result.trace.solved = true;
        result.trace.final_best = result.best;
        return result;
    }
    for (int gen = 1; gen <= ga.max_generations; ++gen) {
        pop = breed(pop, fitness, ga, run_rng.split(kGenStreamBase + static_cast<std::uint64_t>(gen) - 1));
        fitness = evaluate_population(pop, eval, threads);
        result.trace.rows.push_back(make_row(gen, eval.label(), population_stats(fitness), pop));
        hit = first_qualifying(fitness, eps);
        if (hit >= 0) {
            result.solved = true;
            result.generations = gen;
            result.best = pop[static_cast<std::size_t>(hit)];
            result.trace.solved = true;
            result.trace.generations_used = gen;
            result.trace.final_best = result.best;
            return result;
        }
    }
    result.solved = false;
    result.generations = ga.max_generations;
    const GenStats stats = population_stats(fitness);
    result.best = pop[static_cast<std::size_t>(stats.best_index)];
    result.trace.solved = false;
    result.trace.generations_used = ga.max_generations;
    result.trace.final_best = result.best;
    return result;
}

ScheduleResult run_schedule(Population& pop, const Schedule& schedule,
                            const std::vector<GoalEvaluator>& goals, const GAParams& ga,
                            int total_generations, Rng run_rng, int threads) {
    ga.validate();
    schedule.validate(goals.size());
    if (total_generations < 0) throw ConfigError("total_generations must be nonnegative");

    ScheduleWalker walker(schedule, goals.size(), run_rng.split(kWalkerStream));
    ScheduleResult result;
    std::size_t active = walker.current();

    std::vector<double> fitness;
    for (int gen = 0; gen <= total_generations; ++gen) {
        if (gen > 0 && gen < total_generations && gen % schedule.epoch_len == 0) {
            active = walker.next();
            if (schedule.reset_on_switch) {
                const std::size_t n_bits = pop[0].size();
                Rng reset_rng = run_rng.split(kResetStreamBase + static_cast<std::uint64_t>(gen));
                for (std::size_t i = 0; i < pop.size(); ++i) {
                    Rng slot = reset_rng.split(i);
                    pop[i] = circuit::random_genotype(static_cast<int>(n_bits), slot);
                }
            }
        }
        fitness = evaluate_population(pop, goals[active], threads);
        const GenStats stats = population_stats(fitness);
        result.trace.rows.push_back(make_row(gen, goals[active].label(), stats, pop));
        if (gen == total_generations) {
            result.final_goal = active;
            result.final_best = pop[static_cast<std::size_t>(stats.best_index)];
            result.trace.generations_used = total_generations;
            result.trace.final_best = result.final_best;
            break;
        }
        pop = breed(pop, fitness, ga, run_rng.split(kGenStreamBase + static_cast<std::uint64_t>(gen)));
    }
    return result;
}

} // namespace flexopt::evolve
