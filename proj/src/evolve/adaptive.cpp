#include "flexopt/evolve/adaptive.hpp"

namespace flexopt::evolve {

CircuitAdaptiveSystem::CircuitAdaptiveSystem(Population population, Genotype current, GAParams ga,
                                             CircuitParams params, CyclePolicy policy, int threads)
    : pop_(std::move(population)), current_(std::move(current)), ga_(ga), params_(params),
      policy_(policy), threads_(threads) {
    ga_.validate();
    params_.validate();
    if (pop_.empty()) throw ConfigError("adaptive system requires a nonempty population");
}

AdaptStep<Genotype> CircuitAdaptiveSystem::adapt(const Genotype& from, const Task& task, Rng& rng) {
    if (task.env_dim != params_.inputs)
        throw UsageError("task environment does not match circuit inputs");
    const circuit::BooleanGoal goal = circuit::goal_of_task(task);
    const GoalEvaluator eval(goal, params_, policy_);
    const Rng run_rng(rng.next_u64());
    SolveResult result = run_until_solved(pop_, eval, task.perf_threshold, ga_, run_rng, threads_);
    last_trace_ = result.trace;
    if (!result.solved) return AdaptStep<Genotype>::failure(from);
    current_ = result.best;
    return AdaptStep<Genotype>{result.best, static_cast<double>(result.generations), true};
}

bool CircuitAdaptiveSystem::performs(const Genotype& config, const Task& task) const {
    if (task.env_dim != params_.inputs)
        throw UsageError("task environment does not match circuit inputs");
    const circuit::BooleanGoal goal = circuit::goal_of_task(task);
    const GoalEvaluator eval(goal, params_, policy_);
    return circuit::binary_performance(eval.fitness_of(config), task.perf_threshold) == 1;
}

} // namespace flexopt::evolve
