#include "flexopt/evolve/baseline.hpp"

namespace flexopt::evolve {

std::vector<double> estimate_random_baseline(const GAParams& ga, const CircuitParams& params,
                                             const std::vector<circuit::BooleanGoal>& goals,
                                             int n_populations, Rng& rng, CyclePolicy policy,
                                             int threads) {
    if (n_populations < 1) throw UsageError("n_populations must be >= 1");
    std::vector<double> baselines;
    baselines.reserve(goals.size());
    for (std::size_t gi = 0; gi < goals.size(); ++gi) {
        const GoalEvaluator eval(goals[gi], params, policy);
        Rng goal_rng = rng.split(gi);
        double sum = 0.0;
        for (int rep = 0; rep < n_populations; ++rep) {
            Rng pop_rng = goal_rng.split(static_cast<std::uint64_t>(rep));
            const Population pop = init_population(ga, params, pop_rng);
            const std::vector<double> fitness = evaluate_population(pop, eval, threads);
            sum += population_stats(fitness).best_fitness;
        }
        baselines.push_back(sum / n_populations);
    }
    return baselines;
}

} // namespace flexopt::evolve
