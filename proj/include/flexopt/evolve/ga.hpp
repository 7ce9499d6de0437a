#pragma once
// Genetic algorithm over circuit genotypes: elitism, tournament selection,
// single-point crossover, per-bit mutation.
//
// Determinism: every generation derives a child random stream per
// population slot, and fitness reduction runs in slot order, so traces are
// bit-identical no matter how many threads evaluate fitness.

#include <cstdint>
#include <string>
#include <vector>

#include "flexopt/circuit/circuit.hpp"
#include "flexopt/circuit/genotype.hpp"
#include "flexopt/circuit/goals.hpp"
#include "flexopt/circuit/params.hpp"
#include "flexopt/core/rng.hpp"

namespace flexopt::evolve {

using circuit::CircuitParams;
using circuit::CyclePolicy;
using circuit::Genotype;

struct GAParams {
    int pop_size = 1000;
    double mutation_rate = 0.01;     // per-bit flip probability
    double crossover_rate = 0.5;     // probability a child comes from crossover
    int elite_count = 1;
    int tournament_size = 2;
    int max_generations = 2000;

    void validate() const {
        if (pop_size < 1) throw ConfigError("pop_size must be positive");
        if (mutation_rate < 0.0 || mutation_rate > 1.0) throw ConfigError("mutation_rate must lie in [0,1]");
        if (crossover_rate < 0.0 || crossover_rate > 1.0) throw ConfigError("crossover_rate must lie in [0,1]");
        if (elite_count < 0 || elite_count >= pop_size)
            throw ConfigError("elite_count must lie in [0, pop_size)");
        if (tournament_size < 1) throw ConfigError("tournament_size must be positive");
        if (max_generations < 0) throw ConfigError("max_generations must be nonnegative");
    }
};

using Population = std::vector<Genotype>;

// Fitness of genotypes against one goal; caches the packed goal table and
// reuses scratch buffers, so evaluation allocates nothing per genome.
class GoalEvaluator {
public:
    GoalEvaluator(const circuit::BooleanGoal& goal, const CircuitParams& params,
                  CyclePolicy policy = CyclePolicy::settle);

    double fitness_of(const Genotype& genome) const;

    const std::string& label() const { return label_; }
    const CircuitParams& params() const { return params_; }
    double eps() const { return eps_; }
    void set_eps(double eps) { eps_ = eps; }

private:
    CircuitParams params_;
    CyclePolicy policy_;
    std::string label_;
    std::uint64_t goal_mask_ = 0;
    std::uint64_t full_mask_ = 0;
    std::vector<std::uint64_t> input_masks_;
    double eps_ = 1.0;
};

struct GenStats {
    double best_fitness = 0.0;
    double mean_fitness = 0.0;
    int best_index = 0;   // lowest index among fitness ties
};

// pop_size uniform random genomes of genome_bits() bits each.
Population init_population(const GAParams& ga, const CircuitParams& params, Rng& rng);

// Fitness of every genome, in index order.
std::vector<double> evaluate_population(const Population& pop, const GoalEvaluator& eval, int threads = 1);

GenStats population_stats(const std::vector<double>& fitness);

// Next generation bred from the evaluated current one.
Population breed(const Population& pop, const std::vector<double>& fitness, const GAParams& ga, Rng gen_rng);

// Evaluate + breed in one call; stats describe the population that was
// passed in.
std::pair<Population, GenStats> step_generation(const Population& pop, const GoalEvaluator& eval,
                                                const GAParams& ga, Rng gen_rng, int threads = 1);

// Index of the first genome with fitness >= eps, or -1.
int first_qualifying(const std::vector<double>& fitness, double eps);

} // namespace flexopt::evolve
