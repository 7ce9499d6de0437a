#pragma once
// Random-population fitness baseline and normalized fitness.
//
// F_r is the average maximal fitness across fresh uniform-random populations
// of the run's size.  F_N = (F - F_r) / (1 - F_r) rescales best fitness
// against it, and the performance threshold eps is placed so that fitness
// above eps is exactly normalized fitness above the configured level.

#include <vector>

#include "flexopt/evolve/ga.hpp"

namespace flexopt::evolve {

struct NormalizedFitness {
    double best = 0.0;       // F
    double baseline = 0.0;   // F_r

    double normalized() const {
        if (baseline >= 1.0) throw UsageError("normalized fitness undefined: baseline saturates at 1");
        return (best - baseline) / (1.0 - baseline);
    }
};

// eps such that fitness > eps iff normalized fitness > fn_threshold.
inline double eps_from_baseline(double baseline, double fn_threshold) {
    if (baseline < 0.0 || baseline > 1.0) throw UsageError("baseline must lie in [0,1]");
    if (fn_threshold <= 0.0 || fn_threshold >= 1.0)
        throw UsageError("normalized-fitness threshold must lie in (0,1)");
    return baseline + (1.0 - baseline) * fn_threshold;
}

// Mean over n_populations of the max fitness in a fresh random population of
// ga.pop_size, per goal.
std::vector<double> estimate_random_baseline(const GAParams& ga, const CircuitParams& params,
                                             const std::vector<circuit::BooleanGoal>& goals,
                                             int n_populations, Rng& rng,
                                             CyclePolicy policy = CyclePolicy::settle, int threads = 1);

} // namespace flexopt::evolve
