#pragma once
// Flexibility measures over adaptive systems and task contexts.
//
// Reconfigurability and adaptability are reported as negative costs, so
// larger is always better and no reciprocals appear.  Estimators return the
// mean over successful trials together with the failed-trial fraction.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "flexopt/core/estimate.hpp"
#include "flexopt/core/system.hpp"
#include "flexopt/core/task.hpp"

namespace flexopt {

// -----------------------------------------------------------------------------
// Minimal reconfiguration cost between two tasks.
// -----------------------------------------------------------------------------

// Exact mode: enumerate the configuration space, filter the solution set of
// each task, and minimize the pairwise reconfiguration cost.  An empty
// solution set on either side yields infinite cost.
template <class Config>
double min_reconfig_cost_exact(const AdaptiveSystem<Config>& sys, const Task& t1, const Task& t2) {
    if (!sys.can_enumerate())
        throw UsageError("exact minimal reconfiguration cost requires an enumerable system");
    const std::vector<Config> all = sys.enumerate_configs();
    std::vector<Config> sols1, sols2;
    for (const Config& c : all) {
        if (sys.performs(c, t1)) sols1.push_back(c);
        if (sys.performs(c, t2)) sols2.push_back(c);
    }
    if (sols1.empty() || sols2.empty()) return kInfiniteCost;
    double best = kInfiniteCost;
    for (const Config& a : sols1)
        for (const Config& b : sols2) best = std::min(best, sys.reconfig_cost(a, b));
    return best;
}

// Approximate mode: minimize over caller-supplied samples of the two solution
// sets.  The result is an upper bound on the true minimum (the samples are
// subsets), infinite when either sample is empty.
template <class Config>
double min_reconfig_cost_upper_bound(const AdaptiveSystem<Config>& sys,
                                     std::span<const Config> sampled_solutions1,
                                     std::span<const Config> sampled_solutions2) {
    if (sampled_solutions1.empty() || sampled_solutions2.empty()) return kInfiniteCost;
    double best = kInfiniteCost;
    for (const Config& a : sampled_solutions1)
        for (const Config& b : sampled_solutions2) best = std::min(best, sys.reconfig_cost(a, b));
    return best;
}

// -----------------------------------------------------------------------------
// Reconfigurability of a system in a context.
// -----------------------------------------------------------------------------

// Negative worst-case pairwise minimal reconfiguration cost.  Any task pair
// with infinite cost drives the result to -infinity.
template <class Config>
double worst_case_reconfigurability(const AdaptiveSystem<Config>& sys, const TaskContext& ctx) {
    ctx.validate();
    double worst = 0.0;
    for (const Task& a : ctx.tasks)
        for (const Task& b : ctx.tasks) worst = std::max(worst, min_reconfig_cost_exact(sys, a, b));
    return -worst;
}

namespace detail {
// Marginal task distribution for drawing independent tasks from a context:
// the declared weights in iid mode, uniform in markov mode (matching the
// uniform initial task of markov histories).
inline std::vector<double> independent_task_weights(const TaskContext& ctx) {
    if (ctx.sampling.kind == Sampling::Kind::iid) return ctx.sampling.weights;
    return std::vector<double>(ctx.tasks.size(), 1.0 / static_cast<double>(ctx.tasks.size()));
}
} // namespace detail

// Exact expectation of -min-reco over two independent tasks.
template <class Config>
double average_case_reconfigurability_exact(const AdaptiveSystem<Config>& sys, const TaskContext& ctx) {
    ctx.validate();
    const std::vector<double> w = detail::independent_task_weights(ctx);
    double expected = 0.0;
    for (std::size_t i = 0; i < ctx.tasks.size(); ++i) {
        for (std::size_t j = 0; j < ctx.tasks.size(); ++j) {
            const double p = w[i] * w[j];
            if (p == 0.0) continue;
            const double c = min_reconfig_cost_exact(sys, ctx.tasks[i], ctx.tasks[j]);
            if (c == kInfiniteCost) return -kInfiniteCost;
            expected += p * c;
        }
    }
    return -expected;
}

// Monte Carlo estimate of the average-case reconfigurability: mean of
// -min-reco over pairs of independent tasks.  Pairs with infinite cost are
// reported via the failure fraction.
template <class Config>
Estimate average_case_reconfigurability_mc(const AdaptiveSystem<Config>& sys, const TaskContext& ctx,
                                           std::size_t n_samples, Rng& rng) {
    ctx.validate();
    if (n_samples == 0) throw UsageError("n_samples must be >= 1");
    const std::vector<double> w = detail::independent_task_weights(ctx);
    std::vector<double> costs;
    costs.reserve(n_samples);
    std::size_t failed = 0;
    for (std::size_t s = 0; s < n_samples; ++s) {
        Rng trial = rng.split(s);
        const std::size_t i = detail::draw_weighted(w, trial);
        const std::size_t j = detail::draw_weighted(w, trial);
        const double c = min_reconfig_cost_exact(sys, ctx.tasks[i], ctx.tasks[j]);
        if (c == kInfiniteCost)
            ++failed;
        else
            costs.push_back(c);
    }
    return Estimate::from_samples(costs, failed).negated();
}

// -----------------------------------------------------------------------------
// Adaptability.
// -----------------------------------------------------------------------------

// Negative expected adaption cost after a random task history of length n.
// Each trial clones the system, drives it through a sampled history starting
// from its initial configuration, then adapts to one further task drawn from
// the context and records that adaption cost.  A failed adapt anywhere marks
// the trial failed.
template <class Config>
Estimate adaptability(const AdaptiveSystem<Config>& sys, const TaskContext& ctx, std::size_t history_len,
                      std::size_t n_trials, Rng& rng) {
    ctx.validate();
    if (n_trials == 0) throw UsageError("n_trials must be >= 1");
    std::vector<double> costs;
    costs.reserve(n_trials);
    std::size_t failed = 0;
    for (std::size_t trial = 0; trial < n_trials; ++trial) {
        Rng trial_rng = rng.split(trial);
        ContextSampler sampler(ctx, trial_rng);
        auto instance = sys.clone();
        Config config = instance->initial_config();
        bool trial_failed = false;
        for (std::size_t i = 0; i < history_len; ++i) {
            const Task& task = ctx.tasks[sampler.next()];
            AdaptStep<Config> step = instance->adapt(config, task, trial_rng);
            if (!step.ok) {
                trial_failed = true;
                break;
            }
            config = std::move(step.config);
        }
        if (trial_failed) {
            ++failed;
            continue;
        }
        const Task& test_task = ctx.tasks[sampler.next()];
        AdaptStep<Config> step = instance->adapt(config, test_task, trial_rng);
        if (!step.ok)
            ++failed;
        else
            costs.push_back(step.cost);
    }
    return Estimate::from_samples(costs, failed).negated();
}

// -----------------------------------------------------------------------------
// Total cost of a task sequence.
// -----------------------------------------------------------------------------

struct TotalCostStep {
    std::string task_id;
    double adaption_cost = 0.0;
    double execution_cost = 0.0;
};

struct TotalCostResult {
    double total = 0.0;
    std::vector<TotalCostStep> steps;
    bool exec_cost_modeled = false;   // false means run costs were taken as 0
};

// Sum of per-task adaption plus execution cost, adapting sequentially from
// the system's initial configuration.  A failed adapt makes the total
// infinite; the breakdown covers the steps executed up to the failure.
template <class Config>
TotalCostResult total_cost(const AdaptiveSystem<Config>& sys, const std::vector<Task>& sequence, Rng& rng) {
    if (sequence.empty()) throw UsageError("task sequence must be nonempty");
    TotalCostResult result;
    auto instance = sys.clone();
    result.exec_cost_modeled = instance->has_exec_cost_model();
    Config config = instance->initial_config();
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        Rng step_rng = rng.split(i);
        AdaptStep<Config> step = instance->adapt(config, sequence[i], step_rng);
        if (!step.ok) {
            result.steps.push_back({sequence[i].id, kInfiniteCost, 0.0});
            result.total = kInfiniteCost;
            return result;
        }
        config = std::move(step.config);
        const double run = instance->run_cost(config, sequence[i]);
        result.steps.push_back({sequence[i].id, step.cost, run});
        result.total += step.cost + run;
    }
    return result;
}

// -----------------------------------------------------------------------------
// Task richness and task diversity.
// -----------------------------------------------------------------------------

namespace detail {

template <class Config>
struct StreamedPrefix {
    std::size_t n_tasks = 0;       // longest prefix with total cost < budget
    double path_length = 1.0;      // 1 + sum of consecutive task distances over that prefix
    bool truncated = false;        // hit max_tasks while still under budget
};

// Streams tasks from the context, accumulating total cost, until the budget
// is exhausted (an adapt failure counts as infinite cost and stops the
// stream).  Distances are accumulated when a distance measure is given.
template <class Config>
StreamedPrefix<Config> stream_until_budget(const AdaptiveSystem<Config>& sys, const TaskContext& ctx,
                                           double budget, const TaskDistance* dist, Rng trial_rng,
                                           std::size_t max_tasks) {
    StreamedPrefix<Config> out;
    ContextSampler sampler(ctx, trial_rng);
    auto instance = sys.clone();
    Config config = instance->initial_config();
    double spent = 0.0;
    double path = 1.0;
    const Task* prev = nullptr;
    for (std::size_t i = 0; i < max_tasks; ++i) {
        const Task& task = ctx.tasks[sampler.next()];
        AdaptStep<Config> step = instance->adapt(config, task, trial_rng);
        if (!step.ok) return out;
        config = std::move(step.config);
        spent += step.cost + instance->run_cost(config, task);
        if (!(spent < budget)) return out;
        if (dist != nullptr && prev != nullptr) path += (*dist)(*prev, task);
        prev = &task;
        out.n_tasks = i + 1;
        out.path_length = path;
    }
    out.truncated = true;
    return out;
}

} // namespace detail

// Expected number of tasks performable with total cost strictly under the
// budget.  Per-trial streams are seeded from the trial index, so matched
// master seeds give identical streams across budget values.
template <class Config>
Estimate task_richness(const AdaptiveSystem<Config>& sys, const TaskContext& ctx, const CostBudget& budget,
                       std::size_t n_trials, Rng& rng, std::size_t max_tasks = 100000) {
    ctx.validate();
    if (n_trials == 0) throw UsageError("n_trials must be >= 1");
    std::vector<double> counts;
    counts.reserve(n_trials);
    for (std::size_t trial = 0; trial < n_trials; ++trial) {
        auto prefix = detail::stream_until_budget<Config>(sys, ctx, budget.budget, nullptr,
                                                          rng.split(trial), max_tasks);
        counts.push_back(static_cast<double>(prefix.n_tasks));
    }
    return Estimate::from_samples(counts);
}

// Distance-weighted generalization of task richness: expected path length
// 1 + sum d(T_i, T_{i+1}) of the longest affordable prefix.
template <class Config>
Estimate task_diversity(const AdaptiveSystem<Config>& sys, const TaskContext& ctx, const TaskDistance& dist,
                        const CostBudget& budget, std::size_t n_trials, Rng& rng,
                        std::size_t max_tasks = 100000) {
    ctx.validate();
    if (!dist.fn) throw UsageError("task distance function must be set");
    if (n_trials == 0) throw UsageError("n_trials must be >= 1");
    std::vector<double> lengths;
    lengths.reserve(n_trials);
    for (std::size_t trial = 0; trial < n_trials; ++trial) {
        auto prefix = detail::stream_until_budget<Config>(sys, ctx, budget.budget, &dist,
                                                          rng.split(trial), max_tasks);
        lengths.push_back(prefix.path_length);
    }
    return Estimate::from_samples(lengths);
}

// -----------------------------------------------------------------------------
// Pareto dominance.
// -----------------------------------------------------------------------------

// True iff a is componentwise >= b with at least one strict improvement.
inline bool pareto_dominates(std::span<const double> perf_a, std::span<const double> perf_b) {
    if (perf_a.size() != perf_b.size() || perf_a.empty())
        throw UsageError("pareto_dominates requires equal-length nonempty vectors");
    bool strict = false;
    for (std::size_t i = 0; i < perf_a.size(); ++i) {
        if (perf_a[i] < perf_b[i]) return false;
        if (perf_a[i] > perf_b[i]) strict = true;
    }
    return strict;
}

} // namespace flexopt
