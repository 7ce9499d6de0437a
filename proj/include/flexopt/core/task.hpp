#pragma once
// Tasks, task contexts, and task histories.
//
// A task bundles an environment-size descriptor, a feasibility predicate, a
// goal oracle mapping initial states to target states, and a performance
// threshold.  A context is a nonempty ordered task set plus the probability
// structure that generates task sequences: independent draws from a weight
// vector, or a random walk on a row-stochastic transition matrix.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flexopt/core/rng.hpp"

namespace flexopt {

// States are packed bit vectors; env_dim gives the number of meaningful bits.
using State = std::uint64_t;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Task {
    std::string id;
    int env_dim = 1;
    std::function<bool(State)> feasible;   // null means all states feasible
    std::function<State(State)> goal;      // total on the declared input set
    double perf_threshold = 1.0;           // in [0, 1]
    std::string distance_tag;

    void validate() const {
        if (env_dim < 1) throw ConfigError("task '" + id + "': env_dim must be positive");
        if (perf_threshold < 0.0 || perf_threshold > 1.0)
            throw ConfigError("task '" + id + "': perf_threshold must lie in [0,1]");
    }
};

struct Sampling {
    enum class Kind { iid, markov };
    Kind kind = Kind::iid;
    std::vector<double> weights;                    // iid mode
    std::vector<std::vector<double>> transition;    // markov mode, row-stochastic

    static Sampling iid_uniform(std::size_t n) {
        Sampling s;
        s.kind = Kind::iid;
        s.weights.assign(n, 1.0 / static_cast<double>(n));
        return s;
    }

    static Sampling iid(std::vector<double> w) {
        Sampling s;
        s.kind = Kind::iid;
        s.weights = std::move(w);
        return s;
    }

    static Sampling markov(std::vector<std::vector<double>> rows) {
        Sampling s;
        s.kind = Kind::markov;
        s.transition = std::move(rows);
        return s;
    }
};

struct TaskContext {
    std::vector<Task> tasks;
    Sampling sampling;

    void validate() const {
        if (tasks.empty()) throw ConfigError("task context must contain at least one task");
        for (const auto& t : tasks) t.validate();
        constexpr double tol = 1e-9;
        if (sampling.kind == Sampling::Kind::iid) {
            if (sampling.weights.size() != tasks.size())
                throw ConfigError("sampling weights must match task count");
            double sum = 0.0;
            for (double w : sampling.weights) {
                if (w < 0.0) throw ConfigError("sampling weights must be nonnegative");
                sum += w;
            }
            if (sum < 1.0 - tol || sum > 1.0 + tol)
                throw ConfigError("sampling weights must sum to 1");
        } else {
            if (sampling.transition.size() != tasks.size())
                throw ConfigError("transition matrix must have one row per task");
            for (const auto& row : sampling.transition) {
                if (row.size() != tasks.size())
                    throw ConfigError("transition matrix rows must match task count");
                double sum = 0.0;
                for (double p : row) {
                    if (p < 0.0) throw ConfigError("transition probabilities must be nonnegative");
                    sum += p;
                }
                if (sum < 1.0 - tol || sum > 1.0 + tol)
                    throw ConfigError("transition matrix rows must sum to 1");
            }
        }
    }

    std::size_t find(const std::string& task_id) const {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            if (tasks[i].id == task_id) return i;
        throw UsageError("unknown task id '" + task_id + "'");
    }
};

struct TaskHistory {
    std::vector<std::string> entries;   // task ids; empty history is valid

    std::size_t length() const { return entries.size(); }

    void validate(const TaskContext& ctx) const {
        for (const auto& id : entries) ctx.find(id);
    }
};

struct CostBudget {
    double budget;

    explicit CostBudget(double b) : budget(b) {
        if (!(b > 0.0)) throw ConfigError("cost budget must be positive");
    }
};

// Symmetric nonnegative distance on tasks with d(T,T) = 0.
struct TaskDistance {
    std::function<double(const Task&, const Task&)> fn;

    double operator()(const Task& a, const Task& b) const { return fn(a, b); }

    static TaskDistance constant_one() {
        TaskDistance d;
        d.fn = [](const Task& a, const Task& b) { return a.id == b.id ? 0.0 : 1.0; };
        return d;
    }
};

namespace detail {
inline std::size_t draw_weighted(const std::vector<double>& weights, Rng& rng) {
    const double u = rng.next_double();
    double cum = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        cum += weights[i];
        if (u < cum) return i;
    }
    return weights.size() - 1;   // guard against rounding at the tail
}
} // namespace detail

// Draws task indices according to the context's sequence law.  In iid mode
// every draw is independent; in markov mode the sampler walks the transition
// matrix starting from a uniformly drawn task.
class ContextSampler {
public:
    ContextSampler(const TaskContext& ctx, Rng& rng) : ctx_(ctx), rng_(rng) {}

    std::size_t next() {
        if (ctx_.sampling.kind == Sampling::Kind::iid)
            return detail::draw_weighted(ctx_.sampling.weights, rng_);
        if (!started_) {
            started_ = true;
            current_ = rng_.below(ctx_.tasks.size());
        } else {
            current_ = detail::draw_weighted(ctx_.sampling.transition[current_], rng_);
        }
        return current_;
    }

private:
    const TaskContext& ctx_;
    Rng& rng_;
    bool started_ = false;
    std::size_t current_ = 0;
};

inline TaskHistory sample_history(const TaskContext& ctx, std::size_t n, Rng& rng) {
    ctx.validate();
    TaskHistory h;
    h.entries.reserve(n);
    ContextSampler sampler(ctx, rng);
    for (std::size_t i = 0; i < n; ++i) h.entries.push_back(ctx.tasks[sampler.next()].id);
    return h;
}

} // namespace flexopt
