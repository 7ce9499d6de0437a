#pragma once
// Interface for self-adapting task-performing systems.
//
// A system owns a configuration space; adapt() searches it for a
// configuration that performs a task, returning the new configuration and
// the search cost.  Systems may carry internal state across adapt calls
// (e.g. a population); clone() yields an independent copy so that Monte
// Carlo trials do not interfere.

#include <memory>
#include <stdexcept>
#include <vector>

#include "flexopt/core/estimate.hpp"
#include "flexopt/core/rng.hpp"
#include "flexopt/core/task.hpp"

namespace flexopt {

template <class Config>
struct AdaptStep {
    Config config;      // configuration reached (unchanged on failure)
    double cost = 0.0;  // kInfiniteCost on failure
    bool ok = true;

    static AdaptStep failure(Config unchanged) {
        return AdaptStep{std::move(unchanged), kInfiniteCost, false};
    }
};

template <class Config>
class AdaptiveSystem {
public:
    using config_type = Config;

    virtual ~AdaptiveSystem() = default;

    virtual Config initial_config() const = 0;

    // Search for a configuration that performs `task`, starting from `from`.
    // On failure the step carries infinite cost and ok = false.
    virtual AdaptStep<Config> adapt(const Config& from, const Task& task, Rng& rng) = 0;

    // Cost of moving between two configurations; zero on the diagonal.
    virtual double reconfig_cost(const Config& a, const Config& b) const = 0;

    virtual bool performs(const Config& config, const Task& task) const = 0;

    virtual bool reconfig_symmetric() const { return true; }

    // Exhaustive configuration listing, available only for small spaces.
    virtual bool can_enumerate() const { return false; }
    virtual std::vector<Config> enumerate_configs() const {
        throw UsageError("system does not support configuration enumeration");
    }

    // Optional execution-cost model.  Systems without one contribute zero
    // run cost and reports mark the totals accordingly.
    virtual bool has_exec_cost_model() const { return false; }
    virtual double exec_cost(const Config& /*config*/, State /*input*/) const { return 0.0; }

    // Per-configuration run cost used in total-cost accounting.
    virtual double run_cost(const Config& config, const Task& task) const {
        if (!has_exec_cost_model()) return 0.0;
        return uniform_avg_exec_cost(config, task);
    }

    virtual std::unique_ptr<AdaptiveSystem<Config>> clone() const = 0;

protected:
    // Average execution cost under a uniform input distribution.
    double uniform_avg_exec_cost(const Config& config, const Task& task) const {
        if (task.env_dim > 20)
            throw UsageError("uniform average execution cost requires env_dim <= 20");
        const std::uint64_t n = std::uint64_t{1} << task.env_dim;
        double sum = 0.0;
        for (std::uint64_t x = 0; x < n; ++x) sum += exec_cost(config, x);
        return sum / static_cast<double>(n);
    }
};

} // namespace flexopt
