#pragma once
// Hypercube reference system: configurations are k-bit words, tasks are
// target sets of configurations, reconfiguration cost is Hamming distance.
// Adaptation walks greedily bit by bit toward the nearest target, so the
// adaption cost equals the number of flips performed and shares units with
// the reconfiguration cost.  Small enough to enumerate, which makes it the
// exact fixture for the measure implementations.

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "flexopt/core/system.hpp"

namespace flexopt {

struct HypercubeTaskSpec {
    std::string id;
    std::vector<std::uint32_t> targets;   // may be empty: task unsolvable
};

class HypercubeSystem final : public AdaptiveSystem<std::uint32_t> {
public:
    using Config = std::uint32_t;

    HypercubeSystem(int bits, std::vector<HypercubeTaskSpec> tasks, Config initial = 0)
        : bits_(bits), initial_(initial) {
        if (bits < 1 || bits > 16) throw ConfigError("hypercube system requires 1 <= bits <= 16");
        const Config limit = static_cast<Config>((std::uint64_t{1} << bits) - 1);
        if (initial > limit) throw ConfigError("initial configuration out of range");
        for (auto& spec : tasks) {
            for (Config t : spec.targets)
                if (t > limit) throw ConfigError("target configuration out of range in task '" + spec.id + "'");
            targets_[spec.id] = std::move(spec.targets);
        }
    }

    int bits() const { return bits_; }

    Config initial_config() const override { return initial_; }

    AdaptStep<Config> adapt(const Config& from, const Task& task, Rng& /*rng*/) override {
        const std::vector<Config>& targets = targets_for(task);
        if (targets.empty()) return AdaptStep<Config>::failure(from);
        // Nearest target; ties broken by smallest configuration value.
        Config best = targets.front();
        int best_dist = hamming(from, best);
        for (Config t : targets) {
            const int d = hamming(from, t);
            if (d < best_dist || (d == best_dist && t < best)) {
                best = t;
                best_dist = d;
            }
        }
        return AdaptStep<Config>{best, static_cast<double>(best_dist), true};
    }

    double reconfig_cost(const Config& a, const Config& b) const override {
        return static_cast<double>(hamming(a, b));
    }

    bool performs(const Config& config, const Task& task) const override {
        const std::vector<Config>& targets = targets_for(task);
        for (Config t : targets)
            if (t == config) return true;
        return false;
    }

    bool can_enumerate() const override { return true; }

    std::vector<Config> enumerate_configs() const override {
        std::vector<Config> all;
        all.reserve(std::size_t{1} << bits_);
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << bits_); ++c)
            all.push_back(static_cast<Config>(c));
        return all;
    }

    std::unique_ptr<AdaptiveSystem<Config>> clone() const override {
        return std::make_unique<HypercubeSystem>(*this);
    }

    static int hamming(Config a, Config b) { return std::popcount(a ^ b); }

private:
    const std::vector<Config>& targets_for(const Task& task) const {
        auto it = targets_.find(task.id);
        if (it == targets_.end()) throw UsageError("hypercube system has no task '" + task.id + "'");
        return it->second;
    }

    int bits_;
    Config initial_;
    std::map<std::string, std::vector<Config>> targets_;
};

// Tasks matching a set of hypercube target specs; the goal oracle is the
// identity since performance is decided by set membership.
inline std::vector<Task> hypercube_tasks(const std::vector<HypercubeTaskSpec>& specs, int bits) {
    std::vector<Task> tasks;
    tasks.reserve(specs.size());
    for (const auto& spec : specs) {
        Task t;
        t.id = spec.id;
        t.env_dim = bits;
        t.goal = [](State s) { return s; };
        t.perf_threshold = 1.0;
        tasks.push_back(std::move(t));
    }
    return tasks;
}

inline HypercubeSystem make_hypercube_system(int bits, std::vector<HypercubeTaskSpec> specs,
                                             std::uint32_t initial = 0) {
    return HypercubeSystem(bits, std::move(specs), initial);
}

} // namespace flexopt
