#pragma once
// The circuit + GA pair seen as one self-adapting system.
//
// The configuration is the best genotype of the internal population; adapt
// runs the GA from that population until a genome performs the task, and
// the adaption cost is the number of generations spent.  Reconfiguration
// cost is the Hamming distance between genotypes.  The population persists
// across adapt calls, which is what carries experience between tasks.

#include <memory>

#include "flexopt/circuit/contexts.hpp"
#include "flexopt/core/system.hpp"
#include "flexopt/evolve/schedule.hpp"

namespace flexopt::evolve {

class CircuitAdaptiveSystem final : public AdaptiveSystem<Genotype> {
public:
    CircuitAdaptiveSystem(Population population, Genotype current, GAParams ga, CircuitParams params,
                          CyclePolicy policy = CyclePolicy::settle, int threads = 1);

    Genotype initial_config() const override { return current_; }

    AdaptStep<Genotype> adapt(const Genotype& from, const Task& task, Rng& rng) override;

    double reconfig_cost(const Genotype& a, const Genotype& b) const override {
        return static_cast<double>(circuit::hamming(a, b));
    }

    bool performs(const Genotype& config, const Task& task) const override;

    std::unique_ptr<AdaptiveSystem<Genotype>> clone() const override {
        return std::make_unique<CircuitAdaptiveSystem>(*this);
    }

    const Population& population() const { return pop_; }
    const Genotype& current() const { return current_; }
    const RunTrace& last_trace() const { return last_trace_; }

private:
    Population pop_;
    Genotype current_;
    GAParams ga_;
    CircuitParams params_;
    CyclePolicy policy_;
    int threads_;
    RunTrace last_trace_;
};

} // namespace flexopt::evolve
