#include "flexopt/circuit/contexts.hpp"

#include <memory>

namespace flexopt::circuit {

Task goal_task(const BooleanGoal& goal, const CircuitParams& params, double eps, const std::string& prefix) {
    if (static_cast<int>(goal.table.size()) != params.table_size())
        throw ConfigError("goal table size does not match circuit inputs");
    Task t;
    t.id = prefix + goal.label;
    t.env_dim = params.inputs;
    auto table = std::make_shared<TruthTable>(goal.table);
    t.goal = [table](State x) -> State { return (*table)[static_cast<std::size_t>(x)]; };
    t.perf_threshold = eps;
    t.distance_tag = goal.label;
    return t;
}

namespace {

double eps_for(const std::map<std::string, double>& eps_by_family, const std::string& name) {
    auto it = eps_by_family.find(name);
    if (it == eps_by_family.end())
        throw ConfigError("missing performance threshold for goal family '" + name + "'");
    return it->second;
}

} // namespace

BuiltContexts build_contexts(const std::vector<GoalFamily>& training_families,
                             const std::vector<GoalFamily>& test_families,
                             const std::map<std::string, double>& eps_by_family,
                             const CircuitParams& params) {
    if (params.inputs != 4)
        throw ConfigError("modular goal families require a 4-input circuit");
    if (training_families.size() != 3)
        throw ConfigError("training context requires exactly 3 goal families");
    for (const auto& fam : training_families) {
        if (fam.f != BoolOp::And && fam.f != BoolOp::Or)
            throw ConfigError("training family '" + fam.name() + "': f must be AND or OR");
        for (BoolOp op : {fam.g, fam.h})
            if (op != BoolOp::Eq && op != BoolOp::Xor)
                throw ConfigError("training family '" + fam.name() + "': g and h must be EQ or XOR");
    }
    if (test_families.empty()) throw ConfigError("test goal list must not be empty");

    BuiltContexts out;
    for (const auto& fam : training_families) {
        const BooleanGoal goal = modular_goal(fam);
        out.train.tasks.push_back(goal_task(goal, params, eps_for(eps_by_family, goal.label), kTrainPrefix));
    }
    const std::size_t n = training_families.size();
    out.train.sampling = Sampling::markov(
        std::vector<std::vector<double>>(n, std::vector<double>(n, 1.0 / static_cast<double>(n))));

    for (const auto& fam : test_families) {
        const BooleanGoal goal = modular_goal(fam);
        out.test.tasks.push_back(goal_task(goal, params, eps_for(eps_by_family, goal.label), kTestPrefix));
    }
    out.test.sampling = Sampling::iid_uniform(test_families.size());

    out.train.validate();
    out.test.validate();
    return out;
}

BooleanGoal goal_of_task(const Task& task) {
    BooleanGoal goal;
    goal.label = task.id;
    const std::size_t n = std::size_t{1} << task.env_dim;
    goal.table.resize(n);
    for (std::size_t x = 0; x < n; ++x)
        goal.table[x] = static_cast<std::uint8_t>(task.goal(static_cast<State>(x)) & 1);
    return goal;
}

} // namespace flexopt::circuit
