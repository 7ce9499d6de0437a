#pragma once
// Training and test task contexts over modular Boolean goals.
//
// The training context holds three tasks joined by a uniform transition
// matrix (each row 1/3), mirroring the varying-goal schedule; the test
// context holds the configured goal list with equal weights.  Per-goal
// performance thresholds come from the caller, who derives them from the
// random-population fitness baseline.

#include <map>
#include <string>
#include <vector>

#include "flexopt/circuit/goals.hpp"
#include "flexopt/circuit/params.hpp"
#include "flexopt/core/task.hpp"

namespace flexopt::circuit {

inline constexpr const char* kTrainPrefix = "train:";
inline constexpr const char* kTestPrefix = "test:";

struct BuiltContexts {
    TaskContext train;
    TaskContext test;
};

// Task whose goal oracle looks up the goal table; id is prefix + family name.
Task goal_task(const BooleanGoal& goal, const CircuitParams& params, double eps, const std::string& prefix);

// Training families must use f in {AND, OR} and g,h in {EQ, XOR}; the test
// list may not be empty.  eps_by_family maps family names (both lists) to
// performance thresholds.
BuiltContexts build_contexts(const std::vector<GoalFamily>& training_families,
                             const std::vector<GoalFamily>& test_families,
                             const std::map<std::string, double>& eps_by_family,
                             const CircuitParams& params);

// Reconstruct the goal table from a task's oracle.
BooleanGoal goal_of_task(const Task& task);

} // namespace flexopt::circuit
