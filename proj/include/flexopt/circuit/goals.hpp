#pragma once
// Boolean goals and the modular goal family t(x) = f(g(x1,x2), h(x3,x4)).
//
// Fitness is the fraction of the 2^d inputs where a circuit's truth table
// matches the goal; performance is binary against a threshold (inclusive,
// so fitness == threshold counts as performed).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "flexopt/circuit/circuit.hpp"
#include "flexopt/circuit/params.hpp"

namespace flexopt::circuit {

enum class BoolOp { And, Or, Xor, Eq, Nand, Nor, Andn, Orn };

int apply_op(BoolOp op, int a, int b);

std::string_view op_name(BoolOp op);
BoolOp op_from_name(std::string_view name);   // throws UsageError on unknown names

struct BooleanGoal {
    TruthTable table;     // 2^d entries
    std::string label;

    std::uint64_t mask() const;   // packed table, requires <= 64 entries
};

struct GoalFamily {
    BoolOp f = BoolOp::Or;
    BoolOp g = BoolOp::And;
    BoolOp h = BoolOp::And;

    std::string name() const;                        // e.g. "OR(AND,EQ)"
    static GoalFamily parse(std::string_view spec);  // inverse of name()

    bool operator==(const GoalFamily&) const = default;
};

// 16-entry truth table of f(g(x1,x2), h(x3,x4)); families are 4-input by
// construction.
BooleanGoal modular_goal(const GoalFamily& family);

// Fraction of inputs where the two tables agree.
double fitness(const TruthTable& u_table, const BooleanGoal& goal);

// 1 iff fitness_value >= eps.
int binary_performance(double fitness_value, double eps);

} // namespace flexopt::circuit
