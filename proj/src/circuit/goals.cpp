#include "flexopt/circuit/goals.hpp"

#include <array>

namespace flexopt::circuit {

int apply_op(BoolOp op, int a, int b) {
    switch (op) {
        case BoolOp::And:  return a & b;
        case BoolOp::Or:   return a | b;
        case BoolOp::Xor:  return a ^ b;
        case BoolOp::Eq:   return (a ^ b) ^ 1;
        case BoolOp::Nand: return (a & b) ^ 1;
        case BoolOp::Nor:  return (a | b) ^ 1;
        case BoolOp::Andn: return a & (b ^ 1);
        case BoolOp::Orn:  return a | (b ^ 1);
    }
    throw UsageError("unknown Boolean operator");
}

namespace {
constexpr std::array<std::string_view, 8> kOpNames = {"AND", "OR", "XOR", "EQ", "NAND", "NOR", "ANDN", "ORN"};
}

std::string_view op_name(BoolOp op) { return kOpNames[static_cast<std::size_t>(op)]; }

BoolOp op_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kOpNames.size(); ++i)
        if (name == kOpNames[i]) return static_cast<BoolOp>(i);
    throw UsageError("unknown Boolean operator '" + std::string(name) + "'");
}

std::uint64_t BooleanGoal::mask() const {
    if (table.size() > 64) throw UsageError("goal table too large for packed mask");
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i]) m |= std::uint64_t{1} << i;
    return m;
}

std::string GoalFamily::name() const {
    return std::string(op_name(f)) + "(" + std::string(op_name(g)) + "," + std::string(op_name(h)) + ")";
}

GoalFamily GoalFamily::parse(std::string_view spec) {
    const auto open = spec.find('(');
    const auto comma = spec.find(',', open == std::string_view::npos ? 0 : open);
    const auto close = spec.rfind(')');
    if (open == std::string_view::npos || comma == std::string_view::npos ||
        close == std::string_view::npos || !(open < comma && comma < close) || close != spec.size() - 1)
        throw UsageError("goal family must look like F(G,H), got '" + std::string(spec) + "'");
    GoalFamily fam;
    fam.f = op_from_name(spec.substr(0, open));
    fam.g = op_from_name(spec.substr(open + 1, comma - open - 1));
    fam.h = op_from_name(spec.substr(comma + 1, close - comma - 1));
    return fam;
}

BooleanGoal modular_goal(const GoalFamily& family) {
    BooleanGoal goal;
    goal.label = family.name();
    goal.table.resize(16);
    for (int i = 0; i < 16; ++i) {
        const int x1 = (i >> 3) & 1;
        const int x2 = (i >> 2) & 1;
        const int x3 = (i >> 1) & 1;
        const int x4 = i & 1;
        goal.table[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(
            apply_op(family.f, apply_op(family.g, x1, x2), apply_op(family.h, x3, x4)));
    }
    return goal;
}

double fitness(const TruthTable& u_table, const BooleanGoal& goal) {
    if (u_table.size() != goal.table.size() || u_table.empty())
        throw UsageError("fitness requires equal-length nonempty tables");
    std::size_t matches = 0;
    for (std::size_t i = 0; i < u_table.size(); ++i) matches += (u_table[i] == goal.table[i]);
    return static_cast<double>(matches) / static_cast<double>(u_table.size());
}

int binary_performance(double fitness_value, double eps) {
    if (eps < 0.0 || eps > 1.0) throw UsageError("performance threshold must lie in [0,1]");
    return fitness_value >= eps ? 1 : 0;
}

} // namespace flexopt::circuit
