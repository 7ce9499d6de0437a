#pragma once
// Genotype-phenotype mapping and circuit evaluation.
//
// A genome decodes to a wiring: per gate, two source indices into the
// combined list [inputs x1..xd | gate outputs], plus one output source.
// Index fields are read most-significant-bit first and reduced modulo the
// number of sources (the identity under default geometry).
//
// Wirings may contain cycles.  Under the default `settle` policy every gate
// starts at 0 and all gates update synchronously for at most M+1 passes; if
// an input column reaches a fixed point the output source's value is
// returned, otherwise that input evaluates to 0.  The `feedforward` policy
// re-reduces gate i's sources modulo (d+i) so it can only read primary
// inputs and earlier gates, then evaluates in a single pass.
//
// Truth tables list all 2^d inputs in lexicographic order with x1 as the
// most significant input bit.

#include <cstdint>
#include <vector>

#include "flexopt/circuit/genotype.hpp"
#include "flexopt/circuit/params.hpp"

namespace flexopt::circuit {

struct CircuitTopology {
    struct Gate {
        int src_a = 0;
        int src_b = 0;
    };
    std::vector<Gate> gate_inputs;   // size M, indices in [0, M+d)
    int output_source = 0;           // in [0, M+d)
};

enum class CyclePolicy { settle, feedforward };

inline int nand_bit(int a, int b) { return (a & b) ^ 1; }

CircuitTopology decode(const Genotype& genome, const CircuitParams& params);

// Re-encode a topology into genome bits; inverse of decode whenever the
// source count is a power of two.
Genotype encode(const CircuitTopology& topology, const CircuitParams& params);

// Value of the circuit on one input assignment.  Bit (d-1-j) of `input`
// holds x_{j+1}, i.e. x1 is the most significant of the d input bits.
int evaluate(const CircuitTopology& topology, std::uint32_t input, const CircuitParams& params,
             CyclePolicy policy = CyclePolicy::settle);

using TruthTable = std::vector<std::uint8_t>;   // 2^d entries

TruthTable truth_table(const CircuitTopology& topology, const CircuitParams& params,
                       CyclePolicy policy = CyclePolicy::settle);

// Truth table packed into the low 2^d bits of a word (bit i = output on
// input i); requires d <= 6.  This is the hot path behind truth_table and
// the population evaluator.
std::uint64_t truth_table_mask(const CircuitTopology& topology, const CircuitParams& params,
                               CyclePolicy policy = CyclePolicy::settle);

std::string table_to_string(const TruthTable& table);
TruthTable table_from_string(std::string_view s);

} // namespace flexopt::circuit
