#pragma once
// Circuit geometry: d primary inputs, M two-input NAND gates, one output.
// Wire indices are encoded in m = ceil(log2(M+d)) bits, so the genome holds
// M gate genes of 2m bits plus one m-bit output gene: B = m*(2M+1) bits.
// With the defaults (d=4, M=12) this gives m=4 and B=100, and 2^m = M+d so
// index decoding needs no reduction.

#include <bit>
#include <cstdint>

#include "flexopt/core/task.hpp"

namespace flexopt::circuit {

struct CircuitParams {
    int inputs = 4;   // d
    int gates = 12;   // M

    int sources() const { return inputs + gates; }   // M + d wireable sources

    // Bits per wire index.
    int index_bits() const {
        return std::bit_width(static_cast<unsigned>(sources() - 1));
    }

    // Genome length in bits.
    int genome_bits() const { return index_bits() * (2 * gates + 1); }

    int table_size() const { return 1 << inputs; }

    void validate() const {
        if (inputs < 1 || inputs > 16) throw ConfigError("circuit inputs must lie in [1, 16]");
        if (gates < 1 || gates > 512) throw ConfigError("circuit gate count must lie in [1, 512]");
    }
};

} // namespace flexopt::circuit
