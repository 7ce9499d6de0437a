#pragma once
// Fixed-length bit-string genotypes.  Every bit pattern decodes to a valid
// circuit, so the configuration space is exactly {0,1}^B.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "flexopt/core/rng.hpp"
#include "flexopt/core/task.hpp"

namespace flexopt::circuit {

using Genotype = std::vector<std::uint8_t>;   // one 0/1 value per bit

Genotype random_genotype(int n_bits, Rng& rng);

// Count of differing bits; the circuit system's reconfiguration cost.
int hamming(const Genotype& a, const Genotype& b);

std::string to_bit_string(const Genotype& g);
Genotype genotype_from_bit_string(std::string_view s);

// FNV-1a over the bits; used for trace records and replay digests.
std::uint64_t genotype_hash(const Genotype& g);

} // namespace flexopt::circuit
