#include "flexopt/circuit/genotype.hpp"

namespace flexopt::circuit {

Genotype random_genotype(int n_bits, Rng& rng) {
    Genotype g(static_cast<std::size_t>(n_bits));
    for (auto& bit : g) bit = static_cast<std::uint8_t>(rng.next_u64() & 1);
    return g;
}

int hamming(const Genotype& a, const Genotype& b) {
    if (a.size() != b.size()) throw UsageError("hamming distance requires equal-length genotypes");
    int count = 0;
    for (std::size_t i = 0; i < a.size(); ++i) count += (a[i] != b[i]);
    return count;
}

std::string to_bit_string(const Genotype& g) {
    std::string s(g.size(), '0');
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i]) s[i] = '1';
    return s;
}

Genotype genotype_from_bit_string(std::string_view s) {
    Genotype g(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '0')
            g[i] = 0;
        else if (s[i] == '1')
            g[i] = 1;
        else
            throw UsageError("genotype strings may contain only '0' and '1'");
    }
    return g;
}

std::uint64_t genotype_hash(const Genotype& g) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint8_t bit : g) {
        h ^= bit;
        h *= 0x100000001b3ull;
    }
    return h;
}

} // namespace flexopt::circuit
