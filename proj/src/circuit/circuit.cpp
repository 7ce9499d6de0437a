#include "flexopt/circuit/circuit.hpp"

namespace flexopt::circuit {

namespace {

// Read an m-bit field as an unsigned integer, most significant bit first.
int read_field(const Genotype& genome, int offset, int width) {
    int value = 0;
    for (int i = 0; i < width; ++i) value = (value << 1) | genome[static_cast<std::size_t>(offset + i)];
    return value;
}

void write_field(Genotype& genome, int offset, int width, int value) {
    for (int i = 0; i < width; ++i)
        genome[static_cast<std::size_t>(offset + i)] = static_cast<std::uint8_t>((value >> (width - 1 - i)) & 1);
}

// Truth-table mask of primary input j (0-based; x1 is j=0 and the most
// significant input bit of the table index).
std::uint64_t input_mask(int j, const CircuitParams& p) {
    const int shift = p.inputs - 1 - j;
    std::uint64_t mask = 0;
    for (int i = 0; i < p.table_size(); ++i)
        if ((i >> shift) & 1) mask |= std::uint64_t{1} << i;
    return mask;
}

} // namespace

CircuitTopology decode(const Genotype& genome, const CircuitParams& params) {
    params.validate();
    if (static_cast<int>(genome.size()) != params.genome_bits())
        throw UsageError("genome length does not match circuit parameters");
    const int m = params.index_bits();
    const int mod = params.sources();
    CircuitTopology topo;
    topo.gate_inputs.resize(static_cast<std::size_t>(params.gates));
    for (int g = 0; g < params.gates; ++g) {
        topo.gate_inputs[static_cast<std::size_t>(g)].src_a = read_field(genome, 2 * m * g, m) % mod;
        topo.gate_inputs[static_cast<std::size_t>(g)].src_b = read_field(genome, 2 * m * g + m, m) % mod;
    }
    topo.output_source = read_field(genome, 2 * m * params.gates, m) % mod;
    return topo;
}

Genotype encode(const CircuitTopology& topology, const CircuitParams& params) {
    params.validate();
    if (static_cast<int>(topology.gate_inputs.size()) != params.gates)
        throw UsageError("topology gate count does not match circuit parameters");
    const int m = params.index_bits();
    Genotype genome(static_cast<std::size_t>(params.genome_bits()), 0);
    for (int g = 0; g < params.gates; ++g) {
        write_field(genome, 2 * m * g, m, topology.gate_inputs[static_cast<std::size_t>(g)].src_a);
        write_field(genome, 2 * m * g + m, m, topology.gate_inputs[static_cast<std::size_t>(g)].src_b);
    }
    write_field(genome, 2 * m * params.gates, m, topology.output_source);
    return genome;
}

int evaluate(const CircuitTopology& topology, std::uint32_t input, const CircuitParams& params,
             CyclePolicy policy) {
    const int d = params.inputs;
    const int M = params.gates;
    auto input_bit = [&](int j) -> int { return (input >> (d - 1 - j)) & 1; };

    if (policy == CyclePolicy::feedforward) {
        std::vector<int> value(static_cast<std::size_t>(M), 0);
        for (int g = 0; g < M; ++g) {
            const int mod = d + g;
            auto source = [&](int idx) -> int {
                idx %= mod;
                return idx < d ? input_bit(idx) : value[static_cast<std::size_t>(idx - d)];
            };
            const auto& gate = topology.gate_inputs[static_cast<std::size_t>(g)];
            value[static_cast<std::size_t>(g)] = nand_bit(source(gate.src_a), source(gate.src_b));
        }
        const int out = topology.output_source;
        return out < d ? input_bit(out) : value[static_cast<std::size_t>(out - d)];
    }

    // settle: synchronous updates from the all-zero gate state
    std::vector<int> cur(static_cast<std::size_t>(M), 0);
    std::vector<int> next(static_cast<std::size_t>(M), 0);
    auto source = [&](const std::vector<int>& state, int idx) -> int {
        return idx < d ? input_bit(idx) : state[static_cast<std::size_t>(idx - d)];
    };
    bool stable = false;
    for (int pass = 0; pass < M + 1 && !stable; ++pass) {
        stable = true;
        for (int g = 0; g < M; ++g) {
            const auto& gate = topology.gate_inputs[static_cast<std::size_t>(g)];
            next[static_cast<std::size_t>(g)] = nand_bit(source(cur, gate.src_a), source(cur, gate.src_b));
            if (next[static_cast<std::size_t>(g)] != cur[static_cast<std::size_t>(g)]) stable = false;
        }
        cur.swap(next);
    }
    if (!stable) return 0;
    return source(cur, topology.output_source);
}

std::uint64_t truth_table_mask(const CircuitTopology& topology, const CircuitParams& params,
                               CyclePolicy policy) {
    const int d = params.inputs;
    const int M = params.gates;
    if (d > 6) throw UsageError("truth_table_mask requires at most 6 inputs");
    const std::uint64_t full = (params.table_size() == 64) ? ~std::uint64_t{0}
                                                           : (std::uint64_t{1} << params.table_size()) - 1;
    std::vector<std::uint64_t> inputs(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) inputs[static_cast<std::size_t>(j)] = input_mask(j, params);

    if (policy == CyclePolicy::feedforward) {
        std::vector<std::uint64_t> value(static_cast<std::size_t>(M), 0);
        for (int g = 0; g < M; ++g) {
            const int mod = d + g;
            auto source = [&](int idx) -> std::uint64_t {
                idx %= mod;
                return idx < d ? inputs[static_cast<std::size_t>(idx)] : value[static_cast<std::size_t>(idx - d)];
            };
            const auto& gate = topology.gate_inputs[static_cast<std::size_t>(g)];
            value[static_cast<std::size_t>(g)] = ~(source(gate.src_a) & source(gate.src_b)) & full;
        }
        const int out = topology.output_source;
        return out < d ? inputs[static_cast<std::size_t>(out)] : value[static_cast<std::size_t>(out - d)];
    }

    // settle, all table columns in parallel; a column that repeats between
    // consecutive passes has reached its fixed point and stays there
    std::vector<std::uint64_t> cur(static_cast<std::size_t>(M), 0);
    std::vector<std::uint64_t> next(static_cast<std::size_t>(M), 0);
    auto source = [&](const std::vector<std::uint64_t>& state, int idx) -> std::uint64_t {
        return idx < d ? inputs[static_cast<std::size_t>(idx)] : state[static_cast<std::size_t>(idx - d)];
    };
    std::uint64_t stable = 0;
    for (int pass = 0; pass < M + 1; ++pass) {
        std::uint64_t changed = 0;
        for (int g = 0; g < M; ++g) {
            const auto& gate = topology.gate_inputs[static_cast<std::size_t>(g)];
            next[static_cast<std::size_t>(g)] = ~(source(cur, gate.src_a) & source(cur, gate.src_b)) & full;
            changed |= next[static_cast<std::size_t>(g)] ^ cur[static_cast<std::size_t>(g)];
        }
        cur.swap(next);
        stable = full & ~changed;
        if (stable == full) break;
    }
    const std::uint64_t out_value = source(cur, topology.output_source);
    return out_value & stable;
}

TruthTable truth_table(const CircuitTopology& topology, const CircuitParams& params, CyclePolicy policy) {
    TruthTable table(static_cast<std::size_t>(params.table_size()));
    if (params.inputs <= 6) {
        const std::uint64_t mask = truth_table_mask(topology, params, policy);
        for (int i = 0; i < params.table_size(); ++i)
            table[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((mask >> i) & 1);
    } else {
        for (int i = 0; i < params.table_size(); ++i)
            table[static_cast<std::size_t>(i)] =
                static_cast<std::uint8_t>(evaluate(topology, static_cast<std::uint32_t>(i), params, policy));
    }
    return table;
}

std::string table_to_string(const TruthTable& table) {
    std::string s(table.size(), '0');
    for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i]) s[i] = '1';
    return s;
}

TruthTable table_from_string(std::string_view s) {
    TruthTable t(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '0')
            t[i] = 0;
        else if (s[i] == '1')
            t[i] = 1;
        else
            throw UsageError("truth tables strings may contain only '0' and '1'");
    }
    return t;
}

} // namespace flexopt::circuit
