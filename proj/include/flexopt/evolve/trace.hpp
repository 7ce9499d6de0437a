#pragma once
// Per-generation run traces.

#include <cstdint>
#include <string>
#include <vector>

#include "flexopt/circuit/genotype.hpp"

namespace flexopt::evolve {

struct TraceRow {
    int gen = 0;
    std::string goal;
    double best_f = 0.0;
    double mean_f = 0.0;
    std::uint64_t best_hash = 0;
};

struct RunTrace {
    std::vector<TraceRow> rows;      // generation indices strictly increasing
    bool solved = false;
    int generations_used = 0;
    circuit::Genotype final_best;

    // One JSON object per generation: {gen, goal, best_f, mean_f, best_hash}.
    std::string to_jsonl() const;

    // Order-sensitive digest of all rows; equal digests mean equal traces.
    std::uint64_t digest() const;
};

} // namespace flexopt::evolve
