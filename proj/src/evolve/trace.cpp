#include "flexopt/evolve/trace.hpp"

#include <bit>

#include "json.hpp"

namespace flexopt::evolve {

std::string RunTrace::to_jsonl() const {
    std::string out;
    for (const auto& row : rows) {
        nlohmann::json j;
        j["gen"] = row.gen;
        j["goal"] = row.goal;
        j["best_f"] = row.best_f;
        j["mean_f"] = row.mean_f;
        j["best_hash"] = row.best_hash;
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::uint64_t RunTrace::digest() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 0x100000001b3ull;
        }
    };
    for (const auto& row : rows) {
        mix(static_cast<std::uint64_t>(row.gen));
        for (char c : row.goal) mix(static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
        mix(std::bit_cast<std::uint64_t>(row.best_f));
        mix(std::bit_cast<std::uint64_t>(row.mean_f));
        mix(row.best_hash);
    }
    mix(solved ? 1 : 0);
    mix(static_cast<std::uint64_t>(generations_used));
    return h;
}

} // namespace flexopt::evolve
