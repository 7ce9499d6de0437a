#include "flexopt/evolve/ga.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <thread>

namespace flexopt::evolve {

namespace {

// Chunked parallel loop; each worker owns a contiguous index range, so
// writes into preallocated slots never race and results do not depend on
// the thread count.
template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t n_workers = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    const std::size_t chunk = (n + n_workers - 1) / n_workers;
    for (std::size_t w = 0; w < n_workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

constexpr int kMaxGates = 512;

} // namespace

GoalEvaluator::GoalEvaluator(const circuit::BooleanGoal& goal, const CircuitParams& params,
                             CyclePolicy policy)
    : params_(params), policy_(policy), label_(goal.label) {
    params_.validate();
    if (params_.inputs > 6) throw UsageError("population evaluation supports at most 6 inputs");
    if (static_cast<int>(goal.table.size()) != params_.table_size())
        throw UsageError("goal table size does not match circuit inputs");
    goal_mask_ = goal.mask();
    const int n = params_.table_size();
    full_mask_ = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    input_masks_.resize(static_cast<std::size_t>(params_.inputs));
    for (int j = 0; j < params_.inputs; ++j) {
        std::uint64_t mask = 0;
        for (int i = 0; i < n; ++i)
            if ((i >> (params_.inputs - 1 - j)) & 1) mask |= std::uint64_t{1} << i;
        input_masks_[static_cast<std::size_t>(j)] = mask;
    }
}

double GoalEvaluator::fitness_of(const Genotype& genome) const {
    const int d = params_.inputs;
    const int M = params_.gates;
    const int m = params_.index_bits();
    const int mod = params_.sources();
    if (static_cast<int>(genome.size()) != params_.genome_bits())
        throw UsageError("genome length does not match circuit parameters");

    int src_a[kMaxGates];
    int src_b[kMaxGates];
    int offset = 0;
    for (int g = 0; g < M; ++g) {
        int a = 0, b = 0;
        for (int i = 0; i < m; ++i) a = (a << 1) | genome[static_cast<std::size_t>(offset + i)];
        offset += m;
        for (int i = 0; i < m; ++i) b = (b << 1) | genome[static_cast<std::size_t>(offset + i)];
        offset += m;
        src_a[g] = a % mod;
        src_b[g] = b % mod;
    }
    int out_src = 0;
    for (int i = 0; i < m; ++i) out_src = (out_src << 1) | genome[static_cast<std::size_t>(offset + i)];
    out_src %= mod;

    std::uint64_t value[kMaxGates];
    std::uint64_t u_mask;

    if (policy_ == CyclePolicy::feedforward) {
        for (int g = 0; g < M; ++g) {
            const int span = d + g;
            const int a = src_a[g] % span;
            const int b = src_b[g] % span;
            const std::uint64_t va = a < d ? input_masks_[static_cast<std::size_t>(a)] : value[a - d];
            const std::uint64_t vb = b < d ? input_masks_[static_cast<std::size_t>(b)] : value[b - d];
            value[g] = ~(va & vb) & full_mask_;
        }
        u_mask = out_src < d ? input_masks_[static_cast<std::size_t>(out_src)] : value[out_src - d];
    } else {
        std::uint64_t next[kMaxGates];
        for (int g = 0; g < M; ++g) value[g] = 0;
        std::uint64_t stable = 0;
        for (int pass = 0; pass < M + 1; ++pass) {
            std::uint64_t changed = 0;
            for (int g = 0; g < M; ++g) {
                const int a = src_a[g];
                const int b = src_b[g];
                const std::uint64_t va = a < d ? input_masks_[static_cast<std::size_t>(a)] : value[a - d];
                const std::uint64_t vb = b < d ? input_masks_[static_cast<std::size_t>(b)] : value[b - d];
                next[g] = ~(va & vb) & full_mask_;
                changed |= next[g] ^ value[g];
            }
            std::copy(next, next + M, value);
            stable = full_mask_ & ~changed;
            if (stable == full_mask_) break;
        }
        const std::uint64_t out_value =
            out_src < d ? input_masks_[static_cast<std::size_t>(out_src)] : value[out_src - d];
        u_mask = out_value & stable;
    }

    const int n = params_.table_size();
    const int matches = n - std::popcount((u_mask ^ goal_mask_) & full_mask_);
    return static_cast<double>(matches) / static_cast<double>(n);
}

Population init_population(const GAParams& ga, const CircuitParams& params, Rng& rng) {
    ga.validate();
    params.validate();
    Population pop;
    pop.reserve(static_cast<std::size_t>(ga.pop_size));
    for (int i = 0; i < ga.pop_size; ++i) {
        Rng slot = rng.split(static_cast<std::uint64_t>(i));
        pop.push_back(circuit::random_genotype(params.genome_bits(), slot));
    }
    return pop;
}

std::vector<double> evaluate_population(const Population& pop, const GoalEvaluator& eval, int threads) {
    std::vector<double> fitness(pop.size());
    parallel_for(pop.size(), threads, [&](std::size_t i) { fitness[i] = eval.fitness_of(pop[i]); });
    return fitness;
}

GenStats population_stats(const std::vector<double>& fitness) {
    GenStats s;
    if (fitness.empty()) return s;
    s.best_fitness = fitness[0];
    s.best_index = 0;
    double sum = 0.0;
    for (std::size_t i = 0; i < fitness.size(); ++i) {
        sum += fitness[i];
        if (fitness[i] > s.best_fitness) {
            s.best_fitness = fitness[i];
            s.best_index = static_cast<int>(i);
        }
    }
    s.mean_fitness = sum / static_cast<double>(fitness.size());
    return s;
}

namespace {

// Winner of a size-k tournament: best fitness, ties to the lowest index.
std::size_t tournament(const std::vector<double>& fitness, int k, Rng& rng) {
    std::size_t winner = static_cast<std::size_t>(rng.below(fitness.size()));
    for (int i = 1; i < k; ++i) {
        const std::size_t c = static_cast<std::size_t>(rng.below(fitness.size()));
        if (fitness[c] > fitness[winner] || (fitness[c] == fitness[winner] && c < winner)) winner = c;
    }
    return winner;
}

} // namespace

Population breed(const Population& pop, const std::vector<double>& fitness, const GAParams& ga, Rng gen_rng) {
    ga.validate();
    if (pop.empty() || pop.size() != fitness.size())
        throw UsageError("breed requires a nonempty evaluated population");

    // Elite slots: best fitness first, ties to the lowest index.
    std::vector<std::size_t> order(pop.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    const std::size_t n_elite = std::min<std::size_t>(static_cast<std::size_t>(ga.elite_count), pop.size());
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_elite), order.end(),
                      [&](std::size_t a, std::size_t b) {
                          if (fitness[a] != fitness[b]) return fitness[a] > fitness[b];
                          return a < b;
                      });

    Population next;
    next.reserve(pop.size());
    for (std::size_t e = 0; e < n_elite; ++e) next.push_back(pop[order[e]]);

    const std::size_t n_bits = pop[0].size();
    for (std::size_t slot = n_elite; slot < pop.size(); ++slot) {
        Rng rng = gen_rng.split(slot + 1);
        const std::size_t p1 = tournament(fitness, ga.tournament_size, rng);
        Genotype child;
        if (n_bits > 1 && rng.bernoulli(ga.crossover_rate)) {
            const std::size_t p2 = tournament(fitness, ga.tournament_size, rng);
            const std::size_t cut = 1 + static_cast<std::size_t>(rng.below(n_bits - 1));
            child.assign(pop[p1].begin(), pop[p1].begin() + static_cast<std::ptrdiff_t>(cut));
            child.insert(child.end(), pop[p2].begin() + static_cast<std::ptrdiff_t>(cut), pop[p2].end());
        } else {
            child = pop[p1];
        }
        if (ga.mutation_rate > 0.0)
            for (auto& bit : child)
                if (rng.bernoulli(ga.mutation_rate)) bit ^= 1;
        next.push_back(std::move(child));
    }
    return next;
}

std::pair<Population, GenStats> step_generation(const Population& pop, const GoalEvaluator& eval,
                                                const GAParams& ga, Rng gen_rng, int threads) {
    const std::vector<double> fitness = evaluate_population(pop, eval, threads);
    GenStats stats = population_stats(fitness);
    return {breed(pop, fitness, ga, gen_rng), stats};
}

int first_qualifying(const std::vector<double>& fitness, double eps) {
    for (std::size_t i = 0; i < fitness.size(); ++i)
        if (fitness[i] >= eps) return static_cast<int>(i);
    return -1;
}

} // namespace flexopt::evolve
