#include "flexopt/harness/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace flexopt::harness {

namespace {

struct ScenarioSamples {
    std::vector<double> ada_excl;    // solved runs only
    std::vector<double> ada_capped;  // failures at the cap
    std::vector<double> reco;
    std::size_t failed = 0;
};

ScenarioSamples collect(const std::vector<RunRecord>& records, const std::string& scenario, int cap) {
    ScenarioSamples s;
    for (const auto& r : records) {
        if (r.scenario != scenario) continue;
        s.reco.push_back(static_cast<double>(r.reconfig_cost));
        if (r.solved) {
            s.ada_excl.push_back(static_cast<double>(r.adaption_cost));
            s.ada_capped.push_back(static_cast<double>(r.adaption_cost));
        } else {
            ++s.failed;
            s.ada_capped.push_back(static_cast<double>(cap));
        }
    }
    return s;
}

double mean_of(const std::vector<double>& v) {
    return Estimate::from_samples(v).mean;
}

double median_of(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

ScenarioFlexibility side_from(const ScenarioSamples& s) {
    ScenarioFlexibility side;
    side.n = s.reco.size();
    side.mean_ada_cost = mean_of(s.ada_excl);
    side.mean_ada_cost_capped = mean_of(s.ada_capped);
    side.median_ada_cost = median_of(s.ada_excl);
    side.adaptability = -side.mean_ada_cost;
    side.avg_reco_cost = mean_of(s.reco);
    side.fail_fraction = side.n == 0 ? 0.0 : static_cast<double>(s.failed) / static_cast<double>(side.n);
    return side;
}

std::vector<double> resample(const std::vector<double>& v, Rng& rng) {
    std::vector<double> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v[rng.below(v.size())]);
    return out;
}

RatioEstimate bootstrap_ratio(const std::vector<double>& fg, const std::vector<double>& mvg, Rng rng) {
    RatioEstimate est;
    if (fg.empty() || mvg.empty()) return est;
    const double mvg_mean = mean_of(mvg);
    if (mvg_mean <= 0.0) return est;
    est.defined = true;
    est.value = mean_of(fg) / mvg_mean;
    std::vector<double> ratios;
    ratios.reserve(kBootstrapResamples);
    for (int b = 0; b < kBootstrapResamples; ++b) {
        Rng draw = rng.split(static_cast<std::uint64_t>(b));
        const double num = mean_of(resample(fg, draw));
        const double den = mean_of(resample(mvg, draw));
        if (den > 0.0) ratios.push_back(num / den);
    }
    if (ratios.empty()) {
        est.ci_lo = est.ci_hi = est.value;
        return est;
    }
    std::sort(ratios.begin(), ratios.end());
    auto pct = [&](double q) {
        const double idx = q * static_cast<double>(ratios.size() - 1);
        const std::size_t lo = static_cast<std::size_t>(idx);
        const std::size_t hi = std::min(lo + 1, ratios.size() - 1);
        const double w = idx - static_cast<double>(lo);
        return ratios[lo] * (1.0 - w) + ratios[hi] * w;
    };
    est.ci_lo = std::min(pct(0.025), est.value);
    est.ci_hi = std::max(pct(0.975), est.value);
    return est;
}

} // namespace

FlexibilityReport flexibility_report(const std::vector<RunRecord>& records, const ExperimentConfig& cfg) {
    const ScenarioSamples fg = collect(records, "FG", cfg.ga.max_generations);
    const ScenarioSamples mvg = collect(records, "MVG", cfg.ga.max_generations);

    FlexibilityReport report;
    report.fg = side_from(fg);
    report.mvg = side_from(mvg);

    const Rng boot(derive_seed(cfg.master_seed, 0xb007));
    const auto& fg_ada = cfg.failure_mode == FailureMode::cap ? fg.ada_capped : fg.ada_excl;
    const auto& mvg_ada = cfg.failure_mode == FailureMode::cap ? mvg.ada_capped : mvg.ada_excl;
    report.ada_cost_ratio_fg_mvg = bootstrap_ratio(fg_ada, mvg_ada, boot.split(1));
    report.reco_cost_ratio_fg_mvg = bootstrap_ratio(fg.reco, mvg.reco, boot.split(2));
    return report;
}

namespace {
nlohmann::json side_json(const ScenarioFlexibility& s) {
    nlohmann::json j;
    j["adaptability"] = s.adaptability;
    j["mean_ada_cost"] = s.mean_ada_cost;
    j["mean_ada_cost_capped"] = s.mean_ada_cost_capped;
    j["median_ada_cost"] = s.median_ada_cost;
    j["avg_reco_cost"] = s.avg_reco_cost;
    j["fail_fraction"] = s.fail_fraction;
    j["n"] = s.n;
    return j;
}

nlohmann::json ratio_json(const RatioEstimate& r) {
    nlohmann::json j;
    j["defined"] = r.defined;
    j["value"] = r.value;
    j["ci_lo"] = r.ci_lo;
    j["ci_hi"] = r.ci_hi;
    return j;
}
} // namespace

std::string FlexibilityReport::to_json(const FileMeta& meta) const {
    nlohmann::json j;
    j["config_hash"] = meta.config_hash;
    j["master_seed"] = meta.master_seed;
    j["fg"] = side_json(fg);
    j["mvg"] = side_json(mvg);
    j["ada_cost_ratio_fg_mvg"] = ratio_json(ada_cost_ratio_fg_mvg);
    j["reco_cost_ratio_fg_mvg"] = ratio_json(reco_cost_ratio_fg_mvg);
    return j.dump(2) + "\n";
}

std::string FlexibilityReport::ratio_table() const {
    char buf[512];
    std::string out;
    out += "scenario    mean_ada  median_ada  mean_reco  fail_frac      n\n";
    auto line = [&](const char* name, const ScenarioFlexibility& s) {
        std::snprintf(buf, sizeof buf, "%-9s %10.4g %11.4g %10.4g %10.4g %6zu\n", name, s.mean_ada_cost,
                      s.median_ada_cost, s.avg_reco_cost, s.fail_fraction, s.n);
        out += buf;
    };
    line("FG", fg);
    line("MVG", mvg);
    auto ratio_line = [&](const char* name, const RatioEstimate& r) {
        if (r.defined)
            std::snprintf(buf, sizeof buf, "%s = %.4g  [%.4g, %.4g]\n", name, r.value, r.ci_lo, r.ci_hi);
        else
            std::snprintf(buf, sizeof buf, "%s undefined\n", name);
        out += buf;
    };
    ratio_line("ada_cost_ratio_fg_mvg ", ada_cost_ratio_fg_mvg);
    ratio_line("reco_cost_ratio_fg_mvg", reco_cost_ratio_fg_mvg);
    return out;
}

} // namespace flexopt::harness
