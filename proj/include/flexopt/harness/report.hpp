#pragma once
// Flexibility report: adaptability and average reconfiguration cost per
// scenario, with FG/MVG cost ratios and bootstrap confidence intervals.

#include <string>
#include <vector>

#include "flexopt/harness/records.hpp"

namespace flexopt::harness {

struct ScenarioFlexibility {
    double adaptability = 0.0;            // negative mean adaption cost (failures excluded)
    double mean_ada_cost = 0.0;           // failures excluded
    double mean_ada_cost_capped = 0.0;    // failures counted at the generation cap
    double median_ada_cost = 0.0;
    double avg_reco_cost = 0.0;
    double fail_fraction = 0.0;
    std::size_t n = 0;
};

struct RatioEstimate {
    bool defined = false;
    double value = 0.0;
    double ci_lo = 0.0;   // 2.5 / 97.5 bootstrap percentiles
    double ci_hi = 0.0;
};

struct FlexibilityReport {
    ScenarioFlexibility fg;
    ScenarioFlexibility mvg;
    RatioEstimate ada_cost_ratio_fg_mvg;
    RatioEstimate reco_cost_ratio_fg_mvg;

    std::string to_json(const FileMeta& meta) const;
    std::string ratio_table() const;   // human-readable summary
};

inline constexpr int kBootstrapResamples = 1000;

// Per-scenario aggregates plus FG/MVG cost ratios with percentile bootstrap
// confidence intervals (resampling records within each scenario).
FlexibilityReport flexibility_report(const std::vector<RunRecord>& records, const ExperimentConfig& cfg);

} // namespace flexopt::harness
