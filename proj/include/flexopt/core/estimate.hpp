#pragma once
// Monte Carlo estimate with failure accounting.
//
// Estimators report the mean over successful trials plus the fraction of
// trials that failed (infinite cost), instead of letting a single infinity
// destroy the sample mean.

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace flexopt {

inline constexpr double kInfiniteCost = std::numeric_limits<double>::infinity();

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t n_success = 0;
    std::size_t n_total = 0;

    double fail_fraction() const {
        return n_total == 0 ? 0.0 : static_cast<double>(n_total - n_success) / static_cast<double>(n_total);
    }

    // Mean/stderr over the finite samples; failures are counted separately.
    static Estimate from_samples(const std::vector<double>& finite_samples, std::size_t n_failed = 0) {
        Estimate e;
        e.n_success = finite_samples.size();
        e.n_total = finite_samples.size() + n_failed;
        if (finite_samples.empty()) return e;
        double sum = 0.0;
        for (double v : finite_samples) sum += v;
        e.mean = sum / static_cast<double>(finite_samples.size());
        if (finite_samples.size() > 1) {
            double ss = 0.0;
            for (double v : finite_samples) {
                const double d = v - e.mean;
                ss += d * d;
            }
            const double var = ss / static_cast<double>(finite_samples.size() - 1);
            e.std_error = std::sqrt(var / static_cast<double>(finite_samples.size()));
        }
        return e;
    }

    Estimate negated() const {
        Estimate e = *this;
        e.mean = -e.mean;
        return e;
    }
};

} // namespace flexopt
