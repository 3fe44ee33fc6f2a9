#pragma once

// Test-only reference computations. None of these call into the library's
// scoring or fitting code.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace prequential::testing {

inline double gaussian_density(double x, double mean, double variance) {
  const double z = (x - mean);
  return std::exp(-0.5 * z * z / variance) /
         std::sqrt(2.0 * std::numbers::pi * variance);
}

/// Negative log of the numerically evaluated density.
inline double log_score_oracle(double x, double mean, double variance) {
  return -std::log(gaussian_density(x, mean, variance));
}

/// Log-density with its normalizing constant dropped; the Hyvarinen score
/// does not depend on it.
inline auto unnormalized_log_density(double mean, double variance) {
  return [mean, variance](double x) {
    const double z = x - mean;
    return -0.5 * z * z / variance;
  };
}

inline auto normalized_log_density(double mean, double variance) {
  return [mean, variance](double x) {
    return std::log(gaussian_density(x, mean, variance));
  };
}

/// Same density evaluated in extended precision, for finite differences
/// whose error is dominated by roundoff.
inline auto extended_log_density(double mean, double variance) {
  return [mean, variance](double x) -> long double {
    const long double z = static_cast<long double>(x) - mean;
    return -0.5L * z * z / variance -
           0.5L * std::log(2.0L * std::numbers::pi_v<long double> * variance);
  };
}

struct SampleStats {
  double mean = 0.0;
  double variance = 0.0;
  double lag1_autocorrelation = 0.0;
};

inline SampleStats sample_stats(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  SampleStats s;
  for (double v : x) {
    s.mean += v;
  }
  s.mean /= n;
  double c0 = 0.0;
  double c1 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    c0 += (x[i] - s.mean) * (x[i] - s.mean);
    if (i > 0) {
      c1 += (x[i] - s.mean) * (x[i - 1] - s.mean);
    }
  }
  s.variance = c0 / (n - 1.0);
  s.lag1_autocorrelation = c1 / c0;
  return s;
}

/// Least-squares line through (x, y) from the raw-sum normal equations,
/// solved by Cramer's rule. Returns (intercept, slope).
inline std::pair<double, double>
normal_equation_fit(std::span<const std::pair<double, double>> pairs) {
  double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto &[x, y] : pairs) {
    n += 1;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double det = n * sxx - sx * sx;
  const double slope = (n * sxy - sx * sy) / det;
  const double intercept = (sxx * sy - sx * sxy) / det;
  return {intercept, slope};
}

/// Relative closeness with an absolute floor for values near zero.
inline bool rel_close(double a, double b, double rel, double floor = 1e-300) {
  const double scale = std::max({std::abs(a), std::abs(b), floor});
  return std::abs(a - b) <= rel * scale;
}

} // namespace prequential::testing
