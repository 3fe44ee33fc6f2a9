#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace prequential {

/// One-step Gaussian predictive N(mean, variance) for an observation given
/// its history.
struct GaussianPredictive {
  double mean = 0.0;
  double variance = 1.0;

  /// Throws ValidationError unless variance is finite and positive.
  void validate() const;

  friend bool operator==(const GaussianPredictive &,
                         const GaussianPredictive &) = default;
};

/// Gaussian AR(1) process x_i = mean + phi * (x_{i-1} - mean) + e_i with
/// e_i ~ N(0, innovation_variance). phi = 0 gives an iid sequence.
struct ProcessModel {
  double mean = 0.0;
  double phi = 0.0;
  double innovation_variance = 1.0;

  /// Scoring needs only a positive innovation variance.
  void validate() const;
  /// Simulation additionally needs |phi| < 1.
  void validate_stationary() const;
  bool is_stationary() const noexcept;

  friend bool operator==(const ProcessModel &, const ProcessModel &) = default;
};

std::string to_string(const ProcessModel &model);

/// Observed series x_1..x_n. Indices in the public API are 1-based.
struct Series {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  bool empty() const noexcept { return values.empty(); }
  std::span<const double> view() const noexcept { return values; }

  friend bool operator==(const Series &, const Series &) = default;
};

/// Random stream type used throughout. Each replication owns one.
using RandomStream = std::mt19937_64;

GaussianPredictive conditional_predictive(const ProcessModel &model,
                                          double previous_value);

/// N(mean, innovation_variance / (1 - phi^2)). Throws
/// NonstationaryModelError when |phi| >= 1.
GaussianPredictive stationary_distribution(const ProcessModel &model);

/// x_1 from the stationary distribution, then each x_i from the conditional
/// predictive given x_{i-1}.
Series simulate_series(const ProcessModel &model, std::size_t n,
                       RandomStream &rng);

/// Copy of `series` with the observation at 1-based `index` shifted by
/// `shift` (an additive outlier).
Series contaminate(const Series &series, std::size_t index, double shift);

// Plain-text series format: one value per line, '#' comments and blank
// lines ignored.
Series read_series(std::istream &in);
Series read_series_file(const std::string &path);
void write_series(const Series &series, std::ostream &out);
void write_series_file(const Series &series, const std::string &path);

} // namespace prequential
