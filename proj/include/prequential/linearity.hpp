#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "prequential/gauss_models.hpp"

namespace prequential {

enum class AffineCase { EqualVariances, EqualMeans, Degenerate };

std::string_view to_string(AffineCase c);

/// delta_hyv = intercept + slope * delta_log, holding for every per-step
/// delta. Summed over m steps the relation keeps its slope and the intercept
/// becomes m * intercept.
struct AffineRelation {
  double intercept = 0.0;
  double slope = 1.0;
  AffineCase case_label = AffineCase::Degenerate;

  double apply(double delta_log) const { return intercept + slope * delta_log; }

  AffineRelation cumulative(std::size_t steps) const {
    return {static_cast<double>(steps) * intercept, slope, case_label};
  }

  /// Cutoff on delta_hyv that gives the same decision as `log_cutoff` on
  /// delta_log (slope > 0).
  double equivalent_hyv_cutoff(double log_cutoff) const {
    return apply(log_cutoff);
  }
};

/// Exact per-step affine relation between the two delta scores for a pair of
/// AR(1) models, or nullopt when none exists. Exists when the innovation
/// variances agree (any conditional means) or when the conditional means
/// always agree (same mean and phi). Identical models give the
/// equal-variance coefficients labelled Degenerate.
std::optional<AffineRelation> affine_relation(const ProcessModel &model_p,
                                              const ProcessModel &model_q);

struct AffineFit {
  double intercept = 0.0;
  double slope = 0.0;
  double max_abs_residual = 0.0;
};

using DeltaPair = std::pair<double, double>; // (delta_log, delta_hyv)

/// Ordinary least-squares fit of delta_hyv on delta_log. Needs at least 3
/// pairs with non-constant delta_log, otherwise DegenerateInputError.
AffineFit fit_affine(std::span<const DeltaPair> pairs);

/// Largest absolute residual of fit_affine.
double empirical_affine_residual(std::span<const DeltaPair> pairs);

} // namespace prequential
