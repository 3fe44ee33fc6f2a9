#include "prequential/linearity.hpp"

#include <algorithm>
#include <cmath>

#include "prequential/errors.hpp"

namespace prequential {

std::string_view to_string(AffineCase c) {
  switch (c) {
  case AffineCase::EqualVariances:
    return "EqualVariances";
  case AffineCase::EqualMeans:
    return "EqualMeans";
  case AffineCase::Degenerate:
    return "Degenerate";
  }
  return "unknown";
}

std::optional<AffineRelation> affine_relation(const ProcessModel &model_p,
                                              const ProcessModel &model_q) {
  model_p.validate();
  model_q.validate();
  const double var_p = model_p.innovation_variance;
  const double var_q = model_q.innovation_variance;
  // Conditional means mean + phi * (prev - mean) agree for every history iff
  // (mean, phi) agree, with the exception phi = 1 where the mean drops out.
  const bool same_conditional_means =
      model_p.phi == model_q.phi &&
      (model_p.mean == model_q.mean || model_p.phi == 1.0);

  if (var_p == var_q) {
    const auto label = same_conditional_means ? AffineCase::Degenerate
                                              : AffineCase::EqualVariances;
    return AffineRelation{0.0, 2.0 / var_p, label};
  }
  if (same_conditional_means) {
    const double inv_p = 1.0 / var_p;
    const double inv_q = 1.0 / var_q;
    return AffineRelation{
        2.0 * (inv_p - inv_q) - (inv_q + inv_p) * std::log(var_q / var_p),
        2.0 * (inv_q + inv_p), AffineCase::EqualMeans};
  }
  return std::nullopt;
}

AffineFit fit_affine(std::span<const DeltaPair> pairs) {
  if (pairs.size() < 3) {
    throw DegenerateInputError("affine fit needs at least 3 pairs, got " +
                               std::to_string(pairs.size()));
  }
  const double n = static_cast<double>(pairs.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto &[x, y] : pairs) {
    mean_x += x;
    mean_y += y;
  }
  mean_x /= n;
  mean_y /= n;

  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto &[x, y] : pairs) {
    sxx += (x - mean_x) * (x - mean_x);
    sxy += (x - mean_x) * (y - mean_y);
  }
  if (!(sxx > 0.0)) {
    throw DegenerateInputError("all delta_log values coincide");
  }

  AffineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  for (const auto &[x, y] : pairs) {
    fit.max_abs_residual = std::max(
        fit.max_abs_residual, std::abs(y - (fit.intercept + fit.slope * x)));
  }
  return fit;
}

double empirical_affine_residual(std::span<const DeltaPair> pairs) {
  return fit_affine(pairs).max_abs_residual;
}

} // namespace prequential
