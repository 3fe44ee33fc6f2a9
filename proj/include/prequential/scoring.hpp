#pragma once

#include <cmath>
#include <concepts>
#include <string_view>
#include <type_traits>
#include <vector>

#include "prequential/gauss_models.hpp"

namespace prequential {

// Orientation: every score here is a loss, smaller is better. Delta scores
// are S(x, Q) - S(x, P), so a positive delta favours model P.

enum class ScoreRule { Log, Hyvarinen };

std::string_view to_string(ScoreRule rule);

/// -log N(x; mean, variance) = 0.5 * [ln(2 pi variance) + (x - mean)^2 / variance].
double log_score(double x, const GaussianPredictive &pred);

/// 2 * d2/dx2 log p(x) + (d/dx log p(x))^2, which for a Gaussian is
/// -2 / variance + (x - mean)^2 / variance^2. Carries units of 1/x^2.
double hyvarinen_score(double x, const GaussianPredictive &pred);

double score(ScoreRule rule, double x, const GaussianPredictive &pred);

/// Finite-difference Hyvarinen score of an arbitrary log-density, built from
/// central first and second differences with step `h`. The normalizing
/// constant of `log_density` does not matter. Differences are taken in the
/// log-density's result type, so a long double density reduces roundoff.
template <typename LogDensity>
  requires std::invocable<LogDensity &, double>
double hyvarinen_fd_oracle(double x, LogDensity &&log_density, double h) {
  using Real = std::invoke_result_t<LogDensity &, double>;
  // Use the step that is actually representable around x.
  const double up = x + h;
  const double down = x - h;
  const Real step_up = up - x;
  const Real step_down = x - down;
  const Real f_up = log_density(up);
  const Real f_mid = log_density(x);
  const Real f_down = log_density(down);
  const Real first = (f_up - f_down) / (step_up + step_down);
  const Real second =
      2 * ((f_up - f_mid) / step_up - (f_mid - f_down) / step_down) /
      (step_up + step_down);
  return static_cast<double>(2 * second + first * first);
}

/// 0.5 * [ln var_Q - ln var_P + (x - mu_Q)^2 / var_Q - (x - mu_P)^2 / var_P]
double delta_log_step(double x, const GaussianPredictive &pred_p,
                      const GaussianPredictive &pred_q);

/// 2 / var_P - 2 / var_Q + (x - mu_Q)^2 / var_Q^2 - (x - mu_P)^2 / var_P^2
double delta_hyv_step(double x, const GaussianPredictive &pred_p,
                      const GaussianPredictive &pred_q);

double delta_step(ScoreRule rule, double x, const GaussianPredictive &pred_p,
                  const GaussianPredictive &pred_q);

/// Per-step and cumulative prequential delta scores of one series.
/// per_step_*[k] belongs to observation k + 2 (scoring starts at x_2).
struct DeltaPath {
  std::vector<double> per_step_log;
  std::vector<double> per_step_hyv;
  double cumulative_log = 0.0;
  double cumulative_hyv = 0.0;

  double cumulative(ScoreRule rule) const {
    return rule == ScoreRule::Log ? cumulative_log : cumulative_hyv;
  }
};

/// Scores x_2..x_n against the one-step predictives of both models.
/// Throws SeriesTooShortError when the series has fewer than 2 values.
DeltaPath cumulative_delta(const Series &series, const ProcessModel &model_p,
                           const ProcessModel &model_q);

enum class Decision { SelectP, SelectQ, Tie };

std::string_view to_string(Decision decision);

/// delta > cutoff selects P, delta < cutoff selects Q, equality is a Tie.
/// A non-zero cutoff is the Bayes rule under an asymmetric 0-1 loss or
/// unequal prior model probabilities.
Decision classify(double cumulative, double cutoff = 0.0);

} // namespace prequential
