#include "prequential/scoring.hpp"

#include <numbers>

#include "prequential/errors.hpp"

namespace prequential {

std::string_view to_string(ScoreRule rule) {
  switch (rule) {
  case ScoreRule::Log:
    return "log";
  case ScoreRule::Hyvarinen:
    return "hyvarinen";
  }
  return "unknown";
}

std::string_view to_string(Decision decision) {
  switch (decision) {
  case Decision::SelectP:
    return "P";
  case Decision::SelectQ:
    return "Q";
  case Decision::Tie:
    return "TIE";
  }
  return "unknown";
}

double log_score(double x, const GaussianPredictive &pred) {
  const double r = x - pred.mean;
  return 0.5 * (std::log(2.0 * std::numbers::pi * pred.variance) +
                r * r / pred.variance);
}

double hyvarinen_score(double x, const GaussianPredictive &pred) {
  const double r = x - pred.mean;
  return -2.0 / pred.variance + r * r / (pred.variance * pred.variance);
}

double score(ScoreRule rule, double x, const GaussianPredictive &pred) {
  return rule == ScoreRule::Log ? log_score(x, pred) : hyvarinen_score(x, pred);
}

double delta_log_step(double x, const GaussianPredictive &pred_p,
                      const GaussianPredictive &pred_q) {
  const double rp = x - pred_p.mean;
  const double rq = x - pred_q.mean;
  return 0.5 * (std::log(pred_q.variance) - std::log(pred_p.variance) +
                rq * rq / pred_q.variance - rp * rp / pred_p.variance);
}

double delta_hyv_step(double x, const GaussianPredictive &pred_p,
                      const GaussianPredictive &pred_q) {
  const double rp = x - pred_p.mean;
  const double rq = x - pred_q.mean;
  return 2.0 / pred_p.variance - 2.0 / pred_q.variance +
         rq * rq / (pred_q.variance * pred_q.variance) -
         rp * rp / (pred_p.variance * pred_p.variance);
}

double delta_step(ScoreRule rule, double x, const GaussianPredictive &pred_p,
                  const GaussianPredictive &pred_q) {
  return rule == ScoreRule::Log ? delta_log_step(x, pred_p, pred_q)
                                : delta_hyv_step(x, pred_p, pred_q);
}

DeltaPath cumulative_delta(const Series &series, const ProcessModel &model_p,
                           const ProcessModel &model_q) {
  model_p.validate();
  model_q.validate();
  if (series.size() < 2) {
    throw SeriesTooShortError("scoring needs at least 2 observations, got " +
                              std::to_string(series.size()));
  }

  const auto &x = series.values;
  DeltaPath path;
  path.per_step_log.reserve(x.size() - 1);
  path.per_step_hyv.reserve(x.size() - 1);
  for (std::size_t i = 1; i < x.size(); ++i) {
    const auto pred_p = conditional_predictive(model_p, x[i - 1]);
    const auto pred_q = conditional_predictive(model_q, x[i - 1]);
    const double dl = delta_log_step(x[i], pred_p, pred_q);
    const double dh = delta_hyv_step(x[i], pred_p, pred_q);
    path.per_step_log.push_back(dl);
    path.per_step_hyv.push_back(dh);
    path.cumulative_log += dl;
    path.cumulative_hyv += dh;
  }
  return path;
}

Decision classify(double cumulative, double cutoff) {
  if (cumulative > cutoff) {
    return Decision::SelectP;
  }
  if (cumulative < cutoff) {
    return Decision::SelectQ;
  }
  return Decision::Tie;
}

} // namespace prequential
