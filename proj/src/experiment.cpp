#include "prequential/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <random>
#include <thread>

#include "prequential/errors.hpp"

namespace prequential {

std::string_view to_string(ModelId id) { return id == ModelId::P ? "P" : "Q"; }

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
  case Outcome::BothCorrect:
    return "both_correct";
  case Outcome::BothWrong:
    return "both_wrong";
  case Outcome::OnlyHyvWrong:
    return "only_hyv_wrong";
  case Outcome::OnlyLogWrong:
    return "only_log_wrong";
  case Outcome::Tie:
    return "tie";
  }
  return "unknown";
}

void ExperimentConfig::validate() const {
  if (replications < 1) {
    throw ConfigError("replications", "must be at least 1");
  }
  if (series_length < 2) {
    throw ConfigError("series_length", "must be at least 2");
  }
  try {
    model_p.validate();
  } catch (const ValidationError &e) {
    throw ConfigError("model_p", e.what());
  }
  try {
    model_q.validate();
  } catch (const ValidationError &e) {
    throw ConfigError("model_q", e.what());
  }
  if (!generating_model().is_stationary()) {
    throw ConfigError(generator == ModelId::P ? "model_p.phi" : "model_q.phi",
                      "generating model must satisfy |phi| < 1");
  }
  if (contamination) {
    if (contamination->index < 1 || contamination->index > series_length) {
      throw ConfigError("contamination.index",
                        "index " + std::to_string(contamination->index) +
                            " outside [1, " + std::to_string(series_length) +
                            "]");
    }
    if (!std::isfinite(contamination->shift)) {
      throw ConfigError("contamination.shift", "must be finite");
    }
  }
  if (!std::isfinite(cutoff)) {
    throw ConfigError("cutoff", "must be finite");
  }
}

ExperimentConfig paper_default_config(std::uint64_t seed) {
  ExperimentConfig config;
  config.replications = 100;
  config.series_length = 101;
  config.model_p = {0.0, 0.5, 1.0};
  config.model_q = {0.0, 0.1, 4.0};
  config.generator = ModelId::P;
  config.contamination.reset();
  config.seed = seed;
  config.cutoff = 0.0;
  return config;
}

Outcome outcome_of(const ReplicationResult &result, ModelId truth) {
  if (result.decision_log == Decision::Tie ||
      result.decision_hyv == Decision::Tie) {
    return Outcome::Tie;
  }
  const Decision correct =
      truth == ModelId::P ? Decision::SelectP : Decision::SelectQ;
  const bool log_ok = result.decision_log == correct;
  const bool hyv_ok = result.decision_hyv == correct;
  if (log_ok && hyv_ok) {
    return Outcome::BothCorrect;
  }
  if (!log_ok && !hyv_ok) {
    return Outcome::BothWrong;
  }
  return log_ok ? Outcome::OnlyHyvWrong : Outcome::OnlyLogWrong;
}

RandomStream replication_stream(std::uint64_t seed, std::size_t rep_id) {
  const auto rep = static_cast<std::uint64_t>(rep_id);
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(rep),
                    static_cast<std::uint32_t>(rep >> 32)};
  return RandomStream(seq);
}

Series replication_series(const ExperimentConfig &config, std::size_t rep_id) {
  auto rng = replication_stream(config.seed, rep_id);
  auto series =
      simulate_series(config.generating_model(), config.series_length, rng);
  if (config.contamination) {
    series = contaminate(series, config.contamination->index,
                         config.contamination->shift);
  }
  return series;
}

ReplicationResult run_replication(const ExperimentConfig &config,
                                  std::size_t rep_id) {
  const auto series = replication_series(config, rep_id);
  const auto path = cumulative_delta(series, config.model_p, config.model_q);
  return {rep_id, path.cumulative_log, path.cumulative_hyv,
          classify(path.cumulative_log, config.cutoff),
          classify(path.cumulative_hyv, config.cutoff)};
}

std::vector<ReplicationResult> run_experiment(const ExperimentConfig &config,
                                              unsigned threads) {
  config.validate();
  const std::size_t count = config.replications;
  std::vector<ReplicationResult> results(count);
  std::vector<std::exception_ptr> errors(count);

  // rep_id is 1-based; slot k holds replication k + 1.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next.fetch_add(1); k < count; k = next.fetch_add(1)) {
      try {
        results[k] = run_replication(config, k + 1);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };

  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  const auto workers =
      static_cast<std::size_t>(std::min<std::size_t>(threads, count));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back(worker);
    }
  }

  for (std::size_t k = 0; k < count; ++k) {
    if (errors[k]) {
      try {
        std::rethrow_exception(errors[k]);
      } catch (const std::exception &e) {
        throw ReplicationError(k + 1, e.what());
      }
    }
  }
  return results;
}

ClassificationSummary summarize(std::span<const ReplicationResult> results,
                                ModelId truth) {
  if (results.empty()) {
    throw EmptyResultsError("cannot summarize an empty result list");
  }
  ClassificationSummary summary;
  for (const auto &r : results) {
    switch (outcome_of(r, truth)) {
    case Outcome::BothCorrect:
      ++summary.both_correct;
      break;
    case Outcome::BothWrong:
      ++summary.both_wrong;
      break;
    case Outcome::OnlyHyvWrong:
      ++summary.only_hyv_wrong;
      break;
    case Outcome::OnlyLogWrong:
      ++summary.only_log_wrong;
      break;
    case Outcome::Tie:
      ++summary.any_tie;
      break;
    }
  }
  return summary;
}

} // namespace prequential
