#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "prequential/gauss_models.hpp"
#include "prequential/scoring.hpp"

namespace prequential {

enum class ModelId { P, Q };

std::string_view to_string(ModelId id);

/// Single additive outlier at a 1-based observation index.
struct Contamination {
  std::size_t index = 1;
  double shift = 0.0;

  friend bool operator==(const Contamination &, const Contamination &) = default;
};

inline constexpr std::uint64_t kDefaultSeed = 20151101;

struct ExperimentConfig {
  std::size_t replications = 100;
  std::size_t series_length = 101;
  ProcessModel model_p;
  ProcessModel model_q;
  ModelId generator = ModelId::P;
  std::optional<Contamination> contamination;
  std::uint64_t seed = kDefaultSeed;
  double cutoff = 0.0;

  const ProcessModel &generating_model() const {
    return generator == ModelId::P ? model_p : model_q;
  }

  /// Throws ValidationError (ConfigError naming the field) on bad values.
  void validate() const;

  friend bool operator==(const ExperimentConfig &,
                         const ExperimentConfig &) = default;
};

/// 100 series of length 101 from P = AR(1)(phi 0.5, var 1), scored against
/// Q = AR(1)(phi 0.1, var 4), zero means, no contamination, cutoff 0.
ExperimentConfig paper_default_config(std::uint64_t seed = kDefaultSeed);

struct ReplicationResult {
  std::size_t rep_id = 0;
  double cumulative_log = 0.0;
  double cumulative_hyv = 0.0;
  Decision decision_log = Decision::Tie;
  Decision decision_hyv = Decision::Tie;

  friend bool operator==(const ReplicationResult &,
                         const ReplicationResult &) = default;
};

struct ClassificationSummary {
  std::size_t both_correct = 0;
  std::size_t both_wrong = 0;
  std::size_t only_hyv_wrong = 0;
  std::size_t only_log_wrong = 0;
  std::size_t any_tie = 0;

  std::size_t total() const {
    return both_correct + both_wrong + only_hyv_wrong + only_log_wrong +
           any_tie;
  }
  std::size_t hyv_wrong() const { return both_wrong + only_hyv_wrong; }
  std::size_t log_wrong() const { return both_wrong + only_log_wrong; }

  friend bool operator==(const ClassificationSummary &,
                         const ClassificationSummary &) = default;
};

enum class Outcome { BothCorrect, BothWrong, OnlyHyvWrong, OnlyLogWrong, Tie };

std::string_view to_string(Outcome outcome);

Outcome outcome_of(const ReplicationResult &result, ModelId truth);

/// Independent stream for replication `rep_id`, a pure function of
/// (seed, rep_id).
RandomStream replication_stream(std::uint64_t seed, std::size_t rep_id);

/// The (possibly contaminated) series scored in replication `rep_id`.
Series replication_series(const ExperimentConfig &config, std::size_t rep_id);

ReplicationResult run_replication(const ExperimentConfig &config,
                                  std::size_t rep_id);

/// `threads` = 0 uses the hardware concurrency. Results are ordered by
/// rep_id and do not depend on the thread count. A failing replication is
/// rethrown as ReplicationError carrying its rep_id (lowest id first).
std::vector<ReplicationResult> run_experiment(const ExperimentConfig &config,
                                              unsigned threads = 1);

/// Throws EmptyResultsError on empty input. A Tie under either rule counts
/// toward any_tie only.
ClassificationSummary summarize(std::span<const ReplicationResult> results,
                                ModelId truth);

} // namespace prequential
