#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prequential/experiment.hpp"

namespace prequential {

// Results CSV: header `rep_id,delta_log,delta_hyv,decision_log,decision_hyv`,
// one row per replication, reals with 17 significant digits, decisions as
// P / Q / TIE, LF line endings.
void write_results_csv(std::span<const ReplicationResult> results,
                       std::ostream &out);
void write_results_csv(std::span<const ReplicationResult> results,
                       const std::string &path);
std::vector<ReplicationResult> read_results_csv(std::istream &in);

struct SummaryDocument {
  ClassificationSummary summary;
  ExperimentConfig config;
  std::string version;
};

/// Flat JSON object: version, the five counts, replications_scored and every
/// config key (see config.hpp) at the top level.
void write_summary_json(const ClassificationSummary &summary,
                        const ExperimentConfig &config, std::ostream &out);
void write_summary_json(const ClassificationSummary &summary,
                        const ExperimentConfig &config,
                        const std::string &path);
SummaryDocument read_summary_json(std::istream &in);

/// Cumulative delta Hyvarinen vs delta log scatter, one point per
/// replication coloured by outcome. Ids in `highlight` get a black centre.
void render_scatter_svg(std::span<const ReplicationResult> results,
                        ModelId truth, std::ostream &out,
                        std::span<const std::size_t> highlight = {});
void render_scatter_svg(std::span<const ReplicationResult> results,
                        ModelId truth, const std::string &path,
                        std::span<const std::size_t> highlight = {});

/// Series against its 1-based index; the contaminated observation, when
/// given, is marked in red.
void render_series_svg(const Series &series,
                       std::optional<std::size_t> contamination_index,
                       std::ostream &out, const std::string &title = {});
void render_series_svg(const Series &series,
                       std::optional<std::size_t> contamination_index,
                       const std::string &path, const std::string &title = {});

} // namespace prequential
