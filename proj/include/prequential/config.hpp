#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "prequential/experiment.hpp"

namespace prequential {

// Experiment config document: one `key = value` per line, '#' comments and
// blank lines ignored. Keys:
//
//   replications, series_length, seed, cutoff, generator (P or Q),
//   model_p.mean, model_p.phi, model_p.innovation_variance,
//   model_q.mean, model_q.phi, model_q.innovation_variance,
//   contamination.index (1-based), contamination.shift
//
// Keys left out take their value from paper_default_config(). The two
// contamination keys must appear together. Unknown or repeated keys are a
// ConfigError naming the key.

/// Flat key -> value text view of a config.
using ConfigEntries = std::map<std::string, std::string, std::less<>>;

/// Keys in canonical document order.
const std::vector<std::string_view> &config_keys();

ConfigEntries config_entries(const ExperimentConfig &config);
ExperimentConfig config_from_entries(const ConfigEntries &entries);

ExperimentConfig parse_config_text(std::istream &in);
ExperimentConfig load_config_file(const std::string &path);

std::string format_config_text(const ExperimentConfig &config);

} // namespace prequential
