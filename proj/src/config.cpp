#include "prequential/config.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "prequential/errors.hpp"
#include "prequential/numeric_text.hpp"

namespace prequential {

namespace {

double real_value(const ConfigEntries &entries, std::string_view key,
                  double fallback) {
  const auto it = entries.find(key);
  if (it == entries.end()) {
    return fallback;
  }
  const auto value = parse_double(it->second);
  if (!value) {
    throw ConfigError(std::string(key),
                      "expected a finite real, got '" + it->second + "'");
  }
  return *value;
}

std::uint64_t uint_value(const ConfigEntries &entries, std::string_view key,
                         std::uint64_t fallback) {
  const auto it = entries.find(key);
  if (it == entries.end()) {
    return fallback;
  }
  const auto value = parse_uint(it->second);
  if (!value) {
    throw ConfigError(std::string(key),
                      "expected a non-negative integer, got '" + it->second +
                          "'");
  }
  return *value;
}

ProcessModel model_value(const ConfigEntries &entries, std::string_view prefix,
                         const ProcessModel &fallback) {
  const std::string p(prefix);
  return {real_value(entries, p + ".mean", fallback.mean),
          real_value(entries, p + ".phi", fallback.phi),
          real_value(entries, p + ".innovation_variance",
                     fallback.innovation_variance)};
}

} // namespace

const std::vector<std::string_view> &config_keys() {
  static const std::vector<std::string_view> keys{
      "replications",
      "series_length",
      "model_p.mean",
      "model_p.phi",
      "model_p.innovation_variance",
      "model_q.mean",
      "model_q.phi",
      "model_q.innovation_variance",
      "generator",
      "contamination.index",
      "contamination.shift",
      "seed",
      "cutoff",
  };
  return keys;
}

ConfigEntries config_entries(const ExperimentConfig &config) {
  ConfigEntries entries{
      {"replications", std::to_string(config.replications)},
      {"series_length", std::to_string(config.series_length)},
      {"model_p.mean", format_shortest(config.model_p.mean)},
      {"model_p.phi", format_shortest(config.model_p.phi)},
      {"model_p.innovation_variance",
       format_shortest(config.model_p.innovation_variance)},
      {"model_q.mean", format_shortest(config.model_q.mean)},
      {"model_q.phi", format_shortest(config.model_q.phi)},
      {"model_q.innovation_variance",
       format_shortest(config.model_q.innovation_variance)},
      {"generator", std::string(to_string(config.generator))},
      {"seed", std::to_string(config.seed)},
      {"cutoff", format_shortest(config.cutoff)},
  };
  if (config.contamination) {
    entries.emplace("contamination.index",
                    std::to_string(config.contamination->index));
    entries.emplace("contamination.shift",
                    format_shortest(config.contamination->shift));
  }
  return entries;
}

ExperimentConfig config_from_entries(const ConfigEntries &entries) {
  const auto &known = config_keys();
  for (const auto &[key, value] : entries) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ConfigError(key, "unknown config key");
    }
  }

  const auto defaults = paper_default_config();
  ExperimentConfig config;
  config.replications = uint_value(entries, "replications", defaults.replications);
  config.series_length =
      uint_value(entries, "series_length", defaults.series_length);
  config.model_p = model_value(entries, "model_p", defaults.model_p);
  config.model_q = model_value(entries, "model_q", defaults.model_q);
  config.seed = uint_value(entries, "seed", defaults.seed);
  config.cutoff = real_value(entries, "cutoff", defaults.cutoff);

  config.generator = defaults.generator;
  if (const auto it = entries.find("generator"); it != entries.end()) {
    if (it->second == "P") {
      config.generator = ModelId::P;
    } else if (it->second == "Q") {
      config.generator = ModelId::Q;
    } else {
      throw ConfigError("generator", "expected P or Q, got '" + it->second + "'");
    }
  }

  const bool has_index = entries.contains("contamination.index");
  const bool has_shift = entries.contains("contamination.shift");
  if (has_index != has_shift) {
    throw ConfigError(has_index ? "contamination.shift" : "contamination.index",
                      "contamination.index and contamination.shift must be "
                      "given together");
  }
  if (has_index) {
    config.contamination = Contamination{
        uint_value(entries, "contamination.index", 0),
        real_value(entries, "contamination.shift", 0.0)};
  }

  config.validate();
  return config;
}

ExperimentConfig parse_config_text(std::istream &in) {
  ConfigEntries entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') {
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("", "line " + std::to_string(line_no) +
                                ": expected 'key = value'");
    }
    const std::string key(trim(text.substr(0, eq)));
    const std::string value(trim(text.substr(eq + 1)));
    if (key.empty()) {
      throw ConfigError("", "line " + std::to_string(line_no) + ": empty key");
    }
    if (!entries.emplace(key, value).second) {
      throw ConfigError(key, "repeated config key");
    }
  }
  return config_from_entries(entries);
}

ExperimentConfig load_config_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open config file '" + path + "'");
  }
  return parse_config_text(in);
}

std::string format_config_text(const ExperimentConfig &config) {
  const auto entries = config_entries(config);
  std::ostringstream out;
  for (const auto key : config_keys()) {
    if (const auto it = entries.find(key); it != entries.end()) {
      out << key << " = " << it->second << '\n';
    }
  }
  return out.str();
}

} // namespace prequential
