#include "prequential/gauss_models.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "prequential/errors.hpp"
#include "prequential/numeric_text.hpp"

namespace prequential {

void GaussianPredictive::validate() const {
  if (!std::isfinite(mean)) {
    throw ValidationError("predictive mean must be finite");
  }
  if (!(std::isfinite(variance) && variance > 0.0)) {
    throw ValidationError("predictive variance must be finite and > 0, got " +
                          format_double(variance));
  }
}

void ProcessModel::validate() const {
  if (!std::isfinite(mean) || !std::isfinite(phi)) {
    throw ValidationError("model mean and phi must be finite");
  }
  if (!(std::isfinite(innovation_variance) && innovation_variance > 0.0)) {
    throw ValidationError("innovation variance must be finite and > 0, got " +
                          format_double(innovation_variance));
  }
}

bool ProcessModel::is_stationary() const noexcept { return std::abs(phi) < 1.0; }

void ProcessModel::validate_stationary() const {
  validate();
  if (!is_stationary()) {
    throw NonstationaryModelError(
        "AR(1) model is not stationary: require |phi| < 1, got phi = " +
        format_double(phi));
  }
}

std::string to_string(const ProcessModel &model) {
  return "(mean=" + format_double(model.mean) +
         ", phi=" + format_double(model.phi) +
         ", innovation_variance=" + format_double(model.innovation_variance) +
         ")";
}

GaussianPredictive conditional_predictive(const ProcessModel &model,
                                          double previous_value) {
  model.validate();
  return {model.mean + model.phi * (previous_value - model.mean),
          model.innovation_variance};
}

GaussianPredictive stationary_distribution(const ProcessModel &model) {
  model.validate_stationary();
  return {model.mean,
          model.innovation_variance / (1.0 - model.phi * model.phi)};
}

Series simulate_series(const ProcessModel &model, std::size_t n,
                       RandomStream &rng) {
  model.validate_stationary();
  if (n < 2) {
    throw ValidationError("series length must be at least 2, got " +
                          std::to_string(n));
  }
  std::normal_distribution<double> standard_normal(0.0, 1.0);

  Series series;
  series.values.reserve(n);
  const auto initial = stationary_distribution(model);
  series.values.push_back(initial.mean +
                          std::sqrt(initial.variance) * standard_normal(rng));

  const double innovation_sd = std::sqrt(model.innovation_variance);
  for (std::size_t i = 1; i < n; ++i) {
    const auto pred = conditional_predictive(model, series.values.back());
    series.values.push_back(pred.mean + innovation_sd * standard_normal(rng));
  }
  return series;
}

Series contaminate(const Series &series, std::size_t index, double shift) {
  if (index < 1 || index > series.size()) {
    throw IndexOutOfRangeError("contamination index " + std::to_string(index) +
                               " outside [1, " + std::to_string(series.size()) +
                               "]");
  }
  Series out = series;
  out.values[index - 1] += shift;
  return out;
}

Series read_series(std::istream &in) {
  Series series;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') {
      continue;
    }
    const auto value = parse_double(text);
    if (!value) {
      throw ValidationError("series line " + std::to_string(line_no) +
                            ": not a finite real: '" + std::string(text) + "'");
    }
    series.values.push_back(*value);
  }
  return series;
}

Series read_series_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open series file '" + path + "'");
  }
  return read_series(in);
}

void write_series(const Series &series, std::ostream &out) {
  for (double v : series.values) {
    out << format_double(v) << '\n';
  }
}

void write_series_file(const Series &series, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  write_series(series, out);
  if (!out) {
    throw IoError("write to '" + path + "' failed");
  }
}

} // namespace prequential
