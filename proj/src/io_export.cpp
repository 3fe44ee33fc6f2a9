#include "prequential/io_export.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "prequential/config.hpp"
#include "prequential/errors.hpp"
#include "prequential/numeric_text.hpp"
#include "prequential/version.hpp"
#include "svg.hpp"

namespace prequential {

namespace {

constexpr std::string_view kCsvHeader =
    "rep_id,delta_log,delta_hyv,decision_log,decision_hyv";

std::ofstream open_for_writing(const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  return out;
}

void finish_writing(std::ofstream &out, const std::string &path) {
  out.flush();
  if (!out) {
    throw IoError("write to '" + path + "' failed");
  }
}

Decision parse_decision(std::string_view text, std::size_t line_no) {
  if (text == "P") {
    return Decision::SelectP;
  }
  if (text == "Q") {
    return Decision::SelectQ;
  }
  if (text == "TIE") {
    return Decision::Tie;
  }
  throw ValidationError("results csv line " + std::to_string(line_no) +
                        ": bad decision '" + std::string(text) + "'");
}

struct OutcomeStyle {
  Outcome outcome;
  std::string_view color;
  std::string_view label;
};

// False selections of Q are the highlighted categories.
constexpr std::array<OutcomeStyle, 5> kOutcomeStyles{{
    {Outcome::BothCorrect, "#8c8c8c", "both correct"},
    {Outcome::BothWrong, "#d62728", "both wrong"},
    {Outcome::OnlyHyvWrong, "#ff7f0e", "Hyvarinen only wrong"},
    {Outcome::OnlyLogWrong, "#1f77b4", "log only wrong"},
    {Outcome::Tie, "#9467bd", "tie"},
}};

const OutcomeStyle &style_of(Outcome outcome) {
  return *std::find_if(kOutcomeStyles.begin(), kOutcomeStyles.end(),
                       [&](const auto &s) { return s.outcome == outcome; });
}

} // namespace

void write_results_csv(std::span<const ReplicationResult> results,
                       std::ostream &out) {
  out << kCsvHeader << '\n';
  for (const auto &r : results) {
    out << r.rep_id << ',' << format_double(r.cumulative_log) << ','
        << format_double(r.cumulative_hyv) << ',' << to_string(r.decision_log)
        << ',' << to_string(r.decision_hyv) << '\n';
  }
}

void write_results_csv(std::span<const ReplicationResult> results,
                       const std::string &path) {
  auto out = open_for_writing(path);
  write_results_csv(results, out);
  finish_writing(out, path);
}

std::vector<ReplicationResult> read_results_csv(std::istream &in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != kCsvHeader) {
    throw ValidationError("results csv: missing or unexpected header");
  }
  std::vector<ReplicationResult> results;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) {
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream row(line);
    std::string field;
    while (std::getline(row, field, ',')) {
      fields.push_back(field);
    }
    if (fields.size() != 5) {
      throw ValidationError("results csv line " + std::to_string(line_no) +
                            ": expected 5 fields");
    }
    const auto rep = parse_uint(fields[0]);
    const auto dl = parse_double(fields[1]);
    const auto dh = parse_double(fields[2]);
    if (!rep || !dl || !dh) {
      throw ValidationError("results csv line " + std::to_string(line_no) +
                            ": bad numeric field");
    }
    results.push_back({static_cast<std::size_t>(*rep), *dl, *dh,
                       parse_decision(trim(fields[3]), line_no),
                       parse_decision(trim(fields[4]), line_no)});
  }
  return results;
}

void write_summary_json(const ClassificationSummary &summary,
                        const ExperimentConfig &config, std::ostream &out) {
  nlohmann::ordered_json doc;
  doc["version"] = kVersion;
  doc["both_correct"] = summary.both_correct;
  doc["both_wrong"] = summary.both_wrong;
  doc["only_hyv_wrong"] = summary.only_hyv_wrong;
  doc["only_log_wrong"] = summary.only_log_wrong;
  doc["any_tie"] = summary.any_tie;
  doc["replications_scored"] = summary.total();

  doc["replications"] = config.replications;
  doc["series_length"] = config.series_length;
  doc["model_p.mean"] = config.model_p.mean;
  doc["model_p.phi"] = config.model_p.phi;
  doc["model_p.innovation_variance"] = config.model_p.innovation_variance;
  doc["model_q.mean"] = config.model_q.mean;
  doc["model_q.phi"] = config.model_q.phi;
  doc["model_q.innovation_variance"] = config.model_q.innovation_variance;
  doc["generator"] = std::string(to_string(config.generator));
  if (config.contamination) {
    doc["contamination.index"] = config.contamination->index;
    doc["contamination.shift"] = config.contamination->shift;
  }
  doc["seed"] = config.seed;
  doc["cutoff"] = config.cutoff;
  out << doc.dump(2) << '\n';
}

void write_summary_json(const ClassificationSummary &summary,
                        const ExperimentConfig &config,
                        const std::string &path) {
  auto out = open_for_writing(path);
  write_summary_json(summary, config, out);
  finish_writing(out, path);
}

SummaryDocument read_summary_json(std::istream &in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception &e) {
    throw ValidationError(std::string("summary json: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ValidationError("summary json: expected an object");
  }

  SummaryDocument result;
  try {
    result.version = doc.at("version").get<std::string>();
    result.summary.both_correct = doc.at("both_correct").get<std::size_t>();
    result.summary.both_wrong = doc.at("both_wrong").get<std::size_t>();
    result.summary.only_hyv_wrong = doc.at("only_hyv_wrong").get<std::size_t>();
    result.summary.only_log_wrong = doc.at("only_log_wrong").get<std::size_t>();
    result.summary.any_tie = doc.at("any_tie").get<std::size_t>();
  } catch (const nlohmann::json::exception &e) {
    throw ValidationError(std::string("summary json: ") + e.what());
  }

  ConfigEntries entries;
  for (const auto key : config_keys()) {
    const auto it = doc.find(std::string(key));
    if (it == doc.end()) {
      continue;
    }
    entries.emplace(std::string(key),
                    it->is_string() ? it->get<std::string>() : it->dump());
  }
  result.config = config_from_entries(entries);
  return result;
}

void render_scatter_svg(std::span<const ReplicationResult> results,
                        ModelId truth, std::ostream &out,
                        std::span<const std::size_t> highlight) {
  if (results.empty()) {
    throw EmptyResultsError("scatter plot needs at least one result");
  }
  // Both ranges always contain zero so the reference lines are drawn.
  double x_lo = 0.0, x_hi = 0.0, y_lo = 0.0, y_hi = 0.0;
  for (const auto &r : results) {
    x_lo = std::min(x_lo, r.cumulative_log);
    x_hi = std::max(x_hi, r.cumulative_log);
    y_lo = std::min(y_lo, r.cumulative_hyv);
    y_hi = std::max(y_hi, r.cumulative_hyv);
  }

  constexpr double width = 720, height = 520;
  constexpr double left = 90, top = 40, plot_w = 440, plot_h = 400;
  svg::Document doc(width, height);
  svg::Axes axes(doc, left, top, plot_w, plot_h, svg::Range::of(x_lo, x_hi),
                 svg::Range::of(y_lo, y_hi));
  doc.text(left + plot_w / 2, 24,
           "Cumulative prequential delta scores (truth: " +
               std::string(to_string(truth)) + ")",
           "text-anchor=\"middle\"", 14);
  axes.draw_zero_lines();
  axes.draw_frame("delta log-score", "delta Hyvarinen score");

  for (const auto &r : results) {
    const auto &style = style_of(outcome_of(r, truth));
    const double cx = axes.px(r.cumulative_log);
    const double cy = axes.py(r.cumulative_hyv);
    doc.circle(cx, cy, 4, style.color,
               "class=\"point " + std::string(to_string(style.outcome)) +
                   "\" data-rep=\"" + std::to_string(r.rep_id) + "\"");
    if (std::find(highlight.begin(), highlight.end(), r.rep_id) !=
        highlight.end()) {
      doc.circle(cx, cy, 1.8, "black", "class=\"center\"");
    }
  }

  double ly = top + 10;
  for (const auto &style : kOutcomeStyles) {
    doc.rect(left + plot_w + 20, ly, 10, 10, style.color, "class=\"legend\"");
    doc.text(left + plot_w + 36, ly + 9, style.label);
    ly += 20;
  }
  out << doc.str();
}

void render_scatter_svg(std::span<const ReplicationResult> results,
                        ModelId truth, const std::string &path,
                        std::span<const std::size_t> highlight) {
  std::ostringstream rendered;
  render_scatter_svg(results, truth, rendered, highlight);
  auto out = open_for_writing(path);
  out << rendered.str();
  finish_writing(out, path);
}

void render_series_svg(const Series &series,
                       std::optional<std::size_t> contamination_index,
                       std::ostream &out, const std::string &title) {
  if (series.empty()) {
    throw ValidationError("series plot needs at least one observation");
  }
  if (contamination_index &&
      (*contamination_index < 1 || *contamination_index > series.size())) {
    throw IndexOutOfRangeError("outlier index " +
                               std::to_string(*contamination_index) +
                               " outside [1, " + std::to_string(series.size()) +
                               "]");
  }
  const auto [min_it, max_it] =
      std::minmax_element(series.values.begin(), series.values.end());

  constexpr double width = 720, height = 320;
  constexpr double left = 90, top = 40, plot_w = 600, plot_h = 220;
  svg::Document doc(width, height);
  svg::Axes axes(doc, left, top, plot_w, plot_h,
                 svg::Range::of(1.0, static_cast<double>(series.size()), 0.02),
                 svg::Range::of(*min_it, *max_it));
  if (!title.empty()) {
    doc.text(left + plot_w / 2, 24, title,
             "text-anchor=\"middle\"", 14);
  }
  axes.draw_frame("observation index", "x");

  std::vector<std::pair<double, double>> points;
  points.reserve(series.size());
  for (std::size_t i = 0; i < series.size(); ++i) {
    points.emplace_back(axes.px(static_cast<double>(i + 1)),
                        axes.py(series.values[i]));
  }
  doc.polyline(points, "#1f3b73", 1.2, "class=\"series\"");
  if (contamination_index) {
    const auto &[cx, cy] = points[*contamination_index - 1];
    doc.circle(cx, cy, 4.5, "red",
               "class=\"outlier\" data-index=\"" +
                   std::to_string(*contamination_index) + "\"");
  }
  out << doc.str();
}

void render_series_svg(const Series &series,
                       std::optional<std::size_t> contamination_index,
                       const std::string &path, const std::string &title) {
  std::ostringstream rendered;
  render_series_svg(series, contamination_index, rendered, title);
  auto out = open_for_writing(path);
  out << rendered.str();
  finish_writing(out, path);
}

} // namespace prequential
