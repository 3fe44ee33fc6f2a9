#include "prequential/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>

#include "CLI11.hpp"

#include "prequential/config.hpp"
#include "prequential/errors.hpp"
#include "prequential/experiment.hpp"
#include "prequential/io_export.hpp"
#include "prequential/linearity.hpp"
#include "prequential/numeric_text.hpp"
#include "prequential/scoring.hpp"
#include "prequential/version.hpp"

namespace prequential::cli {

namespace {

struct ModelFlags {
  double mean = 0.0;
  double phi = 0.0;
  double variance = 1.0;

  ProcessModel model() const { return {mean, phi, variance}; }
};

void add_model_flags(CLI::App &cmd, ModelFlags &flags, const std::string &prefix,
                     const std::string &name) {
  cmd.add_option("--" + prefix + "mean", flags.mean, name + " process mean")
      ->capture_default_str();
  cmd.add_option("--" + prefix + "phi", flags.phi,
                 name + " AR(1) coefficient")
      ->capture_default_str();
  cmd.add_option("--" + prefix + "var", flags.variance,
                 name + " innovation variance (> 0)")
      ->capture_default_str();
}

/// "INDEX:SHIFT", 1-based index, shift with an explicit sign ("50:+7").
Contamination parse_contamination(const std::string &text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw ConfigError("contaminate", "expected INDEX:SHIFT, got '" + text + "'");
  }
  const auto index = parse_uint(std::string_view(text).substr(0, colon));
  const auto shift_text = trim(std::string_view(text).substr(colon + 1));
  if (!index) {
    throw ConfigError("contaminate",
                      "index must be a positive integer, got '" + text + "'");
  }
  if (shift_text.empty() ||
      (shift_text.front() != '+' && shift_text.front() != '-')) {
    throw ConfigError("contaminate",
                      "shift needs an explicit sign, e.g. 50:+7, got '" + text +
                          "'");
  }
  const auto shift = parse_double(shift_text);
  if (!shift) {
    throw ConfigError("contaminate", "bad shift in '" + text + "'");
  }
  return {static_cast<std::size_t>(*index), *shift};
}

void print_summary(std::ostream &out, const ClassificationSummary &s) {
  out << "both_correct=" << s.both_correct << '\n'
      << "both_wrong=" << s.both_wrong << '\n'
      << "only_hyv_wrong=" << s.only_hyv_wrong << '\n'
      << "only_log_wrong=" << s.only_log_wrong << '\n'
      << "any_tie=" << s.any_tie << '\n';
}

void ensure_directory(const std::string &dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw IoError("cannot create output directory '" + dir + "'");
  }
}

// ---------------------------------------------------------------------------

struct SimulateArgs {
  ModelFlags model;
  std::size_t n = 101;
  std::uint64_t seed = kDefaultSeed;
  std::string out_path;
};

int cmd_simulate(const SimulateArgs &args, std::ostream &out) {
  const auto model = args.model.model();
  const auto initial = stationary_distribution(model);
  auto rng = replication_stream(args.seed, 1);
  const auto series = simulate_series(model, args.n, rng);
  write_series_file(series, args.out_path);
  out << "stationary_variance=" << format_double(initial.variance) << '\n'
      << "wrote " << series.size() << " values to " << args.out_path << '\n';
  return kExitOk;
}

struct ScoreArgs {
  std::string series_path;
  ModelFlags p;
  ModelFlags q;
  double cutoff = 0.0;
  bool per_step = false;
};

int cmd_score(const ScoreArgs &args, std::ostream &out) {
  const auto series = read_series_file(args.series_path);
  const auto path = cumulative_delta(series, args.p.model(), args.q.model());
  if (args.per_step) {
    out << "index,delta_log,delta_hyv\n";
    for (std::size_t k = 0; k < path.per_step_log.size(); ++k) {
      out << k + 2 << ',' << format_double(path.per_step_log[k]) << ','
          << format_double(path.per_step_hyv[k]) << '\n';
    }
  }
  out << "delta_log=" << format_double(path.cumulative_log) << '\n'
      << "delta_hyv=" << format_double(path.cumulative_hyv) << '\n'
      << "decision_log=" << to_string(classify(path.cumulative_log, args.cutoff))
      << '\n'
      << "decision_hyv=" << to_string(classify(path.cumulative_hyv, args.cutoff))
      << '\n';
  return kExitOk;
}

struct ExperimentArgs {
  std::string config_path;
  bool paper_defaults = false;
  std::string contaminate;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 0;
  std::string out_dir = "out";
};

/// Writes one series plot for the first replication of each outcome shown
/// in the paper-style sample figure; returns the rep ids used.
std::vector<std::size_t>
write_sample_series(const ExperimentConfig &config,
                    const std::vector<ReplicationResult> &results,
                    const std::filesystem::path &dir, std::ostream &out) {
  std::vector<std::size_t> picked;
  for (const Outcome wanted :
       {Outcome::BothWrong, Outcome::OnlyHyvWrong, Outcome::BothCorrect}) {
    const auto it =
        std::find_if(results.begin(), results.end(), [&](const auto &r) {
          return outcome_of(r, config.generator) == wanted;
        });
    if (it == results.end()) {
      continue;
    }
    const auto series = replication_series(config, it->rep_id);
    const auto file =
        dir / ("series_" + std::string(to_string(wanted)) + ".svg");
    render_series_svg(series, config.contamination->index, file.string(),
                      "replication " + std::to_string(it->rep_id) + ": " +
                          std::string(to_string(wanted)));
    out << "wrote " << file.string() << '\n';
    picked.push_back(it->rep_id);
  }
  return picked;
}

int cmd_experiment(const ExperimentArgs &args, const CLI::App &cmd,
                   std::ostream &out, std::ostream &err) {
  ExperimentConfig config;
  if (!args.config_path.empty()) {
    config = load_config_file(args.config_path);
    for (const char *flag : {"--seed", "--contaminate", "--paper-defaults"}) {
      if (cmd.count(flag) > 0) {
        err << "warning: " << flag << " ignored, --config takes precedence\n";
      }
    }
  } else if (args.paper_defaults) {
    config = paper_default_config(args.seed);
    if (!args.contaminate.empty()) {
      config.contamination = parse_contamination(args.contaminate);
    }
    config.validate();
  } else {
    throw ConfigError("config", "give --config FILE or --paper-defaults");
  }

  const auto results = run_experiment(config, args.threads);
  const auto summary = summarize(results, config.generator);

  ensure_directory(args.out_dir);
  const std::filesystem::path dir(args.out_dir);
  {
    const auto config_file = (dir / "config.txt").string();
    std::ofstream echo(config_file, std::ios::binary);
    echo << format_config_text(config);
    if (!echo) {
      throw IoError("write to '" + config_file + "' failed");
    }
  }
  write_results_csv(results, (dir / "results.csv").string());
  write_summary_json(summary, config, (dir / "summary.json").string());

  std::vector<std::size_t> highlight;
  if (config.contamination) {
    highlight = write_sample_series(config, results, dir, out);
  }
  render_scatter_svg(results, config.generator, (dir / "scatter.svg").string(),
                     highlight);

  print_summary(out, summary);
  out << "wrote " << (dir / "results.csv").string() << ", "
      << (dir / "summary.json").string() << ", "
      << (dir / "scatter.svg").string() << '\n';
  return kExitOk;
}

struct LinearityArgs {
  ModelFlags p;
  ModelFlags q;
  bool empirical = false;
  std::size_t reps = 100;
  std::size_t n = 101;
  std::uint64_t seed = kDefaultSeed;
  std::string contaminate;
};

int cmd_linearity(const LinearityArgs &args, std::ostream &out) {
  const auto model_p = args.p.model();
  const auto model_q = args.q.model();
  const auto relation = affine_relation(model_p, model_q);
  if (relation) {
    out << "a=" << format_double(relation->intercept)
        << " b=" << format_double(relation->slope)
        << " case=" << to_string(relation->case_label) << '\n';
  } else {
    out << "none\n";
  }
  if (!args.empirical) {
    return kExitOk;
  }

  ExperimentConfig config;
  config.replications = args.reps;
  config.series_length = args.n;
  config.model_p = model_p;
  config.model_q = model_q;
  config.generator = model_p.is_stationary() ? ModelId::P : ModelId::Q;
  config.seed = args.seed;
  if (!args.contaminate.empty()) {
    config.contamination = parse_contamination(args.contaminate);
  }
  const auto results = run_experiment(config);
  std::vector<DeltaPair> pairs;
  pairs.reserve(results.size());
  for (const auto &r : results) {
    pairs.emplace_back(r.cumulative_log, r.cumulative_hyv);
  }
  try {
    const auto fit = fit_affine(pairs);
    out << "empirical_residual=" << format_double(fit.max_abs_residual)
        << " fit_intercept=" << format_double(fit.intercept)
        << " fit_slope=" << format_double(fit.slope) << " reps=" << args.reps
        << '\n';
  } catch (const DegenerateInputError &e) {
    out << "empirical_residual=undefined (" << e.what() << ")\n";
  }
  return kExitOk;
}

struct PlotSeriesArgs {
  std::string series_path;
  std::size_t outlier = 0;
  std::string out_path;
  std::string title;
};

int cmd_plot_series(const PlotSeriesArgs &args, std::ostream &out) {
  const auto series = read_series_file(args.series_path);
  std::optional<std::size_t> outlier;
  if (args.outlier > 0) {
    outlier = args.outlier;
  }
  render_series_svg(series, outlier, args.out_path, args.title);
  out << "wrote " << args.out_path << '\n';
  return kExitOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Prequential comparison of two Gaussian AR(1) models under the "
               "log-score and the Hyvarinen score"};
  app.name("prequential");
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  SimulateArgs sim;
  auto *simulate = app.add_subcommand("simulate", "Simulate one AR(1) series");
  add_model_flags(*simulate, sim.model, "", "model");
  simulate->add_option("--n", sim.n, "series length (>= 2)")
      ->capture_default_str();
  simulate->add_option("--seed", sim.seed, "random seed")->capture_default_str();
  simulate->add_option("--out", sim.out_path, "output series file")->required();

  ScoreArgs score;
  auto *score_cmd = app.add_subcommand(
      "score", "Cumulative prequential delta scores S(Q) - S(P) of a series");
  score_cmd->add_option("--series", score.series_path, "series file")
      ->required();
  add_model_flags(*score_cmd, score.p, "p-", "model P");
  add_model_flags(*score_cmd, score.q, "q-", "model Q");
  score_cmd->add_option("--cutoff", score.cutoff,
                        "decision cutoff: delta > cutoff selects P")
      ->capture_default_str();
  score_cmd->add_flag("--per-step", score.per_step, "also print per-step deltas");

  ExperimentArgs exp;
  auto *experiment =
      app.add_subcommand("experiment", "Run the Monte Carlo experiment");
  experiment->add_option("--config", exp.config_path,
                         "config file (overrides the other flags)");
  experiment->add_flag("--paper-defaults", exp.paper_defaults,
                       "100 series of length 101, P=AR(0.5, 1), Q=AR(0.1, 4)");
  experiment->add_option("--contaminate", exp.contaminate,
                         "additive outlier INDEX:SHIFT, 1-based index, signed "
                         "shift (e.g. 50:+7)");
  experiment->add_option("--seed", exp.seed, "random seed")
      ->capture_default_str();
  experiment->add_option("--threads", exp.threads,
                         "worker threads, 0 = hardware concurrency")
      ->capture_default_str();
  experiment->add_option("--out-dir", exp.out_dir, "output directory")
      ->capture_default_str();

  LinearityArgs lin;
  auto *linearity = app.add_subcommand(
      "linearity", "Exact affine relation between delta Hyvarinen and delta "
                   "log scores, if any");
  add_model_flags(*linearity, lin.p, "p-", "model P");
  add_model_flags(*linearity, lin.q, "q-", "model Q");
  linearity->add_flag("--empirical", lin.empirical,
                      "also fit cumulative deltas of simulated replications");
  linearity->add_option("--reps", lin.reps, "replications for --empirical")
      ->capture_default_str();
  linearity->add_option("--n", lin.n, "series length for --empirical")
      ->capture_default_str();
  linearity->add_option("--seed", lin.seed, "random seed")
      ->capture_default_str();
  linearity->add_option("--contaminate", lin.contaminate,
                        "additive outlier INDEX:SHIFT for --empirical");

  PlotSeriesArgs plot;
  auto *plot_series =
      app.add_subcommand("plot-series", "Render a series file as SVG");
  plot_series->add_option("--series", plot.series_path, "series file")
      ->required();
  plot_series->add_option("--outlier", plot.outlier,
                          "1-based index drawn as a red marker");
  plot_series->add_option("--title", plot.title, "plot title");
  plot_series->add_option("--out", plot.out_path, "output SVG file")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success &e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (simulate->parsed()) {
      return cmd_simulate(sim, out);
    }
    if (score_cmd->parsed()) {
      return cmd_score(score, out);
    }
    if (experiment->parsed()) {
      return cmd_experiment(exp, *experiment, out, err);
    }
    if (linearity->parsed()) {
      return cmd_linearity(lin, out);
    }
    if (plot_series->parsed()) {
      return cmd_plot_series(plot, out);
    }
  } catch (const IoError &e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ValidationError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ReplicationError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}

} // namespace prequential::cli
