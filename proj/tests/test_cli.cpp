#include <gtest/gtest.h>

#include "cli_fixture.hpp"
#include "oracles.hpp"
#include "prequential/config.hpp"
#include "prequential/gauss_models.hpp"
#include "prequential/io_export.hpp"

namespace prequential {
namespace {

using testing::run_cli;
using testing::ScratchDir;
using testing::slurp;

bool contains(const std::string &haystack, const std::string &needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(CliSimulate, DeterministicFiles) {
  ScratchDir dir("sim");
  const std::vector<std::string> base{"simulate", "--phi", "0.5", "--var", "1",
                                      "--n",      "101",   "--seed", "7"};
  auto a = base;
  a.insert(a.end(), {"--out", dir / "a.txt"});
  auto b = base;
  b.insert(b.end(), {"--out", dir / "b.txt"});
  const auto ra = run_cli(a);
  ASSERT_EQ(ra.code, 0) << ra.err;
  ASSERT_EQ(run_cli(b).code, 0);
  EXPECT_EQ(slurp(dir / "a.txt"), slurp(dir / "b.txt"));
  EXPECT_TRUE(contains(ra.out, "stationary_variance=1.3333333333333333"));
  EXPECT_EQ(read_series_file(dir / "a.txt").size(), 101u);
}

TEST(CliSimulate, NonstationaryIsUsageError) {
  ScratchDir dir("sim_bad");
  const auto r =
      run_cli({"simulate", "--phi", "1.0", "--var", "1", "--out", dir / "x.txt"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "|phi| < 1"));
}

TEST(CliSimulate, LongIidSeriesVariance) {
  ScratchDir dir("sim_lln");
  ASSERT_EQ(run_cli({"simulate", "--phi", "0", "--var", "1", "--n", "100000",
                     "--seed", "3", "--out", dir / "s.txt"})
                .code,
            0);
  const auto series = read_series_file(dir / "s.txt");
  EXPECT_NEAR(testing::sample_stats(series.view()).variance, 1.0, 0.02);
}

TEST(CliSimulate, BadFlagsAndIo) {
  EXPECT_EQ(run_cli({"simulate", "--phi", "abc", "--out", "x"}).code, 2);
  EXPECT_EQ(run_cli({"simulate", "--bogus"}).code, 2);
  EXPECT_EQ(run_cli({"simulate", "--n", "1", "--out", "x"}).code, 2);
  EXPECT_EQ(run_cli({"simulate", "--out", "/nonexistent/dir/x.txt"}).code, 1);
  EXPECT_EQ(run_cli({}).code, 2);
}

TEST(CliScore, TwoObservationSeries) {
  ScratchDir dir("score");
  write_series_file(Series{{0.0, 1.0}}, dir / "s.txt");
  const auto r = run_cli({"score", "--series", dir / "s.txt", "--p-var", "1",
                          "--q-var", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "delta_log=0.31814718055994529"));
  EXPECT_TRUE(contains(r.out, "delta_hyv=0.5625"));
  EXPECT_TRUE(contains(r.out, "decision_log=P"));
  EXPECT_TRUE(contains(r.out, "decision_hyv=P"));
}

TEST(CliScore, IdenticalModelsTie) {
  ScratchDir dir("score_tie");
  write_series_file(Series{{0.3, -1.0, 2.0}}, dir / "s.txt");
  const auto r = run_cli({"score", "--series", dir / "s.txt", "--p-phi", "0.5",
                          "--q-phi", "0.5", "--per-step"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "delta_log=0\n"));
  EXPECT_TRUE(contains(r.out, "delta_hyv=0\n"));
  EXPECT_TRUE(contains(r.out, "decision_log=TIE"));
  EXPECT_TRUE(contains(r.out, "decision_hyv=TIE"));
  EXPECT_TRUE(contains(r.out, "index,delta_log,delta_hyv\n2,0,0\n3,0,0\n"));
}

TEST(CliScore, HugeCutoffSelectsQ) {
  ScratchDir dir("score_cut");
  write_series_file(Series{{0.3, -1.0, 2.0, 0.1}}, dir / "s.txt");
  const auto r = run_cli({"score", "--series", dir / "s.txt", "--p-phi", "0.5",
                          "--q-phi", "0.1", "--q-var", "4", "--cutoff", "1e9"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "decision_log=Q"));
  EXPECT_TRUE(contains(r.out, "decision_hyv=Q"));
}

TEST(CliScore, Errors) {
  ScratchDir dir("score_err");
  write_series_file(Series{{1.0}}, dir / "short.txt");
  EXPECT_EQ(run_cli({"score", "--series", dir / "short.txt"}).code, 2);
  EXPECT_EQ(run_cli({"score", "--series", dir / "missing.txt"}).code, 1);
  EXPECT_EQ(run_cli({"score"}).code, 2);
  write_series_file(Series{{1.0, 2.0}}, dir / "ok.txt");
  EXPECT_EQ(run_cli({"score", "--series", dir / "ok.txt", "--q-var", "-1"}).code,
            2);
}

TEST(CliExperiment, PaperDefaultsAllCorrect) {
  ScratchDir dir("exp");
  const auto r = run_cli({"experiment", "--paper-defaults", "--seed", "1",
                          "--out-dir", dir / "out"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "both_correct=100\n"));
  for (const char *f : {"results.csv", "summary.json", "scatter.svg", "config.txt"}) {
    EXPECT_TRUE(std::filesystem::exists(dir.path() / "out" / f)) << f;
  }
  EXPECT_EQ(slurp(dir.path() / "out" / "config.txt"),
            format_config_text(paper_default_config(1)));
}

TEST(CliExperiment, ContaminatedRunWritesSampleSeries) {
  ScratchDir dir("exp_c");
  const auto r = run_cli({"experiment", "--paper-defaults", "--contaminate",
                          "50:+7", "--seed", "1", "--out-dir", dir / "out"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(dir.path() / "out" / "summary.json");
  const auto doc = read_summary_json(in);
  EXPECT_GT(doc.summary.only_hyv_wrong, doc.summary.only_log_wrong);
  ASSERT_TRUE(doc.config.contamination);
  EXPECT_EQ(*doc.config.contamination, (Contamination{50, 7.0}));
  EXPECT_TRUE(std::filesystem::exists(dir.path() / "out" / "series_both_wrong.svg"));
  EXPECT_TRUE(
      std::filesystem::exists(dir.path() / "out" / "series_only_hyv_wrong.svg"));
  EXPECT_TRUE(
      std::filesystem::exists(dir.path() / "out" / "series_both_correct.svg"));
}

TEST(CliExperiment, ConfigFileWinsOverFlags) {
  ScratchDir dir("exp_cfg");
  {
    std::ofstream cfg(dir / "exp.cfg");
    cfg << "replications = 10\nseed = 5\n";
  }
  const auto r = run_cli({"experiment", "--config", dir / "exp.cfg", "--seed",
                          "99", "--out-dir", dir / "out"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.err, "warning: --seed ignored"));
  std::ifstream in(dir.path() / "out" / "summary.json");
  const auto doc = read_summary_json(in);
  EXPECT_EQ(doc.config.seed, 5u);
  EXPECT_EQ(doc.config.replications, 10u);
}

TEST(CliExperiment, UsageErrors) {
  ScratchDir dir("exp_err");
  const auto out_of_range =
      run_cli({"experiment", "--paper-defaults", "--contaminate", "200:+7",
               "--out-dir", dir / "o"});
  EXPECT_EQ(out_of_range.code, 2);
  EXPECT_TRUE(contains(out_of_range.err, "contamination.index"));
  EXPECT_EQ(run_cli({"experiment", "--paper-defaults", "--contaminate", "50:7",
                     "--out-dir", dir / "o"})
                .code,
            2);
  EXPECT_EQ(run_cli({"experiment", "--paper-defaults", "--contaminate", "fifty",
                     "--out-dir", dir / "o"})
                .code,
            2);
  EXPECT_EQ(run_cli({"experiment", "--out-dir", dir / "o"}).code, 2);

  {
    std::ofstream cfg(dir / "typo.cfg");
    cfg << "replicatons = 10\n";
  }
  const auto typo =
      run_cli({"experiment", "--config", dir / "typo.cfg", "--out-dir", dir / "o"});
  EXPECT_EQ(typo.code, 2);
  EXPECT_TRUE(contains(typo.err, "replicatons"));
  EXPECT_EQ(run_cli({"experiment", "--config", dir / "missing.cfg"}).code, 1);
}

TEST(CliExperiment, ByteIdenticalAcrossRunsAndThreads) {
  ScratchDir dir("exp_det");
  for (const auto &[name, threads] :
       std::vector<std::pair<std::string, std::string>>{
           {"a", "1"}, {"b", "1"}, {"c", "8"}}) {
    ASSERT_EQ(run_cli({"experiment", "--paper-defaults", "--contaminate",
                       "50:+7", "--seed", "1", "--threads", threads,
                       "--out-dir", dir / name})
                  .code,
              0);
  }
  for (const char *f : {"results.csv", "summary.json", "scatter.svg"}) {
    const auto a = slurp(dir.path() / "a" / f);
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, slurp(dir.path() / "b" / f)) << f;
    EXPECT_EQ(a, slurp(dir.path() / "c" / f)) << f;
  }
}

TEST(CliLinearity, Cases) {
  const auto ev = run_cli({"linearity", "--p-phi", "0.5", "--p-var", "1",
                           "--q-phi", "0.1", "--q-var", "1"});
  ASSERT_EQ(ev.code, 0);
  EXPECT_EQ(ev.out, "a=0 b=2 case=EqualVariances\n");

  const auto em = run_cli({"linearity", "--p-var", "1", "--q-var", "4"});
  EXPECT_TRUE(contains(em.out, "b=2.5 case=EqualMeans"));

  const auto same = run_cli({"linearity", "--p-phi", "0.3", "--q-phi", "0.3"});
  EXPECT_TRUE(contains(same.out, "case=Degenerate"));

  EXPECT_EQ(run_cli({"linearity", "--p-var", "0"}).code, 2);
}

TEST(CliLinearity, PaperModelsEmpirical) {
  const auto r = run_cli({"linearity", "--p-phi", "0.5", "--p-var", "1",
                          "--q-phi", "0.1", "--q-var", "4", "--empirical",
                          "--reps", "100", "--seed", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, 5), "none\n");
  const auto pos = r.out.find("empirical_residual=");
  ASSERT_NE(pos, std::string::npos);
  const double residual =
      std::stod(r.out.substr(pos + std::string("empirical_residual=").size()));
  EXPECT_GT(residual, 0.1);
}

TEST(CliPlotSeries, RendersOutlier) {
  ScratchDir dir("plot");
  write_series_file(Series{{0.0, 1.0, 8.0, 0.5}}, dir / "s.txt");
  const auto r = run_cli({"plot-series", "--series", dir / "s.txt", "--outlier",
                          "3", "--out", dir / "s.svg"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(slurp(dir / "s.svg"), "class=\"outlier\""));
  EXPECT_EQ(run_cli({"plot-series", "--series", dir / "s.txt", "--outlier", "9",
                     "--out", dir / "t.svg"})
                .code,
            2);
}

TEST(CliMisc, HelpAndVersion) {
  EXPECT_EQ(run_cli({"--help"}).code, 0);
  const auto v = run_cli({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_TRUE(contains(v.out, "1.0.0"));
}

} // namespace
} // namespace prequential
