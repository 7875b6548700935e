#include "summa/labcli.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "summa/parallel.hpp"
#include "support.hpp"

namespace summa::lab {
namespace {

namespace fs = std::filesystem;

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("summa_labcli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ExperimentConfig config_for(const std::string& text) { return resolve(parse_config(text)); }

const Assertion* find_assertion(const RunResult& r, const std::string& fragment) {
  for (const auto& a : r.assertions)
    if (a.name.find(fragment) != std::string::npos) return &a;
  return nullptr;
}

TEST(Config, ParsesScalarsListsAndComments) {
  const auto c = parse_config(
      "# header\n"
      "experiment = converge-theorem\n"
      "corpus = product-log-singular   # trailing comment\n"
      "corpus = box(-0.5,0.5)*log-singular\n"
      "N = 64\n"
      "seed = 7\n"
      "placement = lattice\n"
      "p = 2\n"
      "p = 4\n"
      "n = 8\n"
      "phi = exp_power:1,0.5\n"
      "phi = exp_linear:1\n"
      "lambda = 1.5\n"
      "\n");
  EXPECT_EQ(c.experiment, "converge-theorem");
  ASSERT_EQ(c.corpus.size(), 2u);
  EXPECT_EQ(c.corpus[1], "box(-0.5,0.5)*log-singular");
  EXPECT_EQ(c.grid_size, 64u);
  EXPECT_EQ(c.seed, 7u);
  EXPECT_EQ(c.placement, Placement::Lattice);
  EXPECT_EQ(c.p_grid, (std::vector<double>{2, 4}));
  EXPECT_EQ(c.scales, (std::vector<int>{8}));
  ASSERT_EQ(c.phi.size(), 2u);
  EXPECT_EQ(c.phi[0].name(), "exp_power:1,0.5");
  EXPECT_EQ(c.lambdas, (std::vector<double>{1.5}));
}

TEST(Config, RejectsMalformedInput) {
  EXPECT_THROW(parse_config("N = 64\nN = 128\n"), ConfigError);
  EXPECT_THROW(parse_config("colour = blue\n"), ConfigError);
  EXPECT_THROW(parse_config("N = sixty\n"), ConfigError);
  EXPECT_THROW(parse_config("N 64\n"), ConfigError);
  EXPECT_THROW(parse_config("seed =\n"), ConfigError);
  EXPECT_THROW(parse_config("placement = spiral\n"), ConfigError);
  EXPECT_THROW(parse_config("phi = cosh:1\n"), ConfigError);
}

TEST(Config, ResolveFillsDefaultsAndValidates) {
  const auto c = config_for("experiment = verify-weak-half\n");
  EXPECT_EQ(c.grid_size, 256u);
  EXPECT_EQ(config_for("experiment = converge-theorem\n").grid_size, 128u);
  EXPECT_THROW(config_for("experiment = verify-everything\n"), ConfigError);
  EXPECT_THROW(config_for("experiment = converge-theorem\nN = 100\n"), ConfigError);
  EXPECT_THROW(config_for("experiment = converge-theorem\ncorpus = zigzag\n"), ConfigError);
  EXPECT_THROW(config_for("experiment = converge-theorem\nn = 65\n"), ConfigError);
  EXPECT_THROW(config_for("experiment = converge-theorem\np = 1\n"), ConfigError);
  EXPECT_THROW(config_for("experiment = verify-czd\nlambda = -1\n"), ConfigError);
}

TEST(Experiments, EveryIdListedOnceWithAStatement) {
  const auto& all = experiments();
  EXPECT_EQ(all.size(), 12u);
  for (const auto& info : all) {
    EXPECT_FALSE(info.statement.empty()) << info.id;
    EXPECT_EQ(find_experiment(info.id), &info);
  }
  EXPECT_EQ(find_experiment("nope"), nullptr);
}

TEST(Emit, EmptyReportIsHeaderOnly) {
  EXPECT_EQ(report_csv(MeanReport{}), "point_id,x1,x2,n,m,p_or_phi,value\n");
}

TEST(Emit, OneRecordIsOneRowInDeclaredOrder) {
  MeanReport report;
  report.records.push_back({3, -0.5, 0.25, 8, 16, "exp_linear:1", 0.125});
  EXPECT_EQ(report_csv(report),
            "point_id,x1,x2,n,m,p_or_phi,value\n"
            "3,-0.5,0.25,8,16,exp_linear:1,0.125\n");
}

TEST(Emit, LabelsWithCommasAreQuoted) {
  MeanReport report;
  report.records.push_back({0, 0, 0, 1, 1, "exp_power:1,0.5", 2});
  EXPECT_NE(report_csv(report).find("\"exp_power:1,0.5\""), std::string::npos);
}

TEST(Emit, SummaryKeysSortedAndFreeOfTiming) {
  const auto c = config_for("experiment = verify-uv\n");
  const auto r = run(c);
  const auto text = summary_json(c, r);
  EXPECT_EQ(text.find("seconds"), std::string::npos);
  EXPECT_EQ(text.find("threads"), std::string::npos);
  const auto j = nlohmann::json::parse(text);
  std::string prev;
  for (const auto& [key, value] : j.items()) {
    EXPECT_LT(prev, key);
    prev = key;
  }
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_TRUE(j["error"].is_null());
}

TEST(Emit, UnwritableDirectoryIsAnIoError) {
  auto c = config_for("experiment = verify-uv\n");
  const auto dir = scratch_dir("blocked");
  std::ofstream(dir / "file") << "x";
  c.out_dir = (dir / "file" / "sub").string();
  EXPECT_SUMMA_ERROR(emit(c, RunResult{}), ErrorCode::Io);
}

TEST(Run, ConstantCorpusGivesZeroMeansAndPasses) {
  const auto c = config_for("experiment = converge-theorem\ncorpus = constant(3)\nN = 64\n");
  const auto r = run(c);
  ASSERT_FALSE(r.error);
  EXPECT_TRUE(r.passed());
  ASSERT_FALSE(r.report.records.empty());
  for (const auto& rec : r.report.records) EXPECT_EQ(rec.value, 0.0);
  EXPECT_EQ(exit_code(r), 0);
}

TEST(Run, CzdOnBoxAtThreeLevelsPasses) {
  const auto c = config_for("experiment = verify-czd\ncorpus = box(-0.5,0.5)\n");
  const auto r = run(c);
  ASSERT_FALSE(r.error);
  EXPECT_EQ(r.constants.at("pairs"), 3.0);
  for (const auto& a : r.assertions) EXPECT_TRUE(a.passed) << a.name << ": " << a.detail;
}

TEST(Run, WeakHalfOnL1OnlyIsMonotoneWithBoundedSlope) {
  const auto c = config_for("experiment = verify-weak-half\ncorpus = l1-only\n");
  const auto r = run(c);
  ASSERT_FALSE(r.error);
  const auto* monotone = find_assertion(r, "non-increasing");
  const auto* slope = find_assertion(r, "slope");
  ASSERT_TRUE(monotone && slope);
  EXPECT_TRUE(monotone->passed);
  EXPECT_TRUE(slope->passed) << slope->detail;
}

TEST(Run, ModuleErrorsBecomeErrorRecords) {
  const auto c = config_for("experiment = verify-czd\ncorpus = constant(3)\nlambda = 1\n");
  const auto r = run(c);
  ASSERT_TRUE(r.error);
  EXPECT_EQ(r.error->code, "level-too-low");
  EXPECT_EQ(exit_code(r), 3);
  EXPECT_NE(summary_json(c, r).find("level-too-low"), std::string::npos);
}

TEST(Run, RerunAndThreadCountGiveIdenticalBytes) {
  const auto base = config_for("experiment = converge-theorem\nN = 64\npoints = 16\n");
  const auto first = run(base);
  const auto again = run(base);
  auto threaded = base;
  threaded.threads = 4;
  const auto parallel = run(threaded);
  EXPECT_EQ(report_csv(first.report), report_csv(again.report));
  EXPECT_EQ(report_csv(first.report), report_csv(parallel.report));
  EXPECT_EQ(summary_json(base, first), summary_json(base, again));
  EXPECT_EQ(summary_json(base, first), summary_json(threaded, parallel));
  EXPECT_EQ(thread_count(), 1u);
}

TEST(Run, EmitWritesThreeFiles) {
  auto c = config_for("experiment = verify-uv\n");
  c.out_dir = scratch_dir("emit").string();
  const auto r = run(c);
  emit(c, r);
  for (const char* f : {"report.csv", "summary.json", "timing.json"}) EXPECT_TRUE(fs::exists(fs::path(c.out_dir) / f));
  EXPECT_EQ(slurp(fs::path(c.out_dir) / "report.csv"), report_csv(r.report));
}

#ifdef SUMMALAB_PATH
int invoke(const std::string& args, const fs::path& log) {
  const std::string cmd = std::string(SUMMALAB_PATH) + " " + args + " > " + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Cli, ExitCodes) {
  const auto dir = scratch_dir("cli");
  const auto log = dir / "log.txt";
  std::ofstream(dir / "ok.cfg") << "corpus = constant(3)\nN = 64\n";
  std::ofstream(dir / "bad.cfg") << "colour = blue\n";
  std::ofstream(dir / "fail.cfg") << "corpus = log-singular\ntolerance = 1e-9\n";
  std::ofstream(dir / "err.cfg") << "corpus = constant(3)\nlambda = 1\n";

  EXPECT_EQ(invoke("converge-theorem --config " + (dir / "ok.cfg").string() + " --out " + (dir / "ok").string(), log), 0);
  EXPECT_TRUE(fs::exists(dir / "ok" / "summary.json"));
  EXPECT_EQ(invoke("converge-theorem --config " + (dir / "bad.cfg").string(), log), 2);
  EXPECT_EQ(invoke("converge-theorem", log), 2);
  EXPECT_EQ(invoke("no-such-experiment --config x", log), 2);
  EXPECT_EQ(invoke("verify-rodin-llogl --config " + (dir / "fail.cfg").string() + " --out " + (dir / "fail").string(), log), 1);
  EXPECT_EQ(invoke("verify-czd --config " + (dir / "err.cfg").string() + " --out " + (dir / "err").string(), log), 3);
  EXPECT_NE(slurp(dir / "err" / "summary.json").find("level-too-low"), std::string::npos);
}

TEST(Cli, ListExperimentsAndCorpusDump) {
  const auto dir = scratch_dir("cli_list");
  const auto log = dir / "log.txt";
  ASSERT_EQ(invoke("list-experiments", log), 0);
  const auto listing = slurp(log);
  for (const auto& info : experiments()) EXPECT_NE(listing.find(info.id + "\t"), std::string::npos);

  ASSERT_EQ(invoke("corpus --name log-singular --N 16", log), 0);
  const auto csv = slurp(log);
  EXPECT_EQ(csv.rfind("x,value\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 17);
  EXPECT_EQ(invoke("corpus --name zigzag --N 16", log), 2);
}
#endif

}  // namespace
}  // namespace summa::lab
