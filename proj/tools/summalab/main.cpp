#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "summa/corpus.hpp"
#include "summa/error.hpp"
#include "summa/format.hpp"
#include "summa/labcli.hpp"

namespace {

constexpr int kUsageError = 2;
constexpr int kInternalError = 3;

struct Overrides {
  std::string config;
  std::optional<std::size_t> n;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> phi;
  std::optional<std::size_t> threads;
};

int run_experiment(const std::string& id, const Overrides& o) {
  using namespace summa::lab;
  ExperimentConfig config = load_config(o.config);
  if (!config.experiment.empty() && config.experiment != id) {
    throw ConfigError("config names experiment '" + config.experiment + "' but '" + id + "' was requested");
  }
  config.experiment = id;
  if (o.n) config.grid_size = *o.n;
  if (o.seed) config.seed = *o.seed;
  if (o.out) config.out_dir = *o.out;
  if (o.threads) config.threads = *o.threads;
  if (o.phi) {
    try {
      config.phi = summa::parse_phi_list(*o.phi);
    } catch (const summa::Error& e) {
      throw ConfigError(e.what());
    }
  }
  config = resolve(std::move(config));
  const auto result = run(config);
  emit(config, result);
  for (const auto& a : result.assertions) {
    std::cout << (a.passed ? "PASS " : "FAIL ") << a.name;
    if (!a.detail.empty()) std::cout << " (" << a.detail << ')';
    std::cout << '\n';
  }
  if (result.error) std::cerr << "error [" << result.error->code << "]: " << result.error->message << '\n';
  return exit_code(result);
}

int dump_corpus(const std::string& name, std::size_t n) {
  const summa::PeriodicGrid grid(n);
  const auto info = summa::corpus_info(name);
  if (info.dims == 1) {
    const auto f = summa::corpus_1d(name, grid);
    std::cout << "x,value\n";
    for (std::size_t j = 0; j < f.size(); ++j)
      std::cout << summa::format_double(grid.point(j)) << ',' << summa::format_double(f[j]) << '\n';
  } else {
    const auto f = summa::corpus_2d(name, grid, grid);
    std::cout << "x1,x2,value\n";
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        std::cout << summa::format_double(grid.point(a)) << ',' << summa::format_double(grid.point(b)) << ','
                  << summa::format_double(f(a, b)) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong summability experiment runner"};
  app.require_subcommand(1);

  Overrides o;
  std::string chosen;
  for (const auto& info : summa::lab::experiments()) {
    auto* sub = app.add_subcommand(info.id, info.statement);
    sub->add_option("--config", o.config, "Path of the key = value config file")->required();
    sub->add_option("--N", o.n, "Grid size (power of two)");
    sub->add_option("--seed", o.seed, "Sample-point seed");
    sub->add_option("--out", o.out, "Output directory");
    sub->add_option("--phi", o.phi, "Comma-separated growth functions, e.g. exp_linear:1");
    sub->add_option("--threads", o.threads, "Worker threads");
    sub->callback([&chosen, id = info.id] { chosen = id; });
  }
  auto* list = app.add_subcommand("list-experiments", "Print experiment ids and the statements they check");
  std::string corpus_name;
  std::size_t corpus_n = 256;
  auto* corpus = app.add_subcommand("corpus", "Dump a sampled corpus entry as CSV");
  corpus->add_option("--name", corpus_name, "Corpus entry name")->required();
  corpus->add_option("--N", corpus_n, "Grid size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (list->parsed()) {
      for (const auto& info : summa::lab::experiments()) std::cout << info.id << '\t' << info.statement << '\n';
      return 0;
    }
    if (corpus->parsed()) return dump_corpus(corpus_name, corpus_n);
    return run_experiment(chosen, o);
  } catch (const summa::lab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kUsageError;
  } catch (const summa::Error& e) {
    std::cerr << "error [" << summa::to_string(e.code()) << "]: " << e.what() << '\n';
    return e.code() == summa::ErrorCode::UnknownCorpusEntry || e.code() == summa::ErrorCode::InvalidResolution
               ? kUsageError
               : kInternalError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}
