#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edix/edit_classic.hpp"
#include "edix/report.hpp"
#include "edix/text_model.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitResource = 3;

edix::TokenizeMode parse_tokenize(const std::string& name) {
  if (name == "words") return edix::TokenizeMode::Words;
  if (name == "bytes") return edix::TokenizeMode::Bytes;
  throw CLI::ValidationError("--tokenize", "expected words or bytes");
}

struct DistArgs {
  std::string metric = "di";
  std::string algo = "classic";
  std::string source;
  std::string target;
  std::string tokenize = "words";
  std::optional<std::size_t> truncate_bytes;
  std::string format = "json";
};

struct BenchArgs {
  std::string manifest;
  std::string out;
  bool keep_going = false;
  std::vector<std::string> metrics = {"di", "dir", "dr"};
  std::vector<std::string> algos = {"classic", "adaptive"};
  std::string tokenize = "words";
  std::optional<std::size_t> truncate_bytes;
};

int run_dist(const DistArgs& args) {
  auto metric = edix::parse_metric(args.metric);
  auto algo = edix::parse_algorithm(args.algo);
  if (!metric || !algo) {
    std::cerr << "error: unknown metric or algorithm\n";
    return kExitUsage;
  }
  edix::RunOptions options;
  options.tokenize = parse_tokenize(args.tokenize);
  options.truncate_bytes = args.truncate_bytes;
  edix::Report rep = edix::run_pair(args.source, args.target, *metric, *algo, options);
  if (args.format == "csv")
    edix::write_reports_csv(std::cout, {rep});
  else
    std::cout << edix::report_to_json(rep).dump(2) << '\n';
  return 0;
}

int run_bench(const BenchArgs& args) {
  std::vector<edix::Metric> metrics;
  for (const std::string& name : args.metrics) {
    auto metric = edix::parse_metric(name);
    if (!metric) {
      std::cerr << "error: unknown metric: " << name << '\n';
      return kExitUsage;
    }
    metrics.push_back(*metric);
  }
  std::vector<edix::Algorithm> algorithms;
  for (const std::string& name : args.algos) {
    auto algo = edix::parse_algorithm(name);
    if (!algo) {
      std::cerr << "error: unknown algorithm: " << name << '\n';
      return kExitUsage;
    }
    algorithms.push_back(*algo);
  }
  edix::RunOptions options;
  options.tokenize = parse_tokenize(args.tokenize);
  options.truncate_bytes = args.truncate_bytes;
  edix::Manifest manifest = edix::load_manifest_csv(args.manifest);
  std::vector<edix::Report> reports =
      edix::run_experiment(manifest, metrics, algorithms, options, args.keep_going);
  edix::write_report_files(args.out, reports);
  std::cout << "wrote " << reports.size() << " reports to " << args.out
            << ".csv and " << args.out << ".json\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"string edit distances (DI/LCSS, Levenshtein, DR/IR, swap) with "
               "classic, index-driven adaptive, and banded dynamic programs"};
  app.require_subcommand(1);

  DistArgs dist_args;
  CLI::App* dist = app.add_subcommand("dist", "compute one distance and print its report");
  dist->add_option("--metric", dist_args.metric, "di | dir | dr | ir | swap")->required();
  dist->add_option("--algo", dist_args.algo, "classic | adaptive | banded")->required();
  dist->add_option("--source", dist_args.source, "source text file")->required();
  dist->add_option("--target", dist_args.target, "target text file")->required();
  dist->add_option("--tokenize", dist_args.tokenize, "words | bytes (default words)");
  dist->add_option("--truncate-bytes", dist_args.truncate_bytes,
                   "only consider the first N bytes (32768 reproduces a 32 kB cap)");
  dist->add_option("--format", dist_args.format, "json | csv (default json)");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "run a manifest of pairs and emit CSV + JSON reports");
  bench->add_option("--manifest", bench_args.manifest,
                    "CSV with header source_path,target_path")->required();
  bench->add_option("--out", bench_args.out, "output base path (.csv and .json are appended)")->required();
  bench->add_flag("--keep-going", bench_args.keep_going,
                  "record per-row errors and continue instead of stopping");
  bench->add_option("--metrics", bench_args.metrics, "metrics to run (default di dir dr)")
      ->delimiter(',');
  bench->add_option("--algos", bench_args.algos, "algorithms to run (default classic adaptive)")
      ->delimiter(',');
  bench->add_option("--tokenize", bench_args.tokenize, "words | bytes (default words)");
  bench->add_option("--truncate-bytes", bench_args.truncate_bytes,
                    "only consider the first N bytes of each text");

  try {
    app.parse(argc, argv);
    if (dist->parsed()) return run_dist(dist_args);
    return run_bench(bench_args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const edix::ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const edix::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const edix::DecodingError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
}
