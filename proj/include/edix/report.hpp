#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "edix/distance.hpp"
#include "edix/text_model.hpp"

namespace edix {

enum class Algorithm { Classic, Adaptive, Banded };

std::string to_string(Metric metric);
std::string to_string(Algorithm algorithm);
std::optional<Metric> parse_metric(const std::string& name);
std::optional<Algorithm> parse_algorithm(const std::string& name);

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One experiment row. distance is empty only on error rows; an unreachable
// distance serializes as "inf" in CSV and as {"unreachable": true} in JSON.
struct Report {
  std::string source;
  std::string target;
  Metric metric = Metric::DI;
  Algorithm algorithm = Algorithm::Classic;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t sigma = 0;
  std::uint64_t cross_sum = 0;
  std::int64_t gamma = 0;
  std::optional<Distance> distance;
  Counters counters;
  std::string error;  // empty when the row succeeded
};

struct RunOptions {
  TokenizeMode tokenize = TokenizeMode::Words;
  std::optional<std::size_t> truncate_bytes;  // the 32 kB preset is 32768
  std::uint64_t classic_cell_budget = 100'000'000;
};

// Full pipeline for one pair: read files, tokenize, build the joint
// alphabet, compute statistics, run the requested algorithm. Classic runs
// whose n * m exceeds the cell budget raise ResourceError instead of
// grinding through the full matrix; adaptive and banded have no such limit.
Report run_pair(const std::string& source_path, const std::string& target_path,
                Metric metric, Algorithm algorithm,
                const RunOptions& options = {});

struct Manifest {
  std::vector<std::pair<std::string, std::string>> pairs;
};

// Manifest CSV with the exact header "source_path,target_path".
Manifest parse_manifest_csv(std::istream& in);
Manifest load_manifest_csv(const std::string& path);

// One report per (pair, metric, algorithm), in manifest order, then metric
// order, then algorithm order. With keep_going, a failing row records its
// error and the run continues; otherwise the first failure propagates.
std::vector<Report> run_experiment(const Manifest& manifest,
                                   const std::vector<Metric>& metrics,
                                   const std::vector<Algorithm>& algorithms,
                                   const RunOptions& options, bool keep_going);

void write_reports_csv(std::ostream& out, const std::vector<Report>& reports);

nlohmann::json report_to_json(const Report& report);
nlohmann::json reports_to_json(const std::vector<Report>& reports);
Report report_from_json(const nlohmann::json& j);
std::vector<Report> reports_from_json(const nlohmann::json& j);

// Writes base_path + ".csv" and base_path + ".json".
void write_report_files(const std::string& base_path,
                        const std::vector<Report>& reports);

}  // namespace edix
