#include "edix/report.hpp"

#include <fstream>
#include <sstream>

#include "edix/banded.hpp"
#include "edix/edit_adaptive.hpp"
#include "edix/edit_classic.hpp"
#include "edix/swap_distance.hpp"

namespace edix {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read file: " + path);
  return std::move(buf).str();
}

// Swap metric with the quadratic inversion counter instead of the adaptive
// one; the screen and the occurrence mapping are shared.
DistanceResult swap_dist_classic(const SymbolString& s, const SymbolString& t) {
  DistanceResult result;
  Symbol max_id = 0;
  for (Symbol a : s.ids) max_id = std::max(max_id, a);
  for (Symbol a : t.ids) max_id = std::max(max_id, a);
  std::size_t sigma = (s.empty() && t.empty()) ? 0 : std::size_t{max_id} + 1;
  if (s.size() != t.size() || parikh(s, sigma) != parikh(t, sigma)) {
    result.distance = Distance::unreachable();
    return result;
  }
  PostingListIndex index_s(s, sigma), index_t(t, sigma);
  OccurrencePermutation perm =
      build_permutation(s, t, index_s, index_t, result.counters);
  result.distance = Distance(count_inversions_oracle(perm.pi));
  std::uint64_t n = perm.pi.size();
  result.counters.comparisons = n < 2 ? 0 : n * (n - 1) / 2;
  return result;
}

std::string distance_to_csv(const std::optional<Distance>& d) {
  if (!d) return "";
  if (d->is_unreachable()) return "inf";
  return std::to_string(d->value());
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

// Splits one CSV record, honoring double-quoted fields.
std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') { cur += '"'; ++i; }
        else quoted = false;
      } else cur += c;
    } else if (c == '"' && cur.empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

}  // namespace

std::string to_string(Metric metric) {
  switch (metric) {
    case Metric::DI: return "di";
    case Metric::DIR: return "dir";
    case Metric::DR: return "dr";
    case Metric::IR: return "ir";
    case Metric::Swap: return "swap";
  }
  return "?";
}

std::string to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Classic: return "classic";
    case Algorithm::Adaptive: return "adaptive";
    case Algorithm::Banded: return "banded";
  }
  return "?";
}

std::optional<Metric> parse_metric(const std::string& name) {
  if (name == "di") return Metric::DI;
  if (name == "dir") return Metric::DIR;
  if (name == "dr") return Metric::DR;
  if (name == "ir") return Metric::IR;
  if (name == "swap") return Metric::Swap;
  return std::nullopt;
}

std::optional<Algorithm> parse_algorithm(const std::string& name) {
  if (name == "classic") return Algorithm::Classic;
  if (name == "adaptive") return Algorithm::Adaptive;
  if (name == "banded") return Algorithm::Banded;
  return std::nullopt;
}

Report run_pair(const std::string& source_path, const std::string& target_path,
                Metric metric, Algorithm algorithm, const RunOptions& options) {
  Report rep;
  rep.source = source_path;
  rep.target = target_path;
  rep.metric = metric;
  rep.algorithm = algorithm;

  std::string source_text = read_file(source_path);
  std::string target_text = read_file(target_path);
  std::vector<std::string> source_tokens, target_tokens;
  try {
    source_tokens = tokenize(source_text, options.tokenize, options.truncate_bytes);
  } catch (const DecodingError& e) {
    throw DecodingError(e.byte_offset, source_path);
  }
  try {
    target_tokens = tokenize(target_text, options.tokenize, options.truncate_bytes);
  } catch (const DecodingError& e) {
    throw DecodingError(e.byte_offset, target_path);
  }

  JointEncoding enc = build_alphabet(source_tokens, target_tokens);
  rep.n = enc.source.size();
  rep.m = enc.target.size();
  rep.sigma = enc.alphabet.size();
  PairStats stats = pair_stats(parikh(enc.source, rep.sigma),
                               parikh(enc.target, rep.sigma));
  rep.cross_sum = stats.cross_sum;
  rep.gamma = stats.gamma;

  DistanceResult dr;
  if (metric == Metric::Swap) {
    switch (algorithm) {
      case Algorithm::Classic:
        dr = swap_dist_classic(enc.source, enc.target);
        break;
      case Algorithm::Adaptive:
        dr = swap_dist(enc.source, enc.target);
        break;
      case Algorithm::Banded:
        throw std::invalid_argument("the swap metric has no banded algorithm");
    }
  } else {
    // IR from source to target is DR on the exchanged pair.
    const SymbolString& s = metric == Metric::IR ? enc.target : enc.source;
    const SymbolString& t = metric == Metric::IR ? enc.source : enc.target;
    Metric dp_metric = metric == Metric::IR ? Metric::DR : metric;
    switch (algorithm) {
      case Algorithm::Classic: {
        std::uint64_t cells = s.size() * t.size();
        if (s.size() != 0 && cells / s.size() != t.size())
          cells = options.classic_cell_budget + 1;  // overflowed: certainly over
        if (cells > options.classic_cell_budget)
          throw ResourceError(
              "classic computation needs " + std::to_string(s.size()) + " x " +
              std::to_string(t.size()) +
              " cells, over the budget; use the adaptive or banded algorithm");
        ClassicOptions copt;
        copt.dense_budget = options.classic_cell_budget;
        if (dp_metric == Metric::DI) dr = classic_di(s, t, copt);
        else if (dp_metric == Metric::DIR) dr = classic_dir(s, t, copt);
        else dr = classic_dr(s, t, copt);
        break;
      }
      case Algorithm::Adaptive: {
        AdaptiveContext ctx(s, t, rep.sigma);
        if (dp_metric == Metric::DI) dr = adaptive_di(s, t, ctx);
        else if (dp_metric == Metric::DIR) dr = adaptive_dir(s, t, ctx);
        else dr = adaptive_dr(s, t, ctx);
        break;
      }
      case Algorithm::Banded:
        dr = distance_by_doubling(s, t, dp_metric);
        break;
    }
  }
  rep.distance = dr.distance;
  rep.counters = dr.counters;
  return rep;
}

Manifest parse_manifest_csv(std::istream& in) {
  Manifest manifest;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line != "source_path,target_path")
        throw IoError("manifest must start with header "
                      "\"source_path,target_path\", got: " + line);
      continue;
    }
    auto fields = csv_split(line);
    if (fields.size() != 2)
      throw IoError("manifest row needs exactly two fields: " + line);
    manifest.pairs.emplace_back(fields[0], fields[1]);
  }
  if (first) throw IoError("manifest is empty (missing header)");
  return manifest;
}

Manifest load_manifest_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest: " + path);
  return parse_manifest_csv(in);
}

std::vector<Report> run_experiment(const Manifest& manifest,
                                   const std::vector<Metric>& metrics,
                                   const std::vector<Algorithm>& algorithms,
                                   const RunOptions& options, bool keep_going) {
  std::vector<Report> reports;
  for (const auto& [source, target] : manifest.pairs) {
    for (Metric metric : metrics) {
      for (Algorithm algorithm : algorithms) {
        try {
          reports.push_back(run_pair(source, target, metric, algorithm, options));
        } catch (const std::exception& e) {
          if (!keep_going) throw;
          Report rep;
          rep.source = source;
          rep.target = target;
          rep.metric = metric;
          rep.algorithm = algorithm;
          rep.error = e.what();
          reports.push_back(std::move(rep));
        }
      }
    }
  }
  return reports;
}

void write_reports_csv(std::ostream& out, const std::vector<Report>& reports) {
  out << "source,target,metric,algorithm,n,m,sigma,cross_sum,gamma,distance,"
         "recursive_calls,rank_ops,select_ops,cells_filled,comparisons,"
         "wall_time_ns,error\n";
  for (const Report& r : reports) {
    out << csv_escape(r.source) << ',' << csv_escape(r.target) << ','
        << to_string(r.metric) << ',' << to_string(r.algorithm) << ','
        << r.n << ',' << r.m << ',' << r.sigma << ',' << r.cross_sum << ','
        << r.gamma << ',' << distance_to_csv(r.distance) << ','
        << r.counters.recursive_calls << ',' << r.counters.rank_ops << ','
        << r.counters.select_ops << ',' << r.counters.cells_filled << ','
        << r.counters.comparisons << ',' << r.counters.wall_time_ns << ','
        << csv_escape(r.error) << '\n';
  }
}

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json j;
  j["source"] = r.source;
  j["target"] = r.target;
  j["metric"] = to_string(r.metric);
  j["algorithm"] = to_string(r.algorithm);
  j["n"] = r.n;
  j["m"] = r.m;
  j["sigma"] = r.sigma;
  j["cross_sum"] = r.cross_sum;
  j["gamma"] = r.gamma;
  if (!r.distance) j["distance"] = nullptr;
  else if (r.distance->is_unreachable()) j["distance"] = {{"unreachable", true}};
  else j["distance"] = r.distance->value();
  j["counters"] = {{"recursive_calls", r.counters.recursive_calls},
                   {"rank_ops", r.counters.rank_ops},
                   {"select_ops", r.counters.select_ops},
                   {"cells_filled", r.counters.cells_filled},
                   {"comparisons", r.counters.comparisons},
                   {"wall_time_ns", r.counters.wall_time_ns}};
  j["error"] = r.error;
  return j;
}

nlohmann::json reports_to_json(const std::vector<Report>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Report& r : reports) arr.push_back(report_to_json(r));
  return arr;
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.source = j.at("source").get<std::string>();
  r.target = j.at("target").get<std::string>();
  r.metric = parse_metric(j.at("metric").get<std::string>()).value();
  r.algorithm = parse_algorithm(j.at("algorithm").get<std::string>()).value();
  r.n = j.at("n").get<std::uint64_t>();
  r.m = j.at("m").get<std::uint64_t>();
  r.sigma = j.at("sigma").get<std::uint64_t>();
  r.cross_sum = j.at("cross_sum").get<std::uint64_t>();
  r.gamma = j.at("gamma").get<std::int64_t>();
  const auto& d = j.at("distance");
  if (d.is_null()) r.distance = std::nullopt;
  else if (d.is_object()) r.distance = Distance::unreachable();
  else r.distance = Distance(d.get<std::uint64_t>());
  const auto& c = j.at("counters");
  r.counters.recursive_calls = c.at("recursive_calls").get<std::uint64_t>();
  r.counters.rank_ops = c.at("rank_ops").get<std::uint64_t>();
  r.counters.select_ops = c.at("select_ops").get<std::uint64_t>();
  r.counters.cells_filled = c.at("cells_filled").get<std::uint64_t>();
  r.counters.comparisons = c.at("comparisons").get<std::uint64_t>();
  r.counters.wall_time_ns = c.at("wall_time_ns").get<std::uint64_t>();
  r.error = j.at("error").get<std::string>();
  return r;
}

std::vector<Report> reports_from_json(const nlohmann::json& j) {
  std::vector<Report> reports;
  for (const auto& item : j) reports.push_back(report_from_json(item));
  return reports;
}

void write_report_files(const std::string& base_path,
                        const std::vector<Report>& reports) {
  {
    std::ofstream csv(base_path + ".csv");
    if (!csv) throw IoError("cannot write " + base_path + ".csv");
    write_reports_csv(csv, reports);
  }
  {
    std::ofstream js(base_path + ".json");
    if (!js) throw IoError("cannot write " + base_path + ".json");
    js << reports_to_json(reports).dump(2) << '\n';
  }
}

}  // namespace edix
