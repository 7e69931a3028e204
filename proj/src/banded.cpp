#include "edix/banded.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <vector>

namespace edix {

namespace {

std::uint64_t elapsed_ns(std::chrono::steady_clock::time_point t0) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now() - t0)
          .count());
}

void require_banded_metric(Metric metric) {
  if (metric != Metric::DI && metric != Metric::DIR && metric != Metric::DR)
    throw std::invalid_argument("banded computation supports DI, DIR, DR");
}

// Value of a virtual cell outside the DP rectangle (i == -1 or j == -1).
Distance border_value(Metric metric, std::int64_t i, std::int64_t j) {
  if (metric == Metric::DR) {
    if (i < j) return Distance::unreachable();
    return Distance(static_cast<std::uint64_t>(i + 1));
  }
  return j < 0 ? Distance(static_cast<std::uint64_t>(i + 1))
               : Distance(static_cast<std::uint64_t>(j + 1));
}

}  // namespace

BandedOutcome banded_check(const SymbolString& s, const SymbolString& t,
                           Metric metric, std::uint64_t promise) {
  require_banded_metric(metric);
  const auto n = static_cast<std::int64_t>(s.size());
  const auto m = static_cast<std::int64_t>(t.size());

  BandedOutcome out;
  // Band half-widths: j ranges over [i - left, i + right].
  const std::int64_t d_cap = std::min<std::uint64_t>(
      promise, static_cast<std::uint64_t>(n + m));
  const std::int64_t left = d_cap;
  const std::int64_t right = metric == Metric::DR ? 0 : d_cap;

  // The final cell must itself lie in the band, otherwise the promise is
  // hopeless without touching anything (for DI/DIR the distance is at least
  // |n - m|; for DR at least n - m, and unreachable when n < m).
  if (metric == Metric::DR) {
    if (n < m || n - m > d_cap) return out;
  } else if (n > m ? n - m > d_cap : m - n > d_cap) {
    return out;
  }

  if (n == 0 || m == 0) {
    out.value = Distance(static_cast<std::uint64_t>(n + m));
    out.verified = out.value.value() <= promise;
    return out;
  }

  const std::size_t width = static_cast<std::size_t>(left + right) + 1;
  std::vector<Distance> prev(width), cur(width);

  Distance final_value = Distance::unreachable();
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t lo = std::max<std::int64_t>(0, i - left);
    const std::int64_t hi = std::min<std::int64_t>(m - 1, i + right);
    for (std::int64_t j = lo; j <= hi; ++j) {
      ++out.cells_touched;
      // Slot c holds column j of the current row; the previous row's slots
      // are shifted one to the right for the same column.
      const std::size_t c = static_cast<std::size_t>(j - (i - left));
      Distance val;
      if (s.ids[i] == t.ids[j]) {
        val = (i == 0 || j == 0) ? border_value(metric, i - 1, j - 1) : prev[c];
      } else {
        Distance del = i == 0 ? border_value(metric, -1, j)
                      : j > (i - 1) + right ? Distance::unreachable()
                                            : prev[c + 1];
        Distance diag = (i == 0 || j == 0) ? border_value(metric, i - 1, j - 1)
                                           : prev[c];
        Distance best = del;
        if (metric != Metric::DR) {
          Distance ins = j == 0 ? border_value(metric, i, -1)
                        : j - 1 < i - left ? Distance::unreachable()
                                           : cur[c - 1];
          best = min(best, ins);
        }
        if (metric != Metric::DI) best = min(best, diag);
        val = best + 1;
      }
      cur[c] = val;
      if (i == n - 1 && j == m - 1) final_value = val;
    }
    std::swap(prev, cur);
  }

  out.value = final_value;
  out.verified = !final_value.is_unreachable() && final_value.value() <= promise;
  return out;
}

DistanceResult distance_by_doubling(const SymbolString& s, const SymbolString& t,
                                    Metric metric) {
  require_banded_metric(metric);
  auto t0 = std::chrono::steady_clock::now();
  const auto n = static_cast<std::int64_t>(s.size());
  const auto m = static_cast<std::int64_t>(t.size());

  DistanceResult result;
  if (metric == Metric::DR && n < m) {
    result.distance = Distance::unreachable();
    result.counters.wall_time_ns = elapsed_ns(t0);
    return result;
  }
  if (n == m && s.ids == t.ids) {  // D = 0, settled by the equality scan
    result.distance = Distance(0);
    result.counters.wall_time_ns = elapsed_ns(t0);
    return result;
  }

  const std::uint64_t full = static_cast<std::uint64_t>(n + m);
  std::uint64_t total_cells = 0;
  Distance value = Distance::unreachable();
  for (std::uint64_t promise = 1;; promise <<= 1) {
    if (promise >= full) {
      BandedOutcome out = banded_check(s, t, metric, full);
      total_cells += out.cells_touched;
      value = out.value;
      break;
    }
    BandedOutcome out = banded_check(s, t, metric, promise);
    total_cells += out.cells_touched;
    if (out.verified) {
      value = out.value;
      break;
    }
  }
  result.distance = value;
  result.counters.cells_filled = total_cells;
  result.counters.wall_time_ns = elapsed_ns(t0);
  return result;
}

Projection project_effective(const SymbolString& s, const SymbolString& t,
                             Metric metric) {
  if (metric != Metric::DI)
    throw std::invalid_argument(
        "effective-alphabet projection holds for the DI metric only");
  Symbol max_id = 0;
  for (Symbol a : s.ids) max_id = std::max(max_id, a);
  for (Symbol a : t.ids) max_id = std::max(max_id, a);
  const std::size_t bound = s.empty() && t.empty() ? 0 : static_cast<std::size_t>(max_id) + 1;

  std::vector<char> in_s(bound, 0), in_t(bound, 0);
  for (Symbol a : s.ids) in_s[a] = 1;
  for (Symbol a : t.ids) in_t[a] = 1;

  Projection proj;
  for (Symbol a : s.ids)
    if (in_t[a]) proj.source.ids.push_back(a);
  for (Symbol a : t.ids)
    if (in_s[a]) proj.target.ids.push_back(a);
  proj.base_cost = (s.size() - proj.source.size()) + (t.size() - proj.target.size());
  return proj;
}

}  // namespace edix
