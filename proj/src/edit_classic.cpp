#include "edix/edit_classic.hpp"

#include <cassert>
#include <chrono>

#include "edix/detail/dp_engine.hpp"

namespace edix {

namespace {

std::uint64_t elapsed_ns(std::chrono::steady_clock::time_point t0) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now() - t0)
          .count());
}

bool fits_dense(std::int64_t n, std::int64_t m, std::uint64_t budget) {
  if (n == 0 || m == 0) return true;
  return static_cast<std::uint64_t>(n) <= budget / static_cast<std::uint64_t>(m);
}

struct ClassicDiPolicy {
  const SymbolString& s;
  const SymbolString& t;

  bool is_base(std::int64_t i, std::int64_t j) const { return j < 0 || i < 0; }
  Distance base_value(std::int64_t i, std::int64_t j) const {
    return j < 0 ? Distance(static_cast<std::uint64_t>(i + 1))
                 : Distance(static_cast<std::uint64_t>(j + 1));
  }
  std::uint8_t plan(std::int64_t i, std::int64_t j,
                    std::array<detail::Candidate, 3>& out) const {
    if (s.ids[i] == t.ids[j]) {
      out[0] = {i - 1, j - 1, 0};
      return 1;
    }
    out[0] = {i - 1, j, 1};  // delete s[i]
    out[1] = {i, j - 1, 1};  // insert t[j]
    return 2;
  }
};

struct ClassicDirPolicy {
  const SymbolString& s;
  const SymbolString& t;

  bool is_base(std::int64_t i, std::int64_t j) const { return j < 0 || i < 0; }
  Distance base_value(std::int64_t i, std::int64_t j) const {
    return j < 0 ? Distance(static_cast<std::uint64_t>(i + 1))
                 : Distance(static_cast<std::uint64_t>(j + 1));
  }
  std::uint8_t plan(std::int64_t i, std::int64_t j,
                    std::array<detail::Candidate, 3>& out) const {
    if (s.ids[i] == t.ids[j]) {
      out[0] = {i - 1, j - 1, 0};
      return 1;
    }
    out[0] = {i - 1, j, 1};      // delete
    out[1] = {i, j - 1, 1};      // insert
    out[2] = {i - 1, j - 1, 1};  // replace
    return 3;
  }
};

struct ClassicDrPolicy {
  const SymbolString& s;
  const SymbolString& t;

  // A source prefix strictly shorter than the target prefix can never reach
  // it with deletes and replaces only.
  bool is_base(std::int64_t i, std::int64_t j) const { return i < j || j < 0; }
  Distance base_value(std::int64_t i, std::int64_t j) const {
    if (i < j) return Distance::unreachable();
    return Distance(static_cast<std::uint64_t>(i + 1));
  }
  std::uint8_t plan(std::int64_t i, std::int64_t j,
                    std::array<detail::Candidate, 3>& out) const {
    if (s.ids[i] == t.ids[j]) {
      out[0] = {i - 1, j - 1, 0};
      return 1;
    }
    out[0] = {i - 1, j, 1};      // delete
    out[1] = {i - 1, j - 1, 1};  // replace
    return 2;
  }
};

template <typename Policy>
DistanceResult run_classic(const SymbolString& s, const SymbolString& t,
                           const ClassicOptions& options) {
  auto t0 = std::chrono::steady_clock::now();
  auto n = static_cast<std::int64_t>(s.size());
  auto m = static_cast<std::int64_t>(t.size());
  DistanceResult result;
  MemoTable memo(n, m, options.dense_budget);
  Policy policy{s, t};
  result.distance = detail::evaluate_dp(policy, memo, result.counters, n - 1, m - 1);
  result.counters.wall_time_ns = elapsed_ns(t0);
  return result;
}

}  // namespace

MemoTable::MemoTable(Mode mode, std::int64_t n, std::int64_t m)
    : mode_(mode), n_(n), m_(m) {
  if (mode_ == Mode::Dense)
    dense_.assign(static_cast<std::size_t>(n_ * m_), kDenseUnset);
}

MemoTable::MemoTable(std::int64_t n, std::int64_t m, std::uint64_t dense_budget)
    : MemoTable(fits_dense(n, m, dense_budget) ? Mode::Dense : Mode::Sparse, n, m) {}

MemoTable MemoTable::sparse(std::int64_t n, std::int64_t m) {
  return MemoTable(Mode::Sparse, n, m);
}

std::optional<Distance> MemoTable::get(std::int64_t i, std::int64_t j) const {
  assert(i >= 0 && i < n_ && j >= 0 && j < m_);
  if (mode_ == Mode::Dense) {
    std::uint32_t raw = dense_[static_cast<std::size_t>(i * m_ + j)];
    if (raw == kDenseUnset) return std::nullopt;
    if (raw == kDenseUnreachable) return Distance::unreachable();
    return Distance(raw);
  }
  auto it = sparse_.find(static_cast<std::uint64_t>(i) << 32 |
                         static_cast<std::uint32_t>(j));
  if (it == sparse_.end()) return std::nullopt;
  if (it->second == kSparseUnreachable) return Distance::unreachable();
  return Distance(it->second);
}

void MemoTable::put(std::int64_t i, std::int64_t j, Distance d) {
  assert(i >= 0 && i < n_ && j >= 0 && j < m_);
  assert(!get(i, j) || *get(i, j) == d);
  if (mode_ == Mode::Dense) {
    std::uint32_t raw = d.is_unreachable()
                            ? kDenseUnreachable
                            : static_cast<std::uint32_t>(d.value());
    assert(d.is_unreachable() || d.value() < kDenseUnreachable);
    dense_[static_cast<std::size_t>(i * m_ + j)] = raw;
  } else {
    std::uint64_t raw = d.is_unreachable() ? kSparseUnreachable : d.value();
    sparse_[static_cast<std::uint64_t>(i) << 32 |
            static_cast<std::uint32_t>(j)] = raw;
  }
}

DistanceResult classic_di(const SymbolString& s, const SymbolString& t,
                          const ClassicOptions& options) {
  return run_classic<ClassicDiPolicy>(s, t, options);
}

DistanceResult classic_dir(const SymbolString& s, const SymbolString& t,
                           const ClassicOptions& options) {
  return run_classic<ClassicDirPolicy>(s, t, options);
}

DistanceResult classic_dr(const SymbolString& s, const SymbolString& t,
                          const ClassicOptions& options) {
  return run_classic<ClassicDrPolicy>(s, t, options);
}

Distance full_matrix_oracle(const SymbolString& s, const SymbolString& t,
                            Metric metric, std::uint64_t dense_budget) {
  if (metric != Metric::DI && metric != Metric::DIR && metric != Metric::DR)
    throw std::invalid_argument("full_matrix_oracle supports DI, DIR, DR");
  auto n = static_cast<std::int64_t>(s.size());
  auto m = static_cast<std::int64_t>(t.size());
  if (!fits_dense(n, m, dense_budget))
    throw ResourceError("dense matrix budget exceeded (" +
                        std::to_string(n) + " x " + std::to_string(m) +
                        " cells)");

  std::vector<Distance> prev(static_cast<std::size_t>(m) + 1);
  std::vector<Distance> cur(static_cast<std::size_t>(m) + 1);
  for (std::int64_t j = 0; j <= m; ++j) {
    if (metric == Metric::DR)
      prev[j] = j == 0 ? Distance(0) : Distance::unreachable();
    else
      prev[j] = Distance(static_cast<std::uint64_t>(j));
  }
  for (std::int64_t i = 1; i <= n; ++i) {
    cur[0] = Distance(static_cast<std::uint64_t>(i));
    for (std::int64_t j = 1; j <= m; ++j) {
      if (s.ids[i - 1] == t.ids[j - 1]) {
        cur[j] = prev[j - 1];
        continue;
      }
      Distance best = prev[j] + 1;  // delete
      if (metric != Metric::DR) best = min(best, cur[j - 1] + 1);   // insert
      if (metric != Metric::DI) best = min(best, prev[j - 1] + 1);  // replace
      cur[j] = best;
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

std::uint64_t lcss_from_di(std::uint64_t n, std::uint64_t m, Distance d_di) {
  if (d_di.is_unreachable())
    throw std::logic_error("lcss_from_di: DI distance cannot be unreachable");
  std::uint64_t d = d_di.value();
  if (d > n + m || (n + m - d) % 2 != 0)
    throw std::logic_error("lcss_from_di: inconsistent distance " +
                           std::to_string(d) + " for lengths " +
                           std::to_string(n) + ", " + std::to_string(m));
  return (n + m - d) / 2;
}

}  // namespace edix
