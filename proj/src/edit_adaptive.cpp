#include "edix/edit_adaptive.hpp"

#include <chrono>

#include "edix/detail/dp_engine.hpp"
#include "edix/edit_classic.hpp"

namespace edix {

namespace {

std::uint64_t elapsed_ns(std::chrono::steady_clock::time_point t0) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now() - t0)
          .count());
}

std::int64_t pos64(std::uint32_t p) { return static_cast<std::int64_t>(p); }

struct AdaptiveDiPolicy {
  const SymbolString& s;
  const SymbolString& t;
  IndexCursor cur_s;
  IndexCursor cur_t;

  bool is_base(std::int64_t i, std::int64_t j) const { return j < 0 || i < 0; }
  Distance base_value(std::int64_t i, std::int64_t j) const {
    return j < 0 ? Distance(static_cast<std::uint64_t>(i + 1))
                 : Distance(static_cast<std::uint64_t>(j + 1));
  }
  std::uint8_t plan(std::int64_t i, std::int64_t j,
                    std::array<detail::Candidate, 3>& out) {
    Symbol si = s.ids[i], tj = t.ids[j];
    std::uint64_t rank_s = cur_s.rank(tj, i);
    std::uint64_t rank_t = cur_t.rank(si, j);
    if (si == tj) {
      out[0] = {i - 1, j - 1, 0};
      return 1;
    }
    if (rank_s == 0 && rank_t == 0) {
      // Neither last symbol can ever be matched: one delete plus one insert.
      out[0] = {i - 1, j - 1, 2};
      return 1;
    }
    if (rank_s == 0) {
      out[0] = {i, j - 1, 1};  // t[j] never occurs in s[0..i]: insert it
      return 1;
    }
    if (rank_t == 0) {
      out[0] = {i - 1, j, 1};  // s[i] never occurs in t[0..j]: delete it
      return 1;
    }
    std::int64_t ps = pos64(cur_s.select(tj, rank_s).value());
    std::int64_t pt = pos64(cur_t.select(si, rank_t).value());
    out[0] = {i - 1, j - 1, 2};
    out[1] = {ps - 1, j - 1, static_cast<std::uint64_t>(i - ps)};  // delete s(ps..i]
    out[2] = {i - 1, pt - 1, static_cast<std::uint64_t>(j - pt)};  // insert t(pt..j]
    return 3;
  }
};

struct AdaptiveDirPolicy {
  const SymbolString& s;
  const SymbolString& t;
  IndexCursor cur_s;
  IndexCursor cur_t;

  bool is_base(std::int64_t i, std::int64_t j) const { return j < 0 || i < 0; }
  Distance base_value(std::int64_t i, std::int64_t j) const {
    return j < 0 ? Distance(static_cast<std::uint64_t>(i + 1))
                 : Distance(static_cast<std::uint64_t>(j + 1));
  }
  std::uint8_t plan(std::int64_t i, std::int64_t j,
                    std::array<detail::Candidate, 3>& out) {
    Symbol si = s.ids[i], tj = t.ids[j];
    std::uint64_t rank_s = cur_s.rank(tj, i);
    std::uint64_t rank_t = cur_t.rank(si, j);
    if (si == tj) {
      out[0] = {i - 1, j - 1, 0};
      return 1;
    }
    if (rank_s == 0 && rank_t == 0) {
      out[0] = {i - 1, j - 1, 1};  // replace is optimal outright
      return 1;
    }
    out[0] = {i - 1, j - 1, 1};  // replace stays available
    if (rank_s == 0) {
      std::int64_t pt = pos64(cur_t.select(si, rank_t).value());
      out[1] = {i - 1, pt - 1, static_cast<std::uint64_t>(j - pt)};
      return 2;
    }
    if (rank_t == 0) {
      std::int64_t ps = pos64(cur_s.select(tj, rank_s).value());
      out[1] = {ps - 1, j - 1, static_cast<std::uint64_t>(i - ps)};
      return 2;
    }
    std::int64_t ps = pos64(cur_s.select(tj, rank_s).value());
    std::int64_t pt = pos64(cur_t.select(si, rank_t).value());
    out[1] = {ps - 1, j - 1, static_cast<std::uint64_t>(i - ps)};
    out[2] = {i - 1, pt - 1, static_cast<std::uint64_t>(j - pt)};
    return 3;
  }
};

struct AdaptiveDrPolicy {
  const SymbolString& s;
  const SymbolString& t;
  IndexCursor cur_s;  // the target index is never consulted

  bool is_base(std::int64_t i, std::int64_t j) const { return i < j || j < 0; }
  Distance base_value(std::int64_t i, std::int64_t j) const {
    if (i < j) return Distance::unreachable();
    return Distance(static_cast<std::uint64_t>(i + 1));
  }
  std::uint8_t plan(std::int64_t i, std::int64_t j,
                    std::array<detail::Candidate, 3>& out) {
    Symbol si = s.ids[i], tj = t.ids[j];
    std::uint64_t rank_s = cur_s.rank(tj, i);
    if (si == tj) {
      out[0] = {i - 1, j - 1, 0};
      return 1;
    }
    if (rank_s == 0) {
      out[0] = {i - 1, j - 1, 1};  // t[j] unmatched anywhere: replace
      return 1;
    }
    std::int64_t ps = pos64(cur_s.select(tj, rank_s).value());
    out[0] = {i - 1, j - 1, 1};
    out[1] = {ps - 1, j - 1, static_cast<std::uint64_t>(i - ps)};
    return 2;
  }
};

template <typename Policy, typename MakePolicy>
DistanceResult run_adaptive(const SymbolString& s, const SymbolString& t,
                            AdaptiveContext& ctx, MakePolicy make_policy) {
  auto t0 = std::chrono::steady_clock::now();
  ctx.counters = Counters{};
  auto n = static_cast<std::int64_t>(s.size());
  auto m = static_cast<std::int64_t>(t.size());
  MemoTable memo = MemoTable::sparse(n, m);
  Policy policy = make_policy();
  DistanceResult result;
  result.distance = detail::evaluate_dp(policy, memo, ctx.counters, n - 1, m - 1);
  ctx.counters.wall_time_ns = elapsed_ns(t0);
  result.counters = ctx.counters;
  return result;
}

}  // namespace

DistanceResult adaptive_di(const SymbolString& s, const SymbolString& t,
                           AdaptiveContext& ctx) {
  return run_adaptive<AdaptiveDiPolicy>(s, t, ctx, [&] {
    return AdaptiveDiPolicy{s, t, IndexCursor(ctx.index_s, ctx.counters),
                            IndexCursor(ctx.index_t, ctx.counters)};
  });
}

DistanceResult adaptive_dir(const SymbolString& s, const SymbolString& t,
                            AdaptiveContext& ctx) {
  return run_adaptive<AdaptiveDirPolicy>(s, t, ctx, [&] {
    return AdaptiveDirPolicy{s, t, IndexCursor(ctx.index_s, ctx.counters),
                             IndexCursor(ctx.index_t, ctx.counters)};
  });
}

DistanceResult adaptive_dr(const SymbolString& s, const SymbolString& t,
                           AdaptiveContext& ctx) {
  return run_adaptive<AdaptiveDrPolicy>(s, t, ctx, [&] {
    return AdaptiveDrPolicy{s, t, IndexCursor(ctx.index_s, ctx.counters)};
  });
}

}  // namespace edix
