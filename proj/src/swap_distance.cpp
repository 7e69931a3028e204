#include "edix/swap_distance.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "edix/detail/gallop.hpp"

namespace edix {

namespace {

std::uint64_t elapsed_ns(std::chrono::steady_clock::time_point t0) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now() - t0)
          .count());
}

std::size_t joint_sigma_bound(const SymbolString& s, const SymbolString& t) {
  Symbol max_id = 0;
  bool any = false;
  for (Symbol a : s.ids) { max_id = std::max(max_id, a); any = true; }
  for (Symbol a : t.ids) { max_id = std::max(max_id, a); any = true; }
  return any ? static_cast<std::size_t>(max_id) + 1 : 0;
}

}  // namespace

OccurrencePermutation build_permutation(const SymbolString& s,
                                        const SymbolString& t,
                                        const PostingListIndex& index_s,
                                        const PostingListIndex& index_t,
                                        Counters& counters) {
  if (s.size() != t.size())
    throw std::invalid_argument("occurrence mapping requires equal lengths");
  for (Symbol a = 0; a < index_s.sigma() || a < index_t.sigma(); ++a) {
    std::size_t cs = a < index_s.sigma() ? index_s.positions(a).size() : 0;
    std::size_t ct = a < index_t.sigma() ? index_t.positions(a).size() : 0;
    if (cs != ct)
      throw std::invalid_argument("occurrence mapping requires equal Parikh vectors");
  }

  IndexCursor cur_s(index_s, counters);
  IndexCursor cur_t(index_t, counters);
  OccurrencePermutation perm;
  perm.pi.resize(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    Symbol a = s.ids[i];
    std::uint64_t k = cur_s.rank(a, static_cast<std::int64_t>(i));
    perm.pi[i] = cur_t.select(a, k).value();
  }
  return perm;
}

std::uint64_t count_inversions_oracle(const std::vector<std::uint32_t>& pi) {
  std::uint64_t inversions = 0;
  for (std::size_t i = 0; i < pi.size(); ++i)
    for (std::size_t j = i + 1; j < pi.size(); ++j)
      if (pi[i] > pi[j]) ++inversions;
  return inversions;
}

std::uint64_t count_inversions_adaptive(const std::vector<std::uint32_t>& pi,
                                        Counters& counters) {
  std::vector<std::uint32_t> sorted;
  sorted.reserve(pi.size());
  std::size_t finger = detail::kColdFinger;
  std::uint64_t inversions = 0;
  for (std::uint32_t x : pi) {
    std::size_t p =
        detail::gallop_count_le(sorted, x, finger, &counters.comparisons);
    inversions += sorted.size() - p;  // elements already placed that exceed x
    sorted.insert(sorted.begin() + static_cast<std::ptrdiff_t>(p), x);
    finger = p;
  }
  return inversions;
}

DistanceResult swap_dist(const SymbolString& s, const SymbolString& t) {
  auto t0 = std::chrono::steady_clock::now();
  DistanceResult result;
  const std::size_t sigma = joint_sigma_bound(s, t);
  if (s.size() != t.size() || parikh(s, sigma) != parikh(t, sigma)) {
    result.distance = Distance::unreachable();
    result.counters.wall_time_ns = elapsed_ns(t0);
    return result;
  }
  PostingListIndex index_s(s, sigma), index_t(t, sigma);
  OccurrencePermutation perm =
      build_permutation(s, t, index_s, index_t, result.counters);
  result.distance = Distance(count_inversions_adaptive(perm.pi, result.counters));
  result.counters.wall_time_ns = elapsed_ns(t0);
  return result;
}

}  // namespace edix
