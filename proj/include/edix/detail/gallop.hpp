#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace edix::detail {

inline constexpr std::size_t kColdFinger = static_cast<std::size_t>(-1);

// Number of elements of the sorted vector v that are <= x. hint is the
// result of a previous nearby search (kColdFinger when none): a bracket is
// grown by doubling steps away from it before the final binary search, so a
// run of nearby queries costs O(lg gap) comparisons each instead of
// O(lg n). A cold hint falls back to a plain binary search over the whole
// array. Every element comparison is tallied into *comparisons when given.
template <typename T>
std::size_t gallop_count_le(const std::vector<T>& v, T x, std::size_t hint,
                            std::uint64_t* comparisons) {
  const std::size_t n = v.size();
  if (n == 0) return 0;
  auto le = [&](std::size_t idx) {
    if (comparisons) ++*comparisons;
    return v[idx] <= x;
  };

  std::size_t lo = 0, hi = n;  // answer lies in [lo, hi]
  if (hint != kColdFinger) {
    std::size_t f = hint < n ? hint : n;
    if (f < n && le(f)) {
      // v[f] <= x: grow the bracket rightward.
      lo = f + 1;
      for (std::size_t step = 1; f + step < n; step <<= 1) {
        if (le(f + step)) lo = f + step + 1;
        else { hi = f + step; break; }
      }
    } else {
      // f == n, or v[f] > x: grow the bracket leftward.
      hi = f;
      for (std::size_t step = 1;; step <<= 1) {
        if (step > f) { lo = 0; break; }
        std::size_t probe = f - step;
        if (le(probe)) { lo = probe + 1; break; }
        hi = probe;
        if (probe == 0) { lo = 0; break; }
      }
    }
  }
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (le(mid)) lo = mid + 1;
    else hi = mid;
  }
  return lo;
}

}  // namespace edix::detail
