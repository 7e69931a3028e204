#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "edix/distance.hpp"
#include "edix/edit_classic.hpp"

namespace edix::detail {

// One way to reach a smaller cell: the value of cell (i, j) contributes
// min over candidates of add + value(child).
struct Candidate {
  std::int64_t i, j;
  std::uint64_t add;
};

// Memoized top-down evaluation without call-stack recursion. A request for a
// cell value (base case, memo hit, or fresh evaluation) counts as one
// recursive call, matching the function-entry count of a plain recursive
// implementation. Policy supplies the base cases and per-cell candidate
// planning; plan() runs once per cell, before any of its children are
// requested, which is where the adaptive variants issue their index queries.
template <typename Policy>
Distance evaluate_dp(Policy& policy, MemoTable& memo, Counters& counters,
                     std::int64_t i0, std::int64_t j0) {
  struct Frame {
    std::int64_t i = 0, j = 0;
    std::array<Candidate, 3> cand{};
    std::uint8_t n_cand = 0;
    std::uint8_t next = 0;
    Distance best = Distance::unreachable();
  };

  std::vector<Frame> stack;
  Distance last = Distance::unreachable();

  auto request = [&](std::int64_t i, std::int64_t j) {
    ++counters.recursive_calls;
    if (policy.is_base(i, j)) {
      last = policy.base_value(i, j);
      return;
    }
    if (auto hit = memo.get(i, j)) {
      last = *hit;
      return;
    }
    Frame f;
    f.i = i;
    f.j = j;
    f.n_cand = policy.plan(i, j, f.cand);
    stack.push_back(f);
  };

  request(i0, j0);
  while (!stack.empty()) {
    Frame& f = stack.back();
    // Fold in the child completed by the previous iteration, if any.
    if (f.next > 0) f.best = min(f.best, last + f.cand[f.next - 1].add);
    if (f.next == f.n_cand) {
      memo.put(f.i, f.j, f.best);
      ++counters.cells_filled;
      last = f.best;
      stack.pop_back();
      continue;
    }
    Candidate c = f.cand[f.next++];  // copy: request() may grow the stack
    request(c.i, c.j);
  }
  return last;
}

}  // namespace edix::detail
