#pragma once

#include <cassert>
#include <cstdint>
#include <limits>

namespace edix {

// Edit metrics by operator set: Delete-Insert (equivalently LCSS),
// Delete-Insert-Replace (Levenshtein), Delete-Replace, Insert-Replace
// (computed as DR with source and target exchanged), and Swap.
enum class Metric { DI, DIR, DR, IR, Swap };

// An edit count that is either finite or Unreachable (no sequence of the
// metric's operations transforms source into target, e.g. DR when the
// source is shorter, or Swap on distinct Parikh vectors). Unreachable
// absorbs addition and is maximal under min, so it can flow through the
// recurrences without sentinel arithmetic corrupting minima.
class Distance {
 public:
  constexpr Distance() : v_(kUnreachableBits) {}
  constexpr Distance(std::uint64_t value) : v_(value) {
    assert(value != kUnreachableBits);
  }

  static constexpr Distance unreachable() { return Distance(); }

  constexpr bool is_unreachable() const { return v_ == kUnreachableBits; }
  constexpr std::uint64_t value() const {
    assert(!is_unreachable());
    return v_;
  }

  friend constexpr Distance operator+(Distance d, std::uint64_t add) {
    if (d.is_unreachable()) return d;
    return Distance(d.v_ + add);
  }
  friend constexpr Distance min(Distance a, Distance b) {
    return a.v_ <= b.v_ ? a : b;
  }
  friend constexpr bool operator==(Distance a, Distance b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Distance a, Distance b) { return a.v_ != b.v_; }

 private:
  static constexpr std::uint64_t kUnreachableBits =
      std::numeric_limits<std::uint64_t>::max();
  std::uint64_t v_;
};

// Instrumentation for one distance computation. recursive_calls counts every
// cell-evaluation request, including base cases and memo hits, matching the
// function-entry count of a plain recursive implementation. comparisons is
// used by the swap metric only.
struct Counters {
  std::uint64_t recursive_calls = 0;
  std::uint64_t rank_ops = 0;
  std::uint64_t select_ops = 0;
  std::uint64_t cells_filled = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t wall_time_ns = 0;
};

struct DistanceResult {
  Distance distance;
  Counters counters;
};

}  // namespace edix
