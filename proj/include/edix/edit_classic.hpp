#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "edix/distance.hpp"
#include "edix/text_model.hpp"

namespace edix {

// Cell budget above which classic computations switch from a dense matrix to
// a sparse map, and above which the dense oracle refuses to run.
inline constexpr std::uint64_t kDefaultDenseBudget = 100'000'000;

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Memo for cells (i, j) with i in [0..n) and j in [0..m). Dense mode packs
// values into 32 bits (safe: a finite distance is at most n + m, and dense
// mode is only chosen when n * m fits the budget); sparse mode hashes the
// coordinates. An entry, once written, is never rewritten with a different
// value.
class MemoTable {
 public:
  enum class Mode { Dense, Sparse };

  MemoTable(std::int64_t n, std::int64_t m, std::uint64_t dense_budget);
  static MemoTable sparse(std::int64_t n, std::int64_t m);

  std::optional<Distance> get(std::int64_t i, std::int64_t j) const;
  void put(std::int64_t i, std::int64_t j, Distance d);
  Mode mode() const { return mode_; }

 private:
  MemoTable(Mode mode, std::int64_t n, std::int64_t m);

  static constexpr std::uint32_t kDenseUnset = 0xFFFFFFFFu;
  static constexpr std::uint32_t kDenseUnreachable = 0xFFFFFFFEu;
  static constexpr std::uint64_t kSparseUnreachable = ~std::uint64_t{0};

  Mode mode_;
  std::int64_t n_, m_;
  std::vector<std::uint32_t> dense_;
  std::unordered_map<std::uint64_t, std::uint64_t> sparse_;
};

struct ClassicOptions {
  std::uint64_t dense_budget = kDefaultDenseBudget;
};

// Classic memoized dynamic programs. The recursion is driven by an explicit
// work stack (depth reaches n + m on long inputs) but counts one recursive
// call per cell-evaluation request, exactly as a call-stack implementation
// would.
DistanceResult classic_di(const SymbolString& s, const SymbolString& t,
                          const ClassicOptions& options = {});
DistanceResult classic_dir(const SymbolString& s, const SymbolString& t,
                           const ClassicOptions& options = {});
// Delete-Replace from s to t; Unreachable when |s| < |t|. Insert-Replace
// from s to t is classic_dr(t, s).
DistanceResult classic_dr(const SymbolString& s, const SymbolString& t,
                          const ClassicOptions& options = {});

// Bottom-up dense DP, ground truth for everything else; never consults
// rank/select and shares no code with the memoized engine. Throws
// ResourceError when n * m exceeds the budget. Accepts DI, DIR, DR.
Distance full_matrix_oracle(const SymbolString& s, const SymbolString& t,
                            Metric metric,
                            std::uint64_t dense_budget = kDefaultDenseBudget);

// LCSS length from the DI distance: (n + m - d) / 2. Throws std::logic_error
// when d is unreachable, exceeds n + m, or has the wrong parity.
std::uint64_t lcss_from_di(std::uint64_t n, std::uint64_t m, Distance d_di);

}  // namespace edix
