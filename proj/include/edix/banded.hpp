#pragma once

#include <cstdint>

#include "edix/distance.hpp"
#include "edix/text_model.hpp"

namespace edix {

// Result of checking a distance promise: when verified, value is the exact
// distance (an optimal script of cost <= D never leaves the band, so the
// banded DP computes the true value whenever that value is <= D). When
// refuted, value is the banded estimate and carries no guarantee.
struct BandedOutcome {
  bool verified = false;
  Distance value;
  std::uint64_t cells_touched = 0;
};

// DP restricted to the diagonal band |i - j| <= D (for DR: 0 <= i - j <= D,
// since inserts are unavailable and every delete advances i alone);
// out-of-band cells are treated as Unreachable. Touches at most
// (2D + 1) * (min(n, m) + 1) cells. Accepts DI, DIR, DR.
BandedOutcome banded_check(const SymbolString& s, const SymbolString& t,
                           Metric metric, std::uint64_t promise);

// Doubles the promise (1, 2, 4, ...) until a check verifies, falling back to
// a band covering the whole matrix once D reaches n + m. Equal strings are
// settled by a direct scan first. The result's cells_filled counter carries
// the total cells touched across all checks, within a constant of
// (d + 1) * (min(n, m) + 1).
DistanceResult distance_by_doubling(const SymbolString& s, const SymbolString& t,
                                    Metric metric);

struct Projection {
  SymbolString source;
  SymbolString target;
  std::uint64_t base_cost = 0;  // deletions + insertions of unmatched symbols
};

// Effective-alphabet projection for the DI metric: drops source symbols the
// target never uses and vice versa. d_DI(s, t) = base_cost +
// d_DI(source', target'). Throws std::invalid_argument for other metrics,
// where the identity fails because replace can consume unmatched symbols.
Projection project_effective(const SymbolString& s, const SymbolString& t,
                             Metric metric);

}  // namespace edix
