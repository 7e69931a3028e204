#pragma once

#include <cstdint>
#include <vector>

#include "edix/distance.hpp"
#include "edix/rank_select.hpp"
#include "edix/text_model.hpp"

namespace edix {

// pi[i] is the position in the target matched to position i of the source:
// the k-th occurrence of each symbol maps to the k-th occurrence of the same
// symbol, which is the matching an optimal swap sequence induces. pi is a
// permutation and target[pi[i]] == source[i].
struct OccurrencePermutation {
  std::vector<std::uint32_t> pi;
};

// Builds the occurrence mapping with exactly one rank (over the source) and
// one select (over the target) per position: 2n index operations in total.
// Throws std::invalid_argument on length or Parikh mismatch (degenerate
// instance; the swap distance is infinite there).
OccurrencePermutation build_permutation(const SymbolString& s,
                                        const SymbolString& t,
                                        const PostingListIndex& index_s,
                                        const PostingListIndex& index_t,
                                        Counters& counters);

// Quadratic pair scan: |{(i, j) : i < j and pi[i] > pi[j]}|.
std::uint64_t count_inversions_oracle(const std::vector<std::uint32_t>& pi);

// Left-to-right insertion into an order-statistics list entered from a
// finger at the previous insertion point; each step adds the number of
// already-inserted elements greater than pi[i]. Element comparisons are
// tallied into counters.comparisons (O(n) total on sorted input).
std::uint64_t count_inversions_adaptive(const std::vector<std::uint32_t>& pi,
                                        Counters& counters);

// Swap edit distance: Unreachable on length or Parikh mismatch (screened in
// O(n + m + sigma) before any index is built), otherwise the inversion count
// of the occurrence mapping.
DistanceResult swap_dist(const SymbolString& s, const SymbolString& t);

}  // namespace edix
