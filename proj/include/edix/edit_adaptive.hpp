#pragma once

#include <cstdint>

#include "edix/distance.hpp"
#include "edix/rank_select.hpp"
#include "edix/text_model.hpp"

namespace edix {

// State for one adaptive computation: the posting-list indices over source
// and target plus the run's counters. The indices are built once and may be
// reused across calls (each call resets the counters, fingers, and memo);
// a context is single-owner while a computation runs.
struct AdaptiveContext {
  AdaptiveContext(const SymbolString& s, const SymbolString& t, std::size_t sigma)
      : index_s(s, sigma), index_t(t, sigma) {}

  PostingListIndex index_s;
  PostingListIndex index_t;
  Counters counters;
};

// Index-driven variants of the classic recurrences: rank tells a cell when a
// symbol cannot be matched at all, select jumps straight to the nearest
// position where it can, skipping the cells in between. Values equal the
// classic counterparts exactly; the memo is sparse because only a small part
// of the matrix is ever touched.
DistanceResult adaptive_di(const SymbolString& s, const SymbolString& t,
                           AdaptiveContext& ctx);
DistanceResult adaptive_dir(const SymbolString& s, const SymbolString& t,
                            AdaptiveContext& ctx);
DistanceResult adaptive_dr(const SymbolString& s, const SymbolString& t,
                           AdaptiveContext& ctx);

}  // namespace edix
