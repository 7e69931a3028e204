#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edix/distance.hpp"
#include "edix/text_model.hpp"

namespace edix {

// Immutable rank/select index over a SymbolString: one sorted position list
// per symbol (0-indexed, strictly increasing). Construction touches each
// position once; the concatenation of all lists is a permutation of
// [0..length()).
class PostingListIndex {
 public:
  PostingListIndex(const SymbolString& s, std::size_t sigma);

  std::size_t length() const { return n_; }
  std::size_t sigma() const { return lists_.size(); }
  const std::vector<std::uint32_t>& positions(Symbol a) const;

 private:
  std::size_t n_;
  std::vector<std::vector<std::uint32_t>> lists_;
};

PostingListIndex build_index(const SymbolString& s, std::size_t sigma);

// Per-computation query state over one shared index: a finger per symbol
// (the spot located by that symbol's previous query) from which rank
// searches gallop, plus the counter hookup. The index itself stays
// immutable, so concurrent computations each hold their own cursor.
class IndexCursor {
 public:
  IndexCursor(const PostingListIndex& index, Counters& counters);

  // Occurrences of a in positions [0..i]; i == -1 is allowed and yields 0.
  std::uint64_t rank(Symbol a, std::int64_t i);

  // 0-indexed position of the k-th occurrence of a (k is 1-based), or
  // nullopt when fewer than k occurrences exist. Plain array access.
  std::optional<std::uint32_t> select(Symbol a, std::uint64_t k);

 private:
  const PostingListIndex* index_;
  Counters* counters_;
  std::vector<std::size_t> finger_;
};

// Scan baseline answering the same queries by walking the string; used as
// the oracle the posting lists are checked against.
class ScanIndex {
 public:
  ScanIndex(const SymbolString& s, std::size_t sigma);

  std::uint64_t rank(Symbol a, std::int64_t i, Counters& counters) const;
  std::optional<std::uint32_t> select(Symbol a, std::uint64_t k,
                                      Counters& counters) const;

 private:
  SymbolString s_;
  std::size_t sigma_;
};

}  // namespace edix
