#include "edix/rank_select.hpp"

#include <stdexcept>

#include "edix/detail/gallop.hpp"

namespace edix {

PostingListIndex::PostingListIndex(const SymbolString& s, std::size_t sigma)
    : n_(s.size()), lists_(sigma) {
  for (std::size_t pos = 0; pos < s.size(); ++pos) {
    Symbol a = s.ids[pos];
    if (a >= sigma) throw std::domain_error("symbol id out of alphabet range");
    lists_[a].push_back(static_cast<std::uint32_t>(pos));
  }
}

const std::vector<std::uint32_t>& PostingListIndex::positions(Symbol a) const {
  if (a >= lists_.size()) throw std::domain_error("symbol id out of alphabet range");
  return lists_[a];
}

PostingListIndex build_index(const SymbolString& s, std::size_t sigma) {
  return PostingListIndex(s, sigma);
}

IndexCursor::IndexCursor(const PostingListIndex& index, Counters& counters)
    : index_(&index), counters_(&counters),
      finger_(index.sigma(), detail::kColdFinger) {}

std::uint64_t IndexCursor::rank(Symbol a, std::int64_t i) {
  ++counters_->rank_ops;
  if (a >= index_->sigma()) throw std::domain_error("rank: symbol id out of alphabet range");
  if (i < -1 || i >= static_cast<std::int64_t>(index_->length()))
    throw std::out_of_range("rank: position out of range");
  if (i < 0) return 0;
  const auto& list = index_->positions(a);
  std::size_t r = detail::gallop_count_le(list, static_cast<std::uint32_t>(i),
                                          finger_[a], nullptr);
  finger_[a] = r;
  return r;
}

std::optional<std::uint32_t> IndexCursor::select(Symbol a, std::uint64_t k) {
  ++counters_->select_ops;
  if (a >= index_->sigma()) throw std::domain_error("select: symbol id out of alphabet range");
  if (k == 0) throw std::domain_error("select: occurrence count is 1-based");
  const auto& list = index_->positions(a);
  if (k > list.size()) return std::nullopt;
  finger_[a] = static_cast<std::size_t>(k);  // rank-style insertion point
  return list[k - 1];
}

ScanIndex::ScanIndex(const SymbolString& s, std::size_t sigma)
    : s_(s), sigma_(sigma) {}

std::uint64_t ScanIndex::rank(Symbol a, std::int64_t i, Counters& counters) const {
  ++counters.rank_ops;
  if (a >= sigma_) throw std::domain_error("rank: symbol id out of alphabet range");
  if (i < -1 || i >= static_cast<std::int64_t>(s_.size()))
    throw std::out_of_range("rank: position out of range");
  std::uint64_t count = 0;
  for (std::int64_t pos = 0; pos <= i; ++pos)
    if (s_.ids[static_cast<std::size_t>(pos)] == a) ++count;
  return count;
}

std::optional<std::uint32_t> ScanIndex::select(Symbol a, std::uint64_t k,
                                               Counters& counters) const {
  ++counters.select_ops;
  if (a >= sigma_) throw std::domain_error("select: symbol id out of alphabet range");
  if (k == 0) throw std::domain_error("select: occurrence count is 1-based");
  std::uint64_t seen = 0;
  for (std::size_t pos = 0; pos < s_.size(); ++pos) {
    if (s_.ids[pos] == a && ++seen == k)
      return static_cast<std::uint32_t>(pos);
  }
  return std::nullopt;
}

}  // namespace edix
