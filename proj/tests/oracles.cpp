#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

namespace oracles {

namespace {

std::string pack(const edix::SymbolString& s) {
  std::string key;
  key.reserve(s.size());
  for (edix::Symbol a : s.ids) key.push_back(static_cast<char>(a));
  return key;
}

}  // namespace

std::optional<std::uint64_t> script_search(const edix::SymbolString& s,
                                           const edix::SymbolString& t,
                                           edix::Metric metric,
                                           std::uint64_t max_depth,
                                           edix::Symbol sigma) {
  const bool can_insert = metric == edix::Metric::DI || metric == edix::Metric::DIR;
  const bool can_replace = metric == edix::Metric::DIR || metric == edix::Metric::DR;

  struct Item {
    std::vector<edix::Symbol> str;
    std::uint64_t depth;
  };
  std::deque<Item> queue;
  std::unordered_set<std::string> seen;
  queue.push_back({s.ids, 0});
  seen.insert(pack(s));

  auto enqueue = [&](std::vector<edix::Symbol>&& next, std::uint64_t depth) {
    // Length gap alone already needs that many deletes or inserts.
    std::uint64_t remaining = max_depth - depth;
    std::size_t lo = next.size() < t.size() ? next.size() : t.size();
    std::size_t hi = next.size() < t.size() ? t.size() : next.size();
    if (hi - lo > remaining) return;
    if (!can_insert && next.size() < t.size()) return;
    edix::SymbolString wrapped{std::move(next)};
    std::string key = pack(wrapped);
    if (seen.insert(std::move(key)).second)
      queue.push_back({std::move(wrapped.ids), depth});
  };

  while (!queue.empty()) {
    Item item = std::move(queue.front());
    queue.pop_front();
    if (item.str == t.ids) return item.depth;
    if (item.depth == max_depth) continue;
    std::uint64_t next_depth = item.depth + 1;

    for (std::size_t i = 0; i < item.str.size(); ++i) {  // delete
      std::vector<edix::Symbol> next = item.str;
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
      enqueue(std::move(next), next_depth);
    }
    if (can_insert) {
      for (std::size_t i = 0; i <= item.str.size(); ++i) {
        for (edix::Symbol a = 0; a < sigma; ++a) {
          std::vector<edix::Symbol> next = item.str;
          next.insert(next.begin() + static_cast<std::ptrdiff_t>(i), a);
          enqueue(std::move(next), next_depth);
        }
      }
    }
    if (can_replace) {
      for (std::size_t i = 0; i < item.str.size(); ++i) {
        for (edix::Symbol a = 0; a < sigma; ++a) {
          if (a == item.str[i]) continue;
          std::vector<edix::Symbol> next = item.str;
          next[i] = a;
          enqueue(std::move(next), next_depth);
        }
      }
    }
  }
  return std::nullopt;
}

std::uint64_t brute_lcss(const edix::SymbolString& a, const edix::SymbolString& b) {
  const edix::SymbolString& shorter = a.size() <= b.size() ? a : b;
  const edix::SymbolString& longer = a.size() <= b.size() ? b : a;
  const std::size_t n = shorter.size();
  std::uint64_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::uint64_t len = 0;
    std::size_t pos = 0;
    bool embeds = true;
    for (std::size_t i = 0; i < n && embeds; ++i) {
      if (!(mask >> i & 1)) continue;
      ++len;
      while (pos < longer.size() && longer.ids[pos] != shorter.ids[i]) ++pos;
      if (pos == longer.size()) embeds = false;
      else ++pos;
    }
    if (embeds) best = std::max(best, len);
  }
  return best;
}

edix::SymbolString sym(std::string_view letters) {
  edix::SymbolString s;
  s.ids.reserve(letters.size());
  for (char c : letters) s.ids.push_back(static_cast<edix::Symbol>(c - 'a'));
  return s;
}

std::size_t joint_sigma(const edix::SymbolString& s, const edix::SymbolString& t) {
  edix::Symbol max_id = 0;
  bool any = false;
  for (edix::Symbol a : s.ids) { max_id = std::max(max_id, a); any = true; }
  for (edix::Symbol a : t.ids) { max_id = std::max(max_id, a); any = true; }
  return any ? static_cast<std::size_t>(max_id) + 1 : 0;
}

edix::SymbolString random_string(std::mt19937_64& rng, std::size_t max_len,
                                 edix::Symbol sigma) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  return random_string_exact(rng, len_dist(rng), sigma);
}

edix::SymbolString random_string_exact(std::mt19937_64& rng, std::size_t len,
                                       edix::Symbol sigma) {
  std::uniform_int_distribution<edix::Symbol> sym_dist(0, sigma - 1);
  edix::SymbolString s;
  s.ids.reserve(len);
  for (std::size_t i = 0; i < len; ++i) s.ids.push_back(sym_dist(rng));
  return s;
}

}  // namespace oracles
