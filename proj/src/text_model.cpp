#include "edix/text_model.hpp"

#include <unordered_map>

namespace edix {

namespace {

constexpr bool is_ascii_alnum(unsigned char b) {
  return (b >= '0' && b <= '9') || (b >= 'A' && b <= 'Z') ||
         (b >= 'a' && b <= 'z');
}

// Sequence length implied by a UTF-8 lead byte, 0 for an invalid lead.
std::size_t utf8_len(unsigned char lead) {
  if (lead >= 0xC2 && lead <= 0xDF) return 2;
  if (lead >= 0xE0 && lead <= 0xEF) return 3;
  if (lead >= 0xF0 && lead <= 0xF4) return 4;
  return 0;
}

// Checks the continuation bytes of the sequence starting at text[i] that are
// actually present. Returns false as soon as a present byte rules the
// sequence out no matter what would follow (overlongs, surrogates, and
// out-of-range code points are rejected via the constrained second byte).
bool utf8_check_present(std::string_view text, std::size_t i, std::size_t len) {
  unsigned char lead = text[i];
  unsigned char lo = 0x80, hi = 0xBF;
  if (lead == 0xE0) lo = 0xA0;
  else if (lead == 0xED) hi = 0x9F;
  else if (lead == 0xF0) lo = 0x90;
  else if (lead == 0xF4) hi = 0x8F;
  for (std::size_t k = 1; k < len && i + k < text.size(); ++k) {
    unsigned char b = text[i + k];
    unsigned char klo = (k == 1) ? lo : 0x80;
    unsigned char khi = (k == 1) ? hi : 0xBF;
    if (b < klo || b > khi) return false;
  }
  return true;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text, TokenizeMode mode,
                                  std::optional<std::size_t> truncate_bytes) {
  bool truncated = false;
  if (truncate_bytes && text.size() > *truncate_bytes) {
    text = text.substr(0, *truncate_bytes);
    truncated = true;
  }

  std::vector<std::string> tokens;
  if (mode == TokenizeMode::Bytes) {
    tokens.reserve(text.size());
    for (char c : text) tokens.emplace_back(1, c);
    return tokens;
  }

  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  };
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char b = static_cast<unsigned char>(text[i]);
    if (b < 0x80) {
      if (is_ascii_alnum(b)) cur.push_back(static_cast<char>(b));
      else flush();
      ++i;
      continue;
    }
    std::size_t len = utf8_len(b);
    if (len == 0 || !utf8_check_present(text, i, len)) throw DecodingError(i);
    if (i + len > text.size()) {
      // A sequence that is valid so far but runs past the end: when the end
      // was produced by our own truncation this is a cut character, dropped;
      // otherwise the input itself is malformed.
      if (truncated) break;
      throw DecodingError(i);
    }
    cur.append(text.substr(i, len));
    i += len;
  }
  flush();
  return tokens;
}

JointEncoding build_alphabet(const std::vector<std::string>& source_tokens,
                             const std::vector<std::string>& target_tokens) {
  JointEncoding enc;
  std::unordered_map<std::string, Symbol> id_of;
  auto encode = [&](const std::vector<std::string>& toks, SymbolString& out) {
    out.ids.reserve(toks.size());
    for (const std::string& tok : toks) {
      auto [it, inserted] = id_of.emplace(tok, static_cast<Symbol>(enc.alphabet.tokens.size()));
      if (inserted) enc.alphabet.tokens.push_back(tok);
      out.ids.push_back(it->second);
    }
  };
  encode(source_tokens, enc.source);
  encode(target_tokens, enc.target);
  return enc;
}

ParikhVector parikh(const SymbolString& s, std::size_t sigma) {
  ParikhVector counts(sigma, 0);
  for (Symbol a : s.ids) {
    if (a >= sigma) throw std::domain_error("symbol id out of alphabet range");
    ++counts[a];
  }
  return counts;
}

PairStats pair_stats(const ParikhVector& source_counts,
                     const ParikhVector& target_counts) {
  if (source_counts.size() != target_counts.size())
    throw std::invalid_argument("Parikh vectors have different dimensions");
  PairStats st;
  bool first = true;
  for (std::size_t a = 0; a < source_counts.size(); ++a) {
    std::uint64_t na = source_counts[a], ma = target_counts[a];
    st.cross_sum += na * ma;
    std::int64_t local = std::min<std::int64_t>(
        static_cast<std::int64_t>(na),
        static_cast<std::int64_t>(ma) - static_cast<std::int64_t>(na));
    if (first || local > st.gamma) st.gamma = local;
    first = false;
    if (ma > 0) st.n_prime += na;
    if (na > 0) st.m_prime += ma;
  }
  // Empty alphabet: gamma stays 0 (max over no symbols).
  return st;
}

}  // namespace edix
