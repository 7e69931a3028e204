#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace edix {

using Symbol = std::uint32_t;

enum class TokenizeMode { Words, Bytes };

// A text mapped to symbol ids over a joint alphabet; every id is < sigma of
// the alphabet the string was built against.
struct SymbolString {
  std::vector<Symbol> ids;
  std::size_t size() const { return ids.size(); }
  bool empty() const { return ids.empty(); }
  bool operator==(const SymbolString&) const = default;
};

// Joint alphabet of a string pair: token -> id is a bijection onto
// [0..size()), ids assigned in first-appearance order scanning the source
// tokens, then the target tokens.
struct Alphabet {
  std::vector<std::string> tokens;  // id -> token
  std::size_t size() const { return tokens.size(); }
};

struct JointEncoding {
  Alphabet alphabet;
  SymbolString source;
  SymbolString target;
};

// counts[a] = number of occurrences of symbol a.
using ParikhVector = std::vector<std::uint64_t>;

// Statistics over a Parikh-vector pair. gamma is reported raw and may be
// negative when some symbol is more frequent in the source than the target.
struct PairStats {
  std::uint64_t cross_sum = 0;  // sum over symbols of n_a * m_a
  std::int64_t gamma = 0;       // max over symbols of min(n_a, m_a - n_a)
  std::uint64_t n_prime = 0;    // source length restricted to symbols the target uses
  std::uint64_t m_prime = 0;    // target length restricted to symbols the source uses
};

class DecodingError : public std::runtime_error {
 public:
  explicit DecodingError(std::size_t offset, const std::string& context = "")
      : std::runtime_error((context.empty() ? std::string() : context + ": ") +
                           "invalid UTF-8 byte sequence at offset " +
                           std::to_string(offset)),
        byte_offset(offset) {}
  std::size_t byte_offset;
};

// Words mode: tokens are maximal runs of word characters, where ASCII
// alphanumerics and all valid non-ASCII code points are word characters and
// everything else separates; input must be valid UTF-8. Bytes mode: each
// byte is one token, no validation. truncate_bytes, when set, drops all
// input past that many bytes before tokenization (a multi-byte character cut
// by the truncation point is discarded, not an error).
std::vector<std::string> tokenize(std::string_view text, TokenizeMode mode,
                                  std::optional<std::size_t> truncate_bytes = {});

JointEncoding build_alphabet(const std::vector<std::string>& source_tokens,
                             const std::vector<std::string>& target_tokens);

ParikhVector parikh(const SymbolString& s, std::size_t sigma);

// Throws std::invalid_argument when the vectors have different dimensions.
PairStats pair_stats(const ParikhVector& source_counts,
                     const ParikhVector& target_counts);

}  // namespace edix
