#include <doctest.h>

#include <random>

#include "edix/text_model.hpp"
#include "oracles.hpp"

using namespace edix;

TEST_CASE("words mode splits on everything but alphanumerics") {
  auto toks = tokenize("to be, or not", TokenizeMode::Words);
  CHECK(toks == std::vector<std::string>{"to", "be", "or", "not"});
  CHECK(tokenize("", TokenizeMode::Words).empty());
  CHECK(tokenize("  ,;\n\t", TokenizeMode::Words).empty());
  CHECK(tokenize("a1b2", TokenizeMode::Words) == std::vector<std::string>{"a1b2"});
}

TEST_CASE("truncation applies before tokenization") {
  auto toks = tokenize("ab a", TokenizeMode::Words, 2);
  CHECK(toks == std::vector<std::string>{"ab"});
  CHECK(tokenize("ab a", TokenizeMode::Bytes, 2).size() == 2);
  CHECK(tokenize("abc", TokenizeMode::Words, 0).empty());
}

TEST_CASE("bytes mode keeps every byte, any content") {
  auto toks = tokenize(std::string_view("a\xFF\x00z", 4), TokenizeMode::Bytes);
  REQUIRE(toks.size() == 4);
  CHECK(toks[1] == std::string(1, '\xFF'));
  CHECK(toks[2] == std::string(1, '\0'));
}

TEST_CASE("non-ASCII code points are word characters in words mode") {
  auto toks = tokenize("sch\xC3\xB6n tag", TokenizeMode::Words);
  REQUIRE(toks.size() == 2);
  CHECK(toks[0] == "sch\xC3\xB6n");
}

TEST_CASE("invalid UTF-8 reports the byte offset") {
  CHECK_THROWS_AS(tokenize("a\xFF\x62", TokenizeMode::Words), DecodingError);
  try {
    tokenize("ab\xC3(z", TokenizeMode::Words);
    FAIL("expected DecodingError");
  } catch (const DecodingError& e) {
    CHECK(e.byte_offset == 2);
  }
  // Overlong encoding and lone continuation byte.
  CHECK_THROWS_AS(tokenize("\xC0\xAF", TokenizeMode::Words), DecodingError);
  CHECK_THROWS_AS(tokenize("\x80", TokenizeMode::Words), DecodingError);
  // Truncated file (no truncation requested) is an error...
  CHECK_THROWS_AS(tokenize("ab\xC3", TokenizeMode::Words), DecodingError);
  // ...but a character cut by our own truncation is silently dropped.
  auto toks = tokenize("ab\xC3\xB6", TokenizeMode::Words, 3);
  CHECK(toks == std::vector<std::string>{"ab"});
}

TEST_CASE("joint alphabet ids follow first appearance, source first") {
  auto enc = build_alphabet({"a", "b"}, {"b", "c"});
  CHECK(enc.alphabet.size() == 3);
  CHECK(enc.source.ids == std::vector<Symbol>{0, 1});
  CHECK(enc.target.ids == std::vector<Symbol>{1, 2});
  CHECK(enc.alphabet.tokens == std::vector<std::string>{"a", "b", "c"});

  auto enc2 = build_alphabet({}, {"x"});
  CHECK(enc2.alphabet.size() == 1);
  CHECK(enc2.source.ids.empty());
  CHECK(enc2.target.ids == std::vector<Symbol>{0});

  auto enc3 = build_alphabet({"a", "a"}, {"a"});
  CHECK(enc3.alphabet.size() == 1);
  CHECK(enc3.source.ids == std::vector<Symbol>{0, 0});
  CHECK(enc3.target.ids == std::vector<Symbol>{0});
}

TEST_CASE("tokenization is case-sensitive") {
  auto enc = build_alphabet({"The"}, {"the"});
  CHECK(enc.alphabet.size() == 2);
}

TEST_CASE("parikh counts occurrences") {
  CHECK(parikh(SymbolString{{0, 1, 2, 0}}, 3) == ParikhVector{2, 1, 1});
  CHECK(parikh(SymbolString{}, 2) == ParikhVector{0, 0});
  CHECK(parikh(SymbolString{{1, 1, 1}}, 2) == ParikhVector{0, 3});
  CHECK_THROWS_AS(parikh(SymbolString{{5}}, 2), std::domain_error);
}

TEST_CASE("parikh sums to the string length") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    auto s = oracles::random_string(rng, 60, 9);
    auto counts = parikh(s, 9);
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    CHECK(total == s.size());
  }
}

TEST_CASE("pair stats worked examples") {
  PairStats st = pair_stats({1, 1}, {1, 1});
  CHECK(st.cross_sum == 2);
  CHECK(st.gamma == 0);
  CHECK(st.n_prime == 2);
  CHECK(st.m_prime == 2);

  st = pair_stats({2, 0}, {0, 3});
  CHECK(st.cross_sum == 0);
  CHECK(st.n_prime == 0);
  CHECK(st.m_prime == 0);

  st = pair_stats({1, 2, 1}, {2, 2, 0});
  CHECK(st.cross_sum == 6);

  CHECK_THROWS_AS(pair_stats({1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("gamma is reported raw, negatives included") {
  CHECK(pair_stats({3}, {1}).gamma == -2);  // min(3, 1 - 3)
  CHECK(pair_stats({}, {}).gamma == 0);     // empty alphabet
}

TEST_CASE("cross_sum equals the brute-force equal-symbol pair count") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 300; ++round) {
    auto s = oracles::random_string(rng, 50, 5);
    auto t = oracles::random_string(rng, 50, 5);
    std::uint64_t pairs = 0;
    for (Symbol a : s.ids)
      for (Symbol b : t.ids)
        if (a == b) ++pairs;
    CHECK(pair_stats(parikh(s, 5), parikh(t, 5)).cross_sum == pairs);
  }
}

TEST_CASE("projections keep full length when both strings use every symbol") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 100; ++round) {
    auto s = oracles::random_string(rng, 40, 3);
    auto t = oracles::random_string(rng, 40, 3);
    auto ps = parikh(s, 3), pt = parikh(t, 3);
    bool all_shared = true;
    for (std::size_t a = 0; a < 3; ++a)
      if (ps[a] == 0 || pt[a] == 0) all_shared = false;
    if (!all_shared) continue;
    PairStats st = pair_stats(ps, pt);
    CHECK(st.n_prime == s.size());
    CHECK(st.m_prime == t.size());
  }
}
