#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "generators.hpp"
#include "hbraid/artin.hpp"
#include "hbraid/errors.hpp"
#include "hbraid/group_word.hpp"
#include "oracles.hpp"

using namespace hbraid;

namespace {

GroupWord gw(const char* text, int n) { return parse_group_word(text, n); }

ReducedPolynomial poly(int n, std::initializer_list<std::pair<Monomial, int>> terms) {
  ReducedPolynomial::Terms t;
  for (const auto& [m, c] : terms) t[m] += c;
  return ReducedPolynomial(n, std::move(t));
}

} // namespace

TEST_CASE("group word grammar") {
  const auto w = gw("x2' x1  x2", 2);
  REQUIRE(w.size() == 3);
  CHECK(w.letters()[0] == GroupLetter{2, -1});
  CHECK(w.to_string() == "x2' x1 x2");
  CHECK(gw("", 3).empty());

  CHECK_THROWS_AS(gw("x3", 2), ParseError);
  CHECK_THROWS_AS(gw("x", 2), ParseError);
  CHECK_THROWS_AS(gw("y1", 2), ParseError);
  try {
    gw("x1 x1 z", 2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }

  gen::Source src(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto r = src.group_word(4, 10);
    CHECK(parse_group_word(r.to_string(), 4) == r);
  }
}

TEST_CASE("magnus examples") {
  CHECK(magnus(GroupWord(2)) == ReducedPolynomial::one(2));
  CHECK(magnus(gw("x1 x2", 2)) == poly(2, {{{}, 1}, {{1}, 1}, {{2}, 1}, {{1, 2}, 1}}));
  CHECK(magnus(gw("x1'", 2)) == poly(2, {{{}, 1}, {{1}, -1}}));
  CHECK(magnus(gw("x1 x1", 1)) == poly(1, {{{}, 1}, {{1}, 2}}));
}

TEST_CASE("magnus agrees with subsequence enumeration") {
  gen::Source src(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = src.uniform(1, 5);
    const auto w = src.group_word(n, 12);
    CHECK(oracle::as_map(magnus(w)) == oracle::magnus_by_subsequences(w));
  }
}

TEST_CASE("defining relations collapse under magnus") {
  gen::Source src(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = src.uniform(1, 4);
    const auto omega = src.group_word(n, 6);
    const int i = src.uniform(1, n);
    const auto xi = GroupWord::generator(n, i);
    const auto rel = commutator(omega * xi * word_inverse(omega), xi);
    CHECK(oracle::magnus_by_subsequences(rel) == std::map<std::vector<int>, long long>{{{}, 1}});
    CHECK(magnus(rel) == ReducedPolynomial::one(n));
    CHECK(rf_equal(rel, GroupWord(n)));
  }
}

TEST_CASE("word_inverse") {
  CHECK(word_inverse(gw("x1", 2)) == gw("x1'", 2));
  CHECK(word_inverse(gw("x1 x2", 2)) == gw("x2' x1'", 2));
  CHECK(word_inverse(GroupWord(2)).empty());
  gen::Source src(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto w = src.group_word(4, 10);
    CHECK(magnus(w * word_inverse(w)) == ReducedPolynomial::one(4));
    CHECK(magnus(word_inverse(w)) * magnus(w) == ReducedPolynomial::one(4));
  }
}

TEST_CASE("substitute") {
  const auto id = Endomorphism::identity(2);
  const auto s1 = phi_generator(GeneratorLetter::sigma(1), 2);
  CHECK(substitute(gw("x1", 2), id.images()) == gw("x1", 2));
  CHECK(substitute(gw("x1 x2", 2), s1.images()) == gw("x2 x2' x1 x2", 2));
  CHECK(substitute(gw("x1'", 2), s1.images()) == gw("x2'", 2));

  const std::vector<GroupWord> short_images{gw("x2", 2)};
  CHECK_THROWS_AS(substitute(gw("x2", 2), short_images), std::invalid_argument);
}

TEST_CASE("rf_equal") {
  CHECK(rf_equal(gw("x1 x1'", 2), GroupWord(2)));
  CHECK_FALSE(rf_equal(gw("x1 x2", 2), gw("x2 x1", 2)));
  // Monomials X1X2 and X2X1 separate the two words.
  CHECK(magnus(gw("x1 x2", 2)).coefficient(Monomial{1, 2}) == 1);
  CHECK(magnus(gw("x2 x1", 2)).coefficient(Monomial{1, 2}) == 0);
  CHECK_THROWS_AS(rf_equal(GroupWord(2), GroupWord(3)), std::invalid_argument);
}

TEST_CASE("free_reduce") {
  CHECK(free_reduce(gw("x1 x1' x2", 2)) == gw("x2", 2));
  CHECK(free_reduce(gw("x1 x2 x1", 2)) == gw("x1 x2 x1", 2));
  CHECK(free_reduce(gw("x1 x2 x2' x1'", 2)).empty());
  gen::Source src(99);
  for (int trial = 0; trial < 100; ++trial) {
    const auto w = src.group_word(3, 12);
    CHECK(rf_equal(w, free_reduce(w)));
    CHECK(free_reduce(free_reduce(w)) == free_reduce(w));
  }
}

TEST_CASE("magnus is multiplicative") {
  gen::Source src(1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = src.uniform(1, 5);
    const auto a = src.group_word(n, 8), b = src.group_word(n, 8);
    CHECK(magnus(a * b) == magnus(a) * magnus(b));
  }
}

TEST_CASE("degree-1 part of magnus is the abelianization") {
  gen::Source src(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = src.uniform(1, 5);
    const auto w = src.group_word(n, 12);
    std::vector<int> exponent(static_cast<std::size_t>(n + 1), 0);
    for (const auto& l : w.letters()) exponent[static_cast<std::size_t>(l.index)] += l.sign;
    const auto linear = magnus(w).degree_part(1);
    for (int i = 1; i <= n; ++i)
      CHECK(linear.coefficient(Monomial{i}) == exponent[static_cast<std::size_t>(i)]);
  }
}

TEST_CASE("substitute respects composition") {
  gen::Source src(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = src.uniform(2, 4);
    const auto f = phi(src.welded(n, 5));
    const auto g = phi(src.welded(n, 5));
    const auto w = src.group_word(n, 6);
    // (g ∘ f)(w): apply f first, then g.
    const auto two_step = substitute(substitute(w, f.images()), g.images());
    CHECK(rf_equal(two_step, substitute(w, compose(g, f).images())));
  }
}

// The reduced Magnus expansion is only used to decide equality; these two
// checks probe that reliance at desk scale.
TEST_CASE("short words related by relator insertion have equal expansions") {
  const int n = 3;
  std::vector<GroupWord> words{GroupWord(n)};
  std::vector<GroupWord> frontier = words;
  for (int len = 1; len <= 4; ++len) {
    std::vector<GroupWord> next;
    for (const auto& w : frontier)
      for (int i = 1; i <= n; ++i)
        for (int s : {1, -1}) next.push_back(w * GroupWord::generator(n, i, s));
    words.insert(words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::vector<GroupWord> omegas;
  for (const auto& w : words)
    if (w.size() <= 2) omegas.push_back(w);

  std::size_t checks = 0;
  for (std::size_t k = 0; k < words.size(); k += 7) {
    const auto& w = words[k];
    const auto mw = magnus(w);
    for (std::size_t cut = 0; cut <= w.size(); ++cut) {
      std::vector<GroupLetter> head(w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(cut));
      std::vector<GroupLetter> tail(w.letters().begin() + static_cast<std::ptrdiff_t>(cut), w.letters().end());
      for (std::size_t o = 0; o < omegas.size(); o += 3) {
        for (int i = 1; i <= n; ++i) {
          const auto xi = GroupWord::generator(n, i);
          const auto rel = commutator(omegas[o] * xi * word_inverse(omegas[o]), xi);
          const auto related = GroupWord(n, head) * rel * GroupWord(n, tail);
          CHECK(magnus(related) == mw);
          ++checks;
        }
      }
    }
  }
  CHECK(checks > 1000);
}

TEST_CASE("distinct short reduced words have distinct expansions") {
  // A collision here would be a freely nontrivial word of length <= 6 with
  // trivial expansion.
  const int n = 3;
  std::vector<GroupWord> reduced{GroupWord(n)};
  std::vector<GroupWord> frontier = reduced;
  for (int len = 1; len <= 3; ++len) {
    std::vector<GroupWord> next;
    for (const auto& w : frontier)
      for (int i = 1; i <= n; ++i)
        for (int s : {1, -1}) {
          if (!w.empty() && w.letters().back() == GroupLetter{i, -s}) continue;
          next.push_back(w * GroupWord::generator(n, i, s));
        }
    reduced.insert(reduced.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  CHECK(reduced.size() == 1 + 6 + 30 + 150);
  std::set<std::string> images;
  for (const auto& w : reduced) images.insert(magnus(w).to_string());
  CHECK(images.size() == reduced.size());
}
