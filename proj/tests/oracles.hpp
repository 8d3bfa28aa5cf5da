#pragma once

// Independent reference computations used only by the tests. None of these
// go through the library's polynomial arithmetic or endomorphism
// composition.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "hbraid/artin.hpp"
#include "hbraid/braid_word.hpp"
#include "hbraid/group_word.hpp"
#include "hbraid/reduced_polynomial.hpp"

namespace hbraid::oracle {

// Expands Π_k (1 + ε_k X_{i_k}) by enumerating subsequences of letter
// positions with pairwise-distinct indices: each contributes the product of
// its signs to the monomial it spells.
inline std::map<std::vector<int>, long long> magnus_by_subsequences(const GroupWord& w) {
  std::map<std::vector<int>, long long> out;
  const auto letters = w.letters();
  std::vector<int> mono;
  auto rec = [&](auto&& self, std::size_t from, long long sign) -> void {
    out[mono] += sign;
    for (std::size_t k = from; k < letters.size(); ++k) {
      if (std::find(mono.begin(), mono.end(), letters[k].index) != mono.end()) continue;
      mono.push_back(letters[k].index);
      self(self, k + 1, sign * letters[k].sign);
      mono.pop_back();
    }
  };
  rec(rec, 0, 1);
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline std::map<std::vector<int>, long long> as_map(const ReducedPolynomial& p) {
  std::map<std::vector<int>, long long> out;
  for (const auto& [m, c] : p.terms()) out[m.indices()] = static_cast<long long>(c);
  return out;
}

// Rewrites a free-group word by one letter's Artin action, letter by letter,
// straight from the defining table.
inline std::vector<GroupLetter> act(GeneratorLetter g, const std::vector<GroupLetter>& word) {
  const int i = g.index, j = g.index + 1;
  std::vector<GroupLetter> out;
  for (const auto& l : word) {
    std::vector<GroupLetter> img;
    if (l.index == i) {
      if (g.is_virtual() || g.sign > 0) img = {{j, 1}};
      else img = {{i, 1}, {j, 1}, {i, -1}};
    } else if (l.index == j) {
      if (g.is_virtual()) img = {{i, 1}};
      else if (g.sign > 0) img = {{j, -1}, {i, 1}, {j, 1}};
      else img = {{i, 1}};
    } else {
      img = {{l.index, 1}};
    }
    if (l.sign > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) out.push_back(it->inverse());
    }
  }
  return out;
}

// φ(l_1 ⋯ l_k)(x) = φ(l_1)(φ(l_2)(⋯ φ(l_k)(x))): apply the last letter first.
inline GroupWord phi_apply_right_to_left(const BraidWord& w, const GroupWord& x) {
  std::vector<GroupLetter> cur(x.letters().begin(), x.letters().end());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) cur = act(*it, cur);
  return GroupWord(x.strands(), std::move(cur));
}

// Number of injective sequences of length <= n over n symbols, by explicit
// enumeration.
inline long long count_square_free_monomials(int n) {
  long long count = 0;
  std::vector<int> cur;
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  auto rec = [&](auto&& self) -> void {
    ++count;
    for (int i = 1; i <= n; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      used[static_cast<std::size_t>(i)] = true;
      self(self);
      used[static_cast<std::size_t>(i)] = false;
    }
  };
  rec(rec);
  return count;
}

} // namespace hbraid::oracle
