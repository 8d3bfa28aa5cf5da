#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hbraid/reduced_polynomial.hpp"

namespace hbraid {

struct GroupLetter {
  int index = 1;
  int sign = 1;

  GroupLetter inverse() const noexcept { return {index, -sign}; }
  friend bool operator==(const GroupLetter&, const GroupLetter&) = default;
};

// A word in x_1..x_n and inverses, representing an element of the reduced
// free group RF_n. No normal form is maintained; equality of elements is
// decided by rf_equal.
class GroupWord {
public:
  explicit GroupWord(int strands, std::vector<GroupLetter> letters = {});

  static GroupWord generator(int strands, int index, int sign = 1);
  // x_1 x_2 ⋯ x_n.
  static GroupWord ordered_product(int strands);

  int strands() const noexcept { return strands_; }
  std::span<const GroupLetter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  // Serializes with the token grammar accepted by parse_group_word.
  std::string to_string() const;

  // Syntactic equality.
  friend bool operator==(const GroupWord&, const GroupWord&) = default;

private:
  int strands_;
  std::vector<GroupLetter> letters_;
};

// Grammar: whitespace-separated tokens `x<k>` or `x<k>'`, 1 <= k <= strands.
GroupWord parse_group_word(std::string_view text, int strands);

GroupWord operator*(const GroupWord& a, const GroupWord& b);
GroupWord word_inverse(const GroupWord& w);
GroupWord free_reduce(const GroupWord& w);

// [a, b] = a b a^{-1} b^{-1}.
GroupWord commutator(const GroupWord& a, const GroupWord& b);

// Replaces x_i^{+1} by images[i-1] and x_i^{-1} by its inverse. The result
// is the literal concatenation, not freely reduced.
GroupWord substitute(const GroupWord& w, std::span<const GroupWord> images);

// The reduced Magnus expansion x_i ↦ 1 + X_i. Since X_i² = 0, x_i^{-1}
// maps to 1 - X_i exactly.
ReducedPolynomial magnus(const GroupWord& w);

// Equality in RF_n, decided by comparing Magnus expansions. Completeness
// relies on injectivity of the reduced Magnus expansion on RF_n.
bool rf_equal(const GroupWord& a, const GroupWord& b);

} // namespace hbraid
