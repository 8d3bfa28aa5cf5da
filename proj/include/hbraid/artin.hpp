#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hbraid/braid_word.hpp"
#include "hbraid/group_word.hpp"
#include "hbraid/permutation.hpp"
#include "hbraid/reduced_polynomial.hpp"

namespace hbraid {

// An endomorphism of RF_n, given by the images of x_1..x_n.
class Endomorphism {
public:
  explicit Endomorphism(int strands, std::vector<GroupWord> images);

  static Endomorphism identity(int strands);

  int strands() const noexcept { return strands_; }
  std::span<const GroupWord> images() const noexcept { return images_; }
  const GroupWord& image(int index) const { return images_.at(static_cast<std::size_t>(index - 1)); }

  // Freely reduced image of a word.
  GroupWord apply(const GroupWord& w) const;

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

private:
  int strands_;
  std::vector<GroupWord> images_;
};

// (f ∘ g)(x) = f(g(x)).
Endomorphism compose(const Endomorphism& f, const Endomorphism& g);

// Pointwise rf_equal.
bool endo_equal(const Endomorphism& f, const Endomorphism& g);

// Artin image of a single letter:
//   ρ_i:       x_i ↦ x_{i+1},                 x_{i+1} ↦ x_i
//   σ_i:       x_i ↦ x_{i+1},                 x_{i+1} ↦ x_{i+1}^{-1} x_i x_{i+1}
//   σ_i^{-1}:  x_i ↦ x_i x_{i+1} x_i^{-1},    x_{i+1} ↦ x_i
Endomorphism phi_generator(GeneratorLetter g, int n);

// φ(ab) = φ(a) ∘ φ(b); φ(1) is the identity.
Endomorphism phi(const BraidWord& w);

// Outcome of comparing two braids through their Artin images. On
// inequality, `separating_index` is the first generator whose images differ
// and the two Magnus expansions certify the difference.
struct BraidComparison {
  bool equal = true;
  std::optional<int> separating_index;
  std::optional<ReducedPolynomial> left_magnus;
  std::optional<ReducedPolynomial> right_magnus;
};

BraidComparison compare_braids(const BraidWord& a, const BraidWord& b);
bool braid_equal(const BraidWord& a, const BraidWord& b);

// u = φ(w)(x_1 ⋯ x_n). Classical braids fix x_1 ⋯ x_n, so `holds == false`
// proves w is not classical; `holds == true` is inconclusive.
struct ClassicalityReport {
  bool holds = true;
  GroupWord witness;
};
ClassicalityReport classicality_obstruction(const BraidWord& w);

// For u = φ(w)(x_1 ⋯ x_n): f_value = F(M(u)), and whether φ(λ_n) moves u.
struct TorsionReport {
  BigInt f_value;
  bool lambda_moves_it = false;
};
TorsionReport torsion_obstruction(const BraidWord& w);

// True iff the degree-1 part of M(f(x_i)) is exactly X_{perm^{-1}(i)} for
// every i.
bool has_generator_conjugacy_shape(const Endomorphism& f, const Permutation& perm);
bool generator_conjugacy_check(const BraidWord& w);

} // namespace hbraid
