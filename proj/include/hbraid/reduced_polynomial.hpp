#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hbraid/permutation.hpp"

namespace hbraid {

using BigInt = boost::multiprecision::cpp_int;

// A square-free word X_{a1} X_{a2} ⋯ X_{ak} in noncommuting variables.
// Ordered by length, then lexicographically on indices.
class Monomial {
public:
  Monomial() = default;
  // Throws std::invalid_argument on a repeated or non-positive index.
  explicit Monomial(std::vector<int> indices);
  Monomial(std::initializer_list<int> indices) : Monomial(std::vector<int>(indices)) {}

  std::size_t degree() const noexcept { return indices_.size(); }
  const std::vector<int>& indices() const noexcept { return indices_; }
  bool contains(int index) const noexcept;
  int max_index() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
  std::vector<int> indices_;
};

// An element of A_n: integer combinations of square-free monomials in
// X_1..X_n, where any product with a repeated variable is zero.
class ReducedPolynomial {
public:
  using Terms = std::map<Monomial, BigInt>;

  explicit ReducedPolynomial(int strands) : strands_(strands) {}
  // Drops zero coefficients; throws if a monomial uses an index above n.
  ReducedPolynomial(int strands, Terms terms);

  static ReducedPolynomial constant(int strands, BigInt value);
  static ReducedPolynomial one(int strands) { return constant(strands, 1); }
  // 1 + sign·X_i, the Magnus image of x_i^{sign}.
  static ReducedPolynomial unipotent(int strands, int index, int sign = 1);
  static ReducedPolynomial variable(int strands, int index);

  int strands() const noexcept { return strands_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coefficient(const Monomial& m) const;

  // Homogeneous part of the given degree.
  ReducedPolynomial degree_part(std::size_t degree) const;

  // In place: *this ← *this · (1 + sign·X_index).
  void multiply_unipotent(int index, int sign);

  ReducedPolynomial& operator+=(const ReducedPolynomial& other);
  ReducedPolynomial& operator-=(const ReducedPolynomial& other);

  std::string to_string() const;

  friend bool operator==(const ReducedPolynomial&, const ReducedPolynomial&) = default;

private:
  void add_term(const Monomial& m, const BigInt& c);

  int strands_;
  Terms terms_;
};

ReducedPolynomial operator+(ReducedPolynomial p, const ReducedPolynomial& q);
ReducedPolynomial operator-(ReducedPolynomial p, const ReducedPolynomial& q);
ReducedPolynomial operator-(const ReducedPolynomial& p);
ReducedPolynomial operator*(const ReducedPolynomial& p, const ReducedPolynomial& q);
ReducedPolynomial operator*(const BigInt& c, const ReducedPolynomial& p);

// Sum of the coefficients of the monomials of degree n (every variable
// appears exactly once).
BigInt top_coefficient_sum(const ReducedPolynomial& p);

// Replaces X_i by X_{perm(i)} in every monomial.
ReducedPolynomial permute_variables(const ReducedPolynomial& p, const Permutation& perm);

// Σ_{k=0}^{n} n!/(n-k)!, the number of square-free monomials in n variables.
BigInt monomial_bound(int n);

} // namespace hbraid
