#include "hbraid/reduced_polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace hbraid {

Monomial::Monomial(std::vector<int> indices) : indices_(std::move(indices)) {
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (indices_[k] < 1) throw std::invalid_argument("monomial index must be positive");
    for (std::size_t l = 0; l < k; ++l)
      if (indices_[l] == indices_[k])
        throw std::invalid_argument("monomial has a repeated variable");
  }
}

bool Monomial::contains(int index) const noexcept {
  return std::find(indices_.begin(), indices_.end(), index) != indices_.end();
}

int Monomial::max_index() const noexcept {
  return indices_.empty() ? 0 : *std::max_element(indices_.begin(), indices_.end());
}

std::string Monomial::to_string() const {
  if (indices_.empty()) return "1";
  std::string out;
  for (int i : indices_) out += "X" + std::to_string(i);
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.indices() <=> b.indices();
}

ReducedPolynomial::ReducedPolynomial(int strands, Terms terms) : strands_(strands) {
  if (strands_ < 0) throw std::invalid_argument("negative strand count");
  for (auto& [m, c] : terms) {
    if (m.max_index() > strands_) throw std::invalid_argument("monomial variable exceeds n");
    if (c != 0) terms_.emplace(m, std::move(c));
  }
}

ReducedPolynomial ReducedPolynomial::constant(int strands, BigInt value) {
  Terms t;
  t.emplace(Monomial{}, std::move(value));
  return ReducedPolynomial(strands, std::move(t));
}

ReducedPolynomial ReducedPolynomial::variable(int strands, int index) {
  Terms t;
  t.emplace(Monomial{index}, 1);
  return ReducedPolynomial(strands, std::move(t));
}

ReducedPolynomial ReducedPolynomial::unipotent(int strands, int index, int sign) {
  Terms t;
  t.emplace(Monomial{}, 1);
  t.emplace(Monomial{index}, sign);
  return ReducedPolynomial(strands, std::move(t));
}

BigInt ReducedPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

ReducedPolynomial ReducedPolynomial::degree_part(std::size_t degree) const {
  ReducedPolynomial out(strands_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == degree) out.terms_.emplace(m, c);
  return out;
}

void ReducedPolynomial::add_term(const Monomial& m, const BigInt& c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void ReducedPolynomial::multiply_unipotent(int index, int sign) {
  if (index < 1 || index > strands_) throw std::invalid_argument("variable index out of range");
  // Visiting m adds sign·c(m) to m·X_index. That target contains `index`,
  // so it never feeds a further update, and c(m) is read before any write
  // to it. The in-place sweep therefore uses only original coefficients.
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    const Monomial& m = it->first;
    if (m.contains(index)) continue;
    std::vector<int> longer = m.indices();
    longer.push_back(index);
    add_term(Monomial(std::move(longer)), sign > 0 ? it->second : BigInt(-it->second));
  }
}

ReducedPolynomial& ReducedPolynomial::operator+=(const ReducedPolynomial& other) {
  if (strands_ != other.strands_) throw std::invalid_argument("strand count mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

ReducedPolynomial& ReducedPolynomial::operator-=(const ReducedPolynomial& other) {
  if (strands_ != other.strands_) throw std::invalid_argument("strand count mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

std::string ReducedPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.degree() == 0) {
      out += magnitude.str();
    } else {
      if (magnitude != 1) out += magnitude.str();
      out += m.to_string();
    }
  }
  return out;
}

ReducedPolynomial operator+(ReducedPolynomial p, const ReducedPolynomial& q) { return p += q; }
ReducedPolynomial operator-(ReducedPolynomial p, const ReducedPolynomial& q) { return p -= q; }

ReducedPolynomial operator-(const ReducedPolynomial& p) {
  return ReducedPolynomial(p.strands()) - p;
}

ReducedPolynomial operator*(const BigInt& c, const ReducedPolynomial& p) {
  ReducedPolynomial::Terms t;
  for (const auto& [m, a] : p.terms()) t.emplace(m, c * a);
  return ReducedPolynomial(p.strands(), std::move(t));
}

ReducedPolynomial operator*(const ReducedPolynomial& p, const ReducedPolynomial& q) {
  if (p.strands() != q.strands()) throw std::invalid_argument("strand count mismatch");
  ReducedPolynomial::Terms acc;
  for (const auto& [a, ca] : p.terms()) {
    for (const auto& [b, cb] : q.terms()) {
      if (std::any_of(b.indices().begin(), b.indices().end(),
                      [&](int i) { return a.contains(i); }))
        continue;
      std::vector<int> joined = a.indices();
      joined.insert(joined.end(), b.indices().begin(), b.indices().end());
      acc[Monomial(std::move(joined))] += ca * cb;
    }
  }
  return ReducedPolynomial(p.strands(), std::move(acc));
}

BigInt top_coefficient_sum(const ReducedPolynomial& p) {
  BigInt sum = 0;
  const auto top = static_cast<std::size_t>(p.strands());
  for (const auto& [m, c] : p.terms())
    if (m.degree() == top) sum += c;
  return sum;
}

ReducedPolynomial permute_variables(const ReducedPolynomial& p, const Permutation& perm) {
  if (perm.size() != p.strands()) throw std::invalid_argument("permutation size mismatch");
  ReducedPolynomial::Terms t;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> mapped;
    mapped.reserve(m.degree());
    for (int i : m.indices()) mapped.push_back(perm(i));
    t.emplace(Monomial(std::move(mapped)), c);
  }
  return ReducedPolynomial(p.strands(), std::move(t));
}

BigInt monomial_bound(int n) {
  BigInt total = 0, falling = 1;
  for (int k = 0; k <= n; ++k) {
    total += falling;
    falling *= (n - k);
  }
  return total;
}

} // namespace hbraid
