#include "hbraid/artin.hpp"

#include <stdexcept>

namespace hbraid {

Endomorphism::Endomorphism(int strands, std::vector<GroupWord> images)
    : strands_(strands), images_(std::move(images)) {
  if (images_.size() != static_cast<std::size_t>(strands_))
    throw std::invalid_argument("an endomorphism of RF_n needs exactly n images");
  for (const auto& img : images_)
    if (img.strands() != strands_) throw std::invalid_argument("image strand count mismatch");
}

Endomorphism Endomorphism::identity(int strands) {
  std::vector<GroupWord> images;
  for (int i = 1; i <= strands; ++i) images.push_back(GroupWord::generator(strands, i));
  return Endomorphism(strands, std::move(images));
}

GroupWord Endomorphism::apply(const GroupWord& w) const {
  if (w.strands() != strands_) throw std::invalid_argument("strand count mismatch");
  return free_reduce(substitute(w, images_));
}

Endomorphism compose(const Endomorphism& f, const Endomorphism& g) {
  if (f.strands() != g.strands()) throw std::invalid_argument("strand count mismatch");
  std::vector<GroupWord> images;
  images.reserve(g.images().size());
  for (const auto& img : g.images()) images.push_back(f.apply(img));
  return Endomorphism(f.strands(), std::move(images));
}

bool endo_equal(const Endomorphism& f, const Endomorphism& g) {
  if (f.strands() != g.strands()) throw std::invalid_argument("strand count mismatch");
  for (std::size_t i = 0; i < f.images().size(); ++i)
    if (!rf_equal(f.images()[i], g.images()[i])) return false;
  return true;
}

Endomorphism phi_generator(GeneratorLetter g, int n) {
  if (g.index < 1 || g.index >= n)
    throw std::invalid_argument("generator index out of range for " + std::to_string(n) +
                                " strands");
  const auto id = Endomorphism::identity(n);
  std::vector<GroupWord> images(id.images().begin(), id.images().end());
  const int i = g.index;
  const GroupLetter xi{i, 1}, xj{i + 1, 1};
  auto& lo = images[static_cast<std::size_t>(i - 1)];
  auto& hi = images[static_cast<std::size_t>(i)];
  if (g.is_virtual()) {
    lo = GroupWord(n, {xj});
    hi = GroupWord(n, {xi});
  } else if (g.sign > 0) {
    lo = GroupWord(n, {xj});
    hi = GroupWord(n, {xj.inverse(), xi, xj});
  } else {
    lo = GroupWord(n, {xi, xj, xi.inverse()});
    hi = GroupWord(n, {xi});
  }
  return Endomorphism(n, std::move(images));
}

Endomorphism phi(const BraidWord& w) {
  auto f = Endomorphism::identity(w.strands());
  for (const auto& l : w.letters()) f = compose(f, phi_generator(l, w.strands()));
  return f;
}

BraidComparison compare_braids(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("strand count mismatch");
  const auto fa = phi(a), fb = phi(b);
  BraidComparison out;
  for (int i = 1; i <= a.strands(); ++i) {
    if (free_reduce(fa.image(i)) == free_reduce(fb.image(i))) continue;
    auto ma = magnus(fa.image(i)), mb = magnus(fb.image(i));
    if (ma == mb) continue;
    out.equal = false;
    out.separating_index = i;
    out.left_magnus = std::move(ma);
    out.right_magnus = std::move(mb);
    break;
  }
  return out;
}

bool braid_equal(const BraidWord& a, const BraidWord& b) { return compare_braids(a, b).equal; }

ClassicalityReport classicality_obstruction(const BraidWord& w) {
  const auto x = GroupWord::ordered_product(w.strands());
  auto u = phi(w).apply(x);
  const bool holds = rf_equal(u, x);
  return {holds, std::move(u)};
}

TorsionReport torsion_obstruction(const BraidWord& w) {
  const int n = w.strands();
  const auto u = phi(w).apply(GroupWord::ordered_product(n));
  const auto moved = phi(lambda(n)).apply(u);
  return {top_coefficient_sum(magnus(u)), !rf_equal(moved, u)};
}

bool has_generator_conjugacy_shape(const Endomorphism& f, const Permutation& perm) {
  if (perm.size() != f.strands()) throw std::invalid_argument("permutation size mismatch");
  const auto inv = perm.inverse();
  for (int i = 1; i <= f.strands(); ++i) {
    const auto linear = magnus(f.image(i)).degree_part(1);
    if (linear != ReducedPolynomial::variable(f.strands(), inv(i))) return false;
  }
  return true;
}

bool generator_conjugacy_check(const BraidWord& w) {
  return has_generator_conjugacy_shape(phi(w), permutation_of(w));
}

} // namespace hbraid
