#include "hbraid/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hbraid {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("permutation images must be a bijection of {1.." +
                                  std::to_string(n) + "}");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i)
    inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i + 1)) return false;
  return true;
}

bool Permutation::preserves(const std::vector<int>& subset) const {
  return std::all_of(subset.begin(), subset.end(), [&](int i) {
    return std::find(subset.begin(), subset.end(), (*this)(i)) != subset.end();
  });
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(images_[i]);
  }
  return out + "]";
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size())
    throw std::invalid_argument("permutation size mismatch");
  std::vector<int> images(static_cast<std::size_t>(inner.size()));
  for (int i = 1; i <= inner.size(); ++i)
    images[static_cast<std::size_t>(i - 1)] = outer(inner(i));
  return Permutation(std::move(images));
}

} // namespace hbraid
