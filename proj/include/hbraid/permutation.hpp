#pragma once

#include <string>
#include <vector>

namespace hbraid {

// A bijection of {1, ..., n}, stored by images.
class Permutation {
public:
  Permutation() = default;
  // Throws std::invalid_argument unless `images` is a bijection of {1..size}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  // True iff the permutation maps `subset` onto itself.
  bool preserves(const std::vector<int>& subset) const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

// (outer ∘ inner)(i) = outer(inner(i)).
Permutation compose(const Permutation& outer, const Permutation& inner);

} // namespace hbraid
