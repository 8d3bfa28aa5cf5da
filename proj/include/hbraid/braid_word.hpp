#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hbraid/permutation.hpp"

namespace hbraid {

enum class LetterKind { classical, virtual_ };

// σ_i^{±1} or ρ_i. Virtual letters always carry sign +1 since ρ_i is an
// involution.
struct GeneratorLetter {
  LetterKind kind = LetterKind::classical;
  int index = 1;
  int sign = 1;

  static GeneratorLetter sigma(int index, int sign = 1) {
    return {LetterKind::classical, index, sign};
  }
  static GeneratorLetter rho(int index) { return {LetterKind::virtual_, index, 1}; }

  bool is_classical() const noexcept { return kind == LetterKind::classical; }
  bool is_virtual() const noexcept { return kind == LetterKind::virtual_; }
  GeneratorLetter inverse() const noexcept {
    return is_virtual() ? *this : GeneratorLetter{kind, index, -sign};
  }
  std::string to_string() const;

  friend bool operator==(const GeneratorLetter&, const GeneratorLetter&) = default;
};

// A word in σ_i^{±1}, ρ_i on a fixed number of strands, read left to right
// as top to bottom. Words are never normalized: two different words may
// spell the same braid, and operator== is syntactic.
class BraidWord {
public:
  explicit BraidWord(int strands, std::vector<GeneratorLetter> letters = {});

  static BraidWord trivial(int strands) { return BraidWord(strands); }

  int strands() const noexcept { return strands_; }
  std::span<const GeneratorLetter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const GeneratorLetter& operator[](std::size_t i) const { return letters_[i]; }

  bool is_classical() const noexcept;

  // Serializes with the token grammar accepted by parse_braid.
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
  int strands_;
  std::vector<GeneratorLetter> letters_;
};

// Grammar: whitespace-separated tokens `s<k>`, `s<k>'`, `r<k>`, `r<k>'`.
// Throws ParseError on malformed tokens or indices outside [1, strands-1].
BraidWord parse_braid(std::string_view text, int strands);

// `a` stacked on top of `b`.
BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord operator*(const BraidWord& a, const BraidWord& b);
BraidWord power(const BraidWord& w, int exponent);
BraidWord invert_word(const BraidWord& w);

// π(w): the strand starting at position i ends at position π(w)(i).
// π(ab) = π(b) ∘ π(a).
Permutation permutation_of(const BraidWord& w);

// λ_n = ρ_1 ρ_2 ⋯ ρ_{n-1}.
BraidWord lambda(int n);

// The pure generator χ_ij whose Artin image conjugates x_i by x_j.
// Requires 1 <= i != j <= n.
BraidWord chi(int i, int j, int n);

// A horizontal degree-1 w-arrow. Its head component is the conjugated
// generator and its tail supplies the conjugator.
struct WArrow {
  int tail = 1;
  int head = 2;
  int sign = 1;
};

// Product over the arrows, in order, of chi(head, tail, n)^{sign}.
BraidWord warrow_product(std::span<const WArrow> arrows, int n);

// Word-level welded isotopy moves. Sites are 1-based letter positions; a
// move at site s rewrites the window starting at letter s.
enum class Move {
  free_cancel,             // σ_i^ε σ_i^{-ε} → 1
  virtual_cancel,          // ρ_i ρ_i → 1
  far_commute,             // ab → ba when the indices differ by at least 2
  braid_relation,          // σ_i^ε σ_j^ε σ_i^ε ↔ σ_j^ε σ_i^ε σ_j^ε, |i-j| = 1
  virtual_braid_relation,  // ρ_i ρ_j ρ_i ↔ ρ_j ρ_i ρ_j, |i-j| = 1
  mixed_relation,          // ρ_i ρ_{i+1} σ_i^ε ↔ σ_{i+1}^ε ρ_i ρ_{i+1} and its mirror
  overcrossings_commute,   // ρ_i σ_{i+1} σ_i ↔ σ_{i+1} σ_i ρ_{i+1} and its inverse
};

inline constexpr Move all_moves[] = {
    Move::free_cancel,          Move::virtual_cancel,         Move::far_commute,
    Move::braid_relation,       Move::virtual_braid_relation, Move::mixed_relation,
    Move::overcrossings_commute};

std::string_view move_name(Move move);
std::optional<Move> move_from_name(std::string_view name);

bool move_applicable(const BraidWord& w, Move move, std::size_t site);

// Throws std::invalid_argument if the move does not apply at `site`.
BraidWord apply_move(const BraidWord& w, Move move, std::size_t site);

// Inserts letter · letter^{-1} before the 1-based position `site`
// (site = size + 1 appends). Covers σσ^{-1} and ρ_i² insertion.
BraidWord insert_trivial_pair(const BraidWord& w, std::size_t site, GeneratorLetter letter);

struct MoveSite {
  Move move;
  std::size_t site;
};
std::vector<MoveSite> applicable_moves(const BraidWord& w);

// Keeps only the components (labelled by starting position) in `keep`,
// re-indexing surviving crossings by the order of kept strands. Requires
// π(w) to map `keep` onto itself; throws std::invalid_argument otherwise.
BraidWord delete_strands(const BraidWord& w, std::vector<int> keep);

enum class Alphabet { classical, virtual_, welded };

// Uniform i.i.d. letters from the alphabet. With a single strand there are
// no generators and the result is always trivial.
BraidWord random_word(int n, std::size_t length, Alphabet alphabet, std::uint64_t seed);

} // namespace hbraid
