#include "hbraid/braid_word.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <stdexcept>

#include "hbraid/errors.hpp"

namespace hbraid {

std::string GeneratorLetter::to_string() const {
  std::string out = is_virtual() ? "r" : "s";
  out += std::to_string(index);
  if (is_classical() && sign < 0) out += '\'';
  return out;
}

BraidWord::BraidWord(int strands, std::vector<GeneratorLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw std::invalid_argument("a braid needs at least one strand");
  for (auto& l : letters_) {
    if (l.index < 1 || l.index >= strands_)
      throw std::invalid_argument("generator index " + std::to_string(l.index) +
                                  " out of range for " + std::to_string(strands_) + " strands");
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("generator sign must be ±1");
    if (l.is_virtual()) l.sign = 1;
  }
}

bool BraidWord::is_classical() const noexcept {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](const GeneratorLetter& l) { return l.is_classical(); });
}

std::string BraidWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += letters_[i].to_string();
  }
  return out;
}

BraidWord parse_braid(std::string_view text, int strands) {
  if (strands < 1) throw std::invalid_argument("strand count must be positive");
  std::vector<GeneratorLetter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    const char head = text[pos++];
    if (head != 's' && head != 'r')
      throw ParseError(std::string("unexpected character '") + head + "'", start);
    const std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw ParseError("missing generator index", start);
    if (pos - digits > 9) throw ParseError("generator index too large", start);
    const int index = std::stoi(std::string(text.substr(digits, pos - digits)));
    int sign = 1;
    if (pos < text.size() && text[pos] == '\'') {
      sign = -1;
      ++pos;
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw ParseError("malformed token", start);
    if (index < 1 || index >= strands)
      throw ParseError("generator index " + std::to_string(index) + " out of range for " +
                           std::to_string(strands) + " strands",
                       start);
    letters.push_back(head == 's' ? GeneratorLetter::sigma(index, sign)
                                  : GeneratorLetter::rho(index));
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("strand count mismatch");
  std::vector<GeneratorLetter> letters(a.letters().begin(), a.letters().end());
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) { return compose(a, b); }

BraidWord invert_word(const BraidWord& w) {
  std::vector<GeneratorLetter> letters;
  letters.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    letters.push_back(it->inverse());
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord power(const BraidWord& w, int exponent) {
  const BraidWord base = exponent < 0 ? invert_word(w) : w;
  BraidWord out = BraidWord::trivial(w.strands());
  for (int k = 0; k < std::abs(exponent); ++k) out = out * base;
  return out;
}

Permutation permutation_of(const BraidWord& w) {
  // at[p] = component currently occupying position p + 1.
  std::vector<int> at(static_cast<std::size_t>(w.strands()));
  for (std::size_t p = 0; p < at.size(); ++p) at[p] = static_cast<int>(p + 1);
  for (const auto& l : w.letters())
    std::swap(at[static_cast<std::size_t>(l.index - 1)], at[static_cast<std::size_t>(l.index)]);
  std::vector<int> images(at.size());
  for (std::size_t p = 0; p < at.size(); ++p)
    images[static_cast<std::size_t>(at[p] - 1)] = static_cast<int>(p + 1);
  return Permutation(std::move(images));
}

BraidWord lambda(int n) {
  std::vector<GeneratorLetter> letters;
  for (int i = 1; i < n; ++i) letters.push_back(GeneratorLetter::rho(i));
  return BraidWord(n, std::move(letters));
}

BraidWord chi(int i, int j, int n) {
  if (i == j || i < 1 || j < 1 || i > n || j > n)
    throw std::invalid_argument("chi requires 1 <= i != j <= n");
  std::vector<GeneratorLetter> letters;
  if (i < j) {
    for (int k = i; k <= j - 2; ++k) letters.push_back(GeneratorLetter::rho(k));
    letters.push_back(GeneratorLetter::sigma(j - 1));
    for (int k = j - 1; k >= i; --k) letters.push_back(GeneratorLetter::rho(k));
  } else {
    for (int k = i - 1; k >= j; --k) letters.push_back(GeneratorLetter::rho(k));
    letters.push_back(GeneratorLetter::sigma(j));
    for (int k = j + 1; k <= i - 1; ++k) letters.push_back(GeneratorLetter::rho(k));
  }
  return BraidWord(n, std::move(letters));
}

BraidWord warrow_product(std::span<const WArrow> arrows, int n) {
  BraidWord out = BraidWord::trivial(n);
  for (const auto& a : arrows) {
    if (a.sign != 1 && a.sign != -1) throw std::invalid_argument("w-arrow sign must be ±1");
    out = out * power(chi(a.head, a.tail, n), a.sign);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Moves

std::string_view move_name(Move move) {
  switch (move) {
    case Move::free_cancel: return "free-cancel";
    case Move::virtual_cancel: return "virtual-cancel";
    case Move::far_commute: return "far-commute";
    case Move::braid_relation: return "braid-relation";
    case Move::virtual_braid_relation: return "virtual-braid-relation";
    case Move::mixed_relation: return "mixed-relation";
    case Move::overcrossings_commute: return "overcrossings-commute";
  }
  return "unknown";
}

std::optional<Move> move_from_name(std::string_view name) {
  for (Move m : all_moves)
    if (move_name(m) == name) return m;
  return std::nullopt;
}

namespace {

using Letters = std::vector<GeneratorLetter>;
using G = GeneratorLetter;

bool is_rho(const G& l, int index) { return l.is_virtual() && l.index == index; }
bool is_sigma(const G& l, int index, int sign) {
  return l.is_classical() && l.index == index && l.sign == sign;
}

std::optional<Letters> rewrite_pair(Move move, const G& a, const G& b) {
  switch (move) {
    case Move::free_cancel:
      if (a.is_classical() && b.is_classical() && a.index == b.index && a.sign == -b.sign)
        return Letters{};
      break;
    case Move::virtual_cancel:
      if (a.is_virtual() && b.is_virtual() && a.index == b.index) return Letters{};
      break;
    case Move::far_commute:
      if (std::abs(a.index - b.index) >= 2) return Letters{b, a};
      break;
    default:
      break;
  }
  return std::nullopt;
}

std::optional<Letters> rewrite_triple(Move move, const G& a, const G& b, const G& c) {
  switch (move) {
    case Move::braid_relation:
      if (a.is_classical() && b.is_classical() && a == c && a.sign == b.sign &&
          std::abs(a.index - b.index) == 1)
        return Letters{b, a, b};
      break;
    case Move::virtual_braid_relation:
      if (a.is_virtual() && b.is_virtual() && a == c && std::abs(a.index - b.index) == 1)
        return Letters{b, a, b};
      break;
    case Move::mixed_relation: {
      // ρ_i ρ_{i+1} σ_i^ε  ↔  σ_{i+1}^ε ρ_i ρ_{i+1}
      // ρ_{i+1} ρ_i σ_{i+1}^ε  ↔  σ_i^ε ρ_{i+1} ρ_i
      if (a.is_virtual() && b.is_virtual() && c.is_classical()) {
        const int i = a.index, e = c.sign;
        if (is_rho(b, i + 1) && c.index == i) return Letters{G::sigma(i + 1, e), a, b};
        if (is_rho(b, i - 1) && c.index == i) return Letters{G::sigma(i - 1, e), a, b};
      }
      if (a.is_classical() && b.is_virtual() && c.is_virtual()) {
        const int i = b.index, e = a.sign;
        if (is_rho(c, i + 1) && a.index == i + 1) return Letters{b, c, G::sigma(i, e)};
        if (is_rho(c, i - 1) && a.index == i - 1) return Letters{b, c, G::sigma(i, e)};
      }
      break;
    }
    case Move::overcrossings_commute: {
      // ρ_i σ_{i+1} σ_i  ↔  σ_{i+1} σ_i ρ_{i+1}
      // ρ_{i+1} σ_i^{-1} σ_{i+1}^{-1}  ↔  σ_i^{-1} σ_{i+1}^{-1} ρ_i
      if (a.is_virtual()) {
        const int i = a.index;
        if (is_sigma(b, i + 1, 1) && is_sigma(c, i, 1)) return Letters{b, c, G::rho(i + 1)};
        if (is_sigma(b, i - 1, -1) && is_sigma(c, i, -1)) return Letters{b, c, G::rho(i - 1)};
      }
      if (c.is_virtual()) {
        const int i = c.index;
        if (is_sigma(a, i, 1) && is_sigma(b, i - 1, 1)) return Letters{G::rho(i - 1), a, b};
        if (is_sigma(a, i, -1) && is_sigma(b, i + 1, -1)) return Letters{G::rho(i + 1), a, b};
      }
      break;
    }
    default:
      break;
  }
  return std::nullopt;
}

std::optional<BraidWord> try_move(const BraidWord& w, Move move, std::size_t site) {
  if (site < 1 || site > w.size()) return std::nullopt;
  const std::size_t at = site - 1;
  const auto letters = w.letters();
  const bool pair_move =
      move == Move::free_cancel || move == Move::virtual_cancel || move == Move::far_commute;
  const std::size_t width = pair_move ? 2 : 3;
  if (at + width > letters.size()) return std::nullopt;

  auto replacement = pair_move ? rewrite_pair(move, letters[at], letters[at + 1])
                               : rewrite_triple(move, letters[at], letters[at + 1], letters[at + 2]);
  if (!replacement) return std::nullopt;
  Letters out(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(at));
  out.insert(out.end(), replacement->begin(), replacement->end());
  out.insert(out.end(), letters.begin() + static_cast<std::ptrdiff_t>(at + width), letters.end());
  return BraidWord(w.strands(), std::move(out));
}

} // namespace

bool move_applicable(const BraidWord& w, Move move, std::size_t site) {
  return try_move(w, move, site).has_value();
}

BraidWord apply_move(const BraidWord& w, Move move, std::size_t site) {
  auto out = try_move(w, move, site);
  if (!out)
    throw std::invalid_argument(std::string(move_name(move)) + " is not applicable at site " +
                                std::to_string(site));
  return *std::move(out);
}

BraidWord insert_trivial_pair(const BraidWord& w, std::size_t site, GeneratorLetter letter) {
  if (site < 1 || site > w.size() + 1)
    throw std::invalid_argument("insertion site out of range");
  Letters out(w.letters().begin(), w.letters().end());
  const auto at = out.begin() + static_cast<std::ptrdiff_t>(site - 1);
  out.insert(at, {letter, letter.inverse()});
  return BraidWord(w.strands(), std::move(out));
}

std::vector<MoveSite> applicable_moves(const BraidWord& w) {
  std::vector<MoveSite> out;
  for (Move m : all_moves)
    for (std::size_t s = 1; s <= w.size(); ++s)
      if (move_applicable(w, m, s)) out.push_back({m, s});
  return out;
}

// ---------------------------------------------------------------------------

BraidWord delete_strands(const BraidWord& w, std::vector<int> keep) {
  const int n = w.strands();
  std::sort(keep.begin(), keep.end());
  if (keep.empty()) throw std::invalid_argument("at least one component must be kept");
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end())
    throw std::invalid_argument("duplicate component label");
  if (keep.front() < 1 || keep.back() > n)
    throw std::invalid_argument("component label out of range");
  if (!permutation_of(w).preserves(keep))
    throw std::invalid_argument("kept components are not invariant under the braid permutation");

  std::vector<bool> kept(static_cast<std::size_t>(n + 1), false);
  for (int c : keep) kept[static_cast<std::size_t>(c)] = true;
  // at[p] = component at position p (1-based; at[0] unused).
  std::vector<int> at(static_cast<std::size_t>(n + 1));
  for (int p = 0; p <= n; ++p) at[static_cast<std::size_t>(p)] = p;

  Letters out;
  for (const auto& l : w.letters()) {
    const auto left = static_cast<std::size_t>(l.index), right = left + 1;
    if (kept[static_cast<std::size_t>(at[left])] && kept[static_cast<std::size_t>(at[right])]) {
      int rank = 1;
      for (std::size_t p = 1; p < left; ++p)
        if (kept[static_cast<std::size_t>(at[p])]) ++rank;
      out.push_back({l.kind, rank, l.sign});
    }
    std::swap(at[left], at[right]);
  }
  return BraidWord(static_cast<int>(keep.size()), std::move(out));
}

BraidWord random_word(int n, std::size_t length, Alphabet alphabet, std::uint64_t seed) {
  Letters pool;
  for (int i = 1; i < n; ++i) {
    if (alphabet != Alphabet::virtual_) {
      pool.push_back(G::sigma(i, 1));
      pool.push_back(G::sigma(i, -1));
    }
    if (alphabet != Alphabet::classical) pool.push_back(G::rho(i));
  }
  if (pool.empty()) return BraidWord::trivial(n);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  Letters out;
  out.reserve(length);
  for (std::size_t k = 0; k < length; ++k) out.push_back(pool[pick(rng)]);
  return BraidWord(n, std::move(out));
}

} // namespace hbraid
