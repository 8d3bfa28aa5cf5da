#include "hbraid/group_word.hpp"

#include <cctype>
#include <stdexcept>

#include "hbraid/errors.hpp"

namespace hbraid {

GroupWord::GroupWord(int strands, std::vector<GroupLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 0) throw std::invalid_argument("negative strand count");
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index > strands_)
      throw std::invalid_argument("generator x" + std::to_string(l.index) + " out of range for " +
                                  std::to_string(strands_) + " strands");
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be ±1");
  }
}

GroupWord GroupWord::generator(int strands, int index, int sign) {
  return GroupWord(strands, {{index, sign}});
}

GroupWord GroupWord::ordered_product(int strands) {
  std::vector<GroupLetter> letters;
  for (int i = 1; i <= strands; ++i) letters.push_back({i, 1});
  return GroupWord(strands, std::move(letters));
}

std::string GroupWord::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += ' ';
    out += 'x';
    out += std::to_string(letters_[k].index);
    if (letters_[k].sign < 0) out += '\'';
  }
  return out;
}

GroupWord parse_group_word(std::string_view text, int strands) {
  std::vector<GroupLetter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    if (text[pos] != 'x')
      throw ParseError(std::string("unexpected character '") + text[pos] + "'", start);
    const std::size_t digits = ++pos;
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
    if (index < 1 || index > strands)
      throw ParseError("generator x" + std::to_string(index) + " out of range for " +
                           std::to_string(strands) + " strands",
                       start);
    letters.push_back({index, sign});
  }
  return GroupWord(strands, std::move(letters));
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("strand count mismatch");
  std::vector<GroupLetter> letters(a.letters().begin(), a.letters().end());
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return GroupWord(a.strands(), std::move(letters));
}

GroupWord word_inverse(const GroupWord& w) {
  std::vector<GroupLetter> letters;
  letters.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    letters.push_back(it->inverse());
  return GroupWord(w.strands(), std::move(letters));
}

GroupWord free_reduce(const GroupWord& w) {
  std::vector<GroupLetter> stack;
  stack.reserve(w.size());
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return GroupWord(w.strands(), std::move(stack));
}

GroupWord commutator(const GroupWord& a, const GroupWord& b) {
  return a * b * word_inverse(a) * word_inverse(b);
}

GroupWord substitute(const GroupWord& w, std::span<const GroupWord> images) {
  std::vector<GroupLetter> out;
  int strands = -1;
  for (const auto& img : images) {
    if (strands >= 0 && img.strands() != strands)
      throw std::invalid_argument("images have inconsistent strand counts");
    strands = img.strands();
  }
  for (const auto& l : w.letters()) {
    if (static_cast<std::size_t>(l.index) > images.size())
      throw std::invalid_argument("no image for x" + std::to_string(l.index));
    const auto& img = images[static_cast<std::size_t>(l.index - 1)];
    if (l.sign > 0) {
      out.insert(out.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
        out.push_back(it->inverse());
    }
  }
  return GroupWord(strands < 0 ? w.strands() : strands, std::move(out));
}

ReducedPolynomial magnus(const GroupWord& w) {
  auto p = ReducedPolynomial::one(w.strands());
  for (const auto& l : w.letters()) p.multiply_unipotent(l.index, l.sign);
  return p;
}

bool rf_equal(const GroupWord& a, const GroupWord& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("strand count mismatch");
  if (free_reduce(a) == free_reduce(b)) return true;
  return magnus(a) == magnus(b);
}

} // namespace hbraid
