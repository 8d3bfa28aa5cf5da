#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hbraid {

// Malformed textual input. `position` is the 0-based character offset of the
// offending token.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace hbraid
