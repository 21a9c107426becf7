#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cperm/permutation.hpp"

namespace cperm::cli {

// `position` is the 0-based byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("at offset " + std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Whitespace- or comma-separated 1-based integers, e.g. "2 1 3" or "2,1,3".
Permutation parse_permutation(std::string_view text);

}  // namespace cperm::cli
