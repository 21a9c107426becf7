#pragma once

#include <stdexcept>
#include <string>

namespace cperm {

enum class ErrorKind {
  kInvalidPermutation,
  kNotClosed,
  kSelfIntersecting,
  kNotCanonical,
  kNotPermutomino,
  kNotConvex,
  kInvalidMatrix,
  kNotAssociated,
  kInvalidSequence,
  kNotSquare,
  kIndecomposable,
  kSizeTooLarge,
  kOutOfRange,
  kNonIntegerResult,
};

const char* to_string(ErrorKind kind);

// Single exception type for the library; `kind()` is what callers branch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cperm
