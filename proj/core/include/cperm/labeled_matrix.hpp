#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cperm/permutomino.hpp"

namespace cperm {

// Reentrant points of a convex permutomino of size n: a permutation matrix
// on the interior coordinates 2..n-1 whose entries carry a label.
struct LabeledMatrix {
  int dim = 0;                       // size - 2 (0 for sizes 1 and 2)
  std::vector<LabeledPoint> points;  // sorted by abscissa

  friend bool operator==(const LabeledMatrix&, const LabeledMatrix&) = default;
};

// Name of the first violated structural condition for a permutomino of
// `size`, or nullopt if the matrix satisfies all of them:
//   "permutation-matrix", "x_alpha<x_beta", "x_delta<x_gamma",
//   "y_alpha>y_delta", "y_beta>y_gamma", "alpha-not-below-right-of-gamma",
//   "beta-not-below-left-of-delta", "alpha-increasing", "gamma-increasing",
//   "beta-decreasing", "delta-decreasing", "z1-alpha", "z1-gamma",
//   "z2-beta", "z2-delta".
std::optional<std::string> matrix_violation(const LabeledMatrix& m, int size);

// Throws Error(kNotConvex) for non-convex input.
LabeledMatrix reentrant_matrix(const Permutomino& p);

// Inverse of reentrant_matrix. Throws Error(kInvalidMatrix) naming the
// violated condition, or when the points do not bound a convex permutomino.
Permutomino permutomino_from_matrix(const LabeledMatrix& m, int size);

}  // namespace cperm
