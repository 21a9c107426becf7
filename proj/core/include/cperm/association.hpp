#pragma once

#include <array>
#include <variant>
#include <vector>

#include "cperm/labeled_matrix.hpp"
#include "cperm/permutation.hpp"
#include "cperm/permutomino.hpp"

namespace cperm {

struct MembershipOk {};
// Positions (1-based) i < j < k in sigma with sigma(i) < sigma(j) > sigma(k).
struct SigmaNotUnimodal {
  std::array<int, 3> positions;
};
// Smallest r with p = theta ⊖ theta', |theta| = r.
struct Decomposable {
  int split;
};

using MembershipReason = std::variant<MembershipOk, SigmaNotUnimodal, Decomposable>;

struct MembershipVerdict {
  MembershipReason reason;

  bool member() const { return std::holds_alternative<MembershipOk>(reason); }
};

// Is p = pi1(P) for some convex permutomino P of size |p|?
MembershipVerdict is_associated(const Permutation& p);

// Is p = pi2(P) for some convex permutomino P?
bool is_associated_prime(const Permutation& p);

// Fixed points on the strictly increasing run of mu, excluding 1 and n.
struct FreeFixedPoints {
  std::vector<int> points;  // ascending
};

// Throws Error(kNotAssociated).
FreeFixedPoints free_fixed_points(const Permutation& p);

// The fiber representative with every free fixed point on the alpha path.
// Throws Error(kNotAssociated).
Permutomino build_canonical(const Permutation& p);

// All convex permutominoes with pi1 = p, sorted; 2^|F(p)| of them.
// Throws Error(kNotAssociated).
std::vector<Permutomino> fiber(const Permutation& p);

}  // namespace cperm
