#pragma once

#include <vector>

#include "cperm/permutation.hpp"
#include "cperm/permutomino.hpp"

namespace cperm {

// (P_1, ..., P_k), k >= 2: directed convex ends, parallelogram middle parts,
// any of them possibly the empty permutomino.
class PermutominoSequence {
 public:
  // Throws Error(kInvalidSequence) naming the broken constraint.
  explicit PermutominoSequence(std::vector<Permutomino> parts);

  const std::vector<Permutomino>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int total_size() const;

  friend bool operator==(const PermutominoSequence&, const PermutominoSequence&) = default;
  friend auto operator<=>(const PermutominoSequence& a, const PermutominoSequence& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<Permutomino> parts_;
};

// delta_i = reversal(pi2(P_i)) for i < k, delta_k = complement(pi2(P_k)),
// (1) for empty parts; returns delta_1 ⊖ ... ⊖ delta_k.
Permutation sequence_to_permutation(const PermutominoSequence& s);

// Inverse. Throws Error(kNotSquare) or Error(kIndecomposable).
PermutominoSequence permutation_to_sequence(const Permutation& p);

// Per-part component, as used by both directions.
Permutation component_of_part(const Permutomino& part, bool last);
Permutomino part_of_component(const Permutation& component, bool first, bool last);

}  // namespace cperm
