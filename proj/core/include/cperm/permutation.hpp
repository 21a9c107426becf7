#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cperm {

// A permutation of {1..n}, n >= 1, stored in one-line notation. Positions and
// values are 1-based everywhere in the public surface.
class Permutation {
 public:
  // Throws Error(kInvalidPermutation) unless `values` is a bijection on 1..n.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(values_.size()); }

  // p(i) for 1 <= i <= n. Unchecked.
  int operator()(int position) const noexcept { return values_[position - 1]; }
  int at(int position) const;

  std::span<const int> values() const noexcept { return values_; }

  // Position holding `value`.
  int position_of(int value) const;

  Permutation inverse() const;
  bool is_involution() const;

  std::string to_string() const;  // "(3,1,2)"
  std::string compact() const;    // "312" when n < 10, else the comma form

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<int> values_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

Permutation reversal(const Permutation& p);
Permutation complement(const Permutation& p);

// a ⊖ b: a shifted up by |b|, followed by b.
Permutation direct_difference(const Permutation& a, const Permutation& b);

// All r in 1..n-1 such that p(1..r) is exactly the top r values.
std::vector<int> split_points(const Permutation& p);

bool is_decomposable(const Permutation& p);

// Finest decomposition into ⊖-indecomposable components, left to right.
std::vector<Permutation> decompose(const Permutation& p);

// Fold of direct_difference over a non-empty list.
Permutation direct_difference_fold(std::span<const Permutation> parts);

// Order-isomorphic standardization of distinct values to 1..k.
Permutation standardize(std::span<const int> values);

// All permutations of size n in lexicographic order. Intended for n <= 10.
std::vector<Permutation> all_permutations(int n);

}  // namespace cperm
