#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "cperm/permutation.hpp"

namespace cperm {

struct IndexedEntry {
  int position;
  int value;

  friend bool operator==(const IndexedEntry&, const IndexedEntry&) = default;
};

// Subsequence of a permutation that remembers where each entry came from.
// Positions are strictly increasing.
class IndexedSubsequence {
 public:
  IndexedSubsequence() = default;
  explicit IndexedSubsequence(std::vector<IndexedEntry> entries);

  std::span<const IndexedEntry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const IndexedEntry& operator[](std::size_t i) const { return entries_[i]; }

  std::vector<int> values() const;
  std::vector<int> positions() const;
  bool contains_position(int position) const;

  friend bool operator==(const IndexedSubsequence&,
                         const IndexedSubsequence&) = default;

 private:
  std::vector<IndexedEntry> entries_;
};

enum class ExtremaKind { kLeftRightMax, kRightLeftMax, kLeftRightMin, kRightLeftMin };

IndexedSubsequence extrema(const Permutation& p, ExtremaKind kind);

// mu: left-right maxima followed by right-left maxima (n once).
// sigma: positions 1 and n, plus every position whose value is not in mu.
struct MuSigma {
  IndexedSubsequence mu;
  IndexedSubsequence sigma;

  // Index into mu.entries() of the entry with value n.
  std::size_t mu_peak() const;
};

MuSigma mu_sigma(const Permutation& p);

// Strictly decreasing then strictly increasing; either run may be empty.
bool is_lower_unimodal(std::span<const int> s);
// Strictly increasing then strictly decreasing.
bool is_upper_unimodal(std::span<const int> s);

// Indices (i, j, k) into `s` with i < j < k and s[i] < s[j] > s[k], if any.
// Such a triple exists iff `s` is not lower unimodal.
std::optional<std::array<std::size_t, 3>> lower_unimodal_violation(
    std::span<const int> s);

bool contains_pattern(const Permutation& p, const Permutation& pattern);

// The sixteen length-5 patterns whose avoidance characterizes square
// (convex) permutations.
const std::array<Permutation, 16>& square_forbidden_patterns();

bool is_square_by_sigma(const Permutation& p);
bool is_square_by_patterns(const Permutation& p);

// Square test via sigma; the pattern route is exposed above for cross-checks.
bool is_square(const Permutation& p);

}  // namespace cperm
