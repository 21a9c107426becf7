#include "cperm/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "cperm/error.hpp"

namespace cperm {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidPermutation: return "InvalidPermutation";
    case ErrorKind::kNotClosed: return "NotClosed";
    case ErrorKind::kSelfIntersecting: return "SelfIntersecting";
    case ErrorKind::kNotCanonical: return "NotCanonical";
    case ErrorKind::kNotPermutomino: return "NotPermutomino";
    case ErrorKind::kNotConvex: return "NotConvex";
    case ErrorKind::kInvalidMatrix: return "InvalidMatrix";
    case ErrorKind::kNotAssociated: return "NotAssociated";
    case ErrorKind::kInvalidSequence: return "InvalidSequence";
    case ErrorKind::kNotSquare: return "NotSquare";
    case ErrorKind::kIndecomposable: return "Indecomposable";
    case ErrorKind::kSizeTooLarge: return "SizeTooLarge";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kNonIntegerResult: return "NonIntegerResult";
  }
  return "Unknown";
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  if (n < 1) throw Error(ErrorKind::kInvalidPermutation, "empty permutation");
  std::vector<bool> seen(n + 1, false);
  for (int i = 0; i < n; ++i) {
    const int v = values_[i];
    if (v < 1 || v > n) {
      throw Error(ErrorKind::kInvalidPermutation,
                  "value " + std::to_string(v) + " at position " +
                      std::to_string(i + 1) + " outside 1.." + std::to_string(n));
    }
    if (seen[v]) {
      throw Error(ErrorKind::kInvalidPermutation,
                  "value " + std::to_string(v) + " repeated at position " +
                      std::to_string(i + 1));
    }
    seen[v] = true;
  }
}

Permutation::Permutation(std::initializer_list<int> values)
    : Permutation(std::vector<int>(values)) {}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

int Permutation::at(int position) const {
  if (position < 1 || position > size()) {
    throw Error(ErrorKind::kOutOfRange, "position " + std::to_string(position));
  }
  return values_[position - 1];
}

int Permutation::position_of(int value) const {
  auto it = std::find(values_.begin(), values_.end(), value);
  if (it == values_.end()) {
    throw Error(ErrorKind::kOutOfRange, "value " + std::to_string(value));
  }
  return static_cast<int>(it - values_.begin()) + 1;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (int i = 1; i <= size(); ++i) inv[(*this)(i)-1] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_involution() const {
  for (int i = 1; i <= size(); ++i) {
    if ((*this)((*this)(i)) != i) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ',';
    os << values_[i];
  }
  os << ')';
  return os.str();
}

std::string Permutation::compact() const {
  if (size() >= 10) return to_string();
  std::string s;
  for (int v : values_) s.push_back(static_cast<char>('0' + v));
  return s;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.to_string();
}

Permutation reversal(const Permutation& p) {
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return Permutation(std::move(v));
}

Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> v;
  v.reserve(n);
  for (int x : p.values()) v.push_back(n + 1 - x);
  return Permutation(std::move(v));
}

Permutation direct_difference(const Permutation& a, const Permutation& b) {
  const int shift = b.size();
  std::vector<int> v;
  v.reserve(a.size() + b.size());
  for (int x : a.values()) v.push_back(x + shift);
  v.insert(v.end(), b.values().begin(), b.values().end());
  return Permutation(std::move(v));
}

std::vector<int> split_points(const Permutation& p) {
  const int n = p.size();
  std::vector<int> splits;
  int prefix_min = n + 1;
  for (int r = 1; r < n; ++r) {
    prefix_min = std::min(prefix_min, p(r));
    // r distinct values all >= n-r+1 are exactly the top r values.
    if (prefix_min == n - r + 1) splits.push_back(r);
  }
  return splits;
}

bool is_decomposable(const Permutation& p) { return !split_points(p).empty(); }

std::vector<Permutation> decompose(const Permutation& p) {
  std::vector<int> cuts = split_points(p);
  cuts.push_back(p.size());
  std::vector<Permutation> parts;
  parts.reserve(cuts.size());
  int begin = 0;
  for (int end : cuts) {
    std::vector<int> block(p.values().begin() + begin, p.values().begin() + end);
    const int low = *std::min_element(block.begin(), block.end());
    for (int& v : block) v -= low - 1;
    parts.emplace_back(std::move(block));
    begin = end;
  }
  return parts;
}

Permutation direct_difference_fold(std::span<const Permutation> parts) {
  if (parts.empty()) {
    throw Error(ErrorKind::kInvalidPermutation, "fold of an empty list");
  }
  Permutation acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) {
    acc = direct_difference(parts[i], acc);
  }
  return acc;
}

Permutation standardize(std::span<const int> values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return values[a] < values[b]; });
  std::vector<int> out(values.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    out[order[rank]] = static_cast<int>(rank) + 1;
  }
  return Permutation(std::move(out));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace cperm
