#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cperm/permutation.hpp"
#include "cperm/permutomino.hpp"

namespace cperm {

using BigInt = boost::multiprecision::cpp_int;

// CPERM_WORKERS if set to a positive integer, else hardware concurrency.
int default_workers();

struct EnumerationOptions {
  int workers = 0;  // 0: default_workers()
  bool list = false;
};

// Folds `visit(acc, p)` over S_n. The space is split by the value of p(1);
// partial results are merged in that order, so the result does not depend
// on the worker count.
template <typename Acc, typename Visit, typename Merge>
Acc reduce_permutations(int n, int workers, Visit visit, Merge merge) {
  if (workers <= 0) workers = default_workers();
  std::vector<Acc> partial(static_cast<std::size_t>(n));
  std::atomic<int> next{1};
  auto run = [&] {
    for (int first; (first = next.fetch_add(1)) <= n;) {
      std::vector<int> v;
      v.reserve(n);
      v.push_back(first);
      for (int x = 1; x <= n; ++x) {
        if (x != first) v.push_back(x);
      }
      Acc& acc = partial[first - 1];
      do {
        visit(acc, Permutation(v));
      } while (std::next_permutation(v.begin() + 1, v.end()));
    }
  };
  const int threads = std::min(workers, n);
  if (threads <= 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(run);
  }
  Acc total{};
  for (Acc& a : partial) merge(total, std::move(a));
  return total;
}

struct CtildeEnumeration {
  BigInt total;
  std::map<int, BigInt> by_free_fixed_points;
  std::vector<Permutation> members;  // filled when listing, lexicographic
};

CtildeEnumeration enumerate_ctilde(int n, const EnumerationOptions& opts = {});

enum class ConvexMethod { kFibers, kIntervals };

struct PermutominoEnumeration {
  BigInt count;
  std::vector<Permutomino> listing;  // filled when listing, sorted
};

PermutominoEnumeration enumerate_convex_permutominoes(int n, ConvexMethod method,
                                                      const EnumerationOptions& opts = {});

struct SquareEnumeration {
  BigInt square;                        // Q_n
  BigInt decomposable;                  // B_n
  std::map<int, BigInt> by_components;  // k -> B_{n,k}, k >= 2
  std::vector<Permutation> listing;     // square permutations when listing
};

SquareEnumeration enumerate_square(int n, const EnumerationOptions& opts = {});

enum class IntervalFamily { kColumnConvex, kConvex };

// Brute-force oracle: stacks of column intervals in the (n-1)x(n-1) box,
// adjacent columns overlapping (and for kConvex, tops unimodal and bottoms
// anti-unimodal), kept when they validate as permutominoes. Sorted.
std::vector<Permutomino> interval_permutominoes(int n, IntervalFamily family);

// Convex permutominoes with a transpose-invariant cell set, via the oracle.
BigInt enumerate_symmetric(int n);

// Throws Error(kSizeTooLarge) when n > bound.
std::vector<Permutomino> enumerate_column_convex_oracle(int n, int bound = 6);

std::vector<Permutomino> directed_convex_permutominoes(int n);
std::vector<Permutomino> parallelogram_permutominoes(int n);

// (class name, size) -> count.
class CountTable {
 public:
  void set(const std::string& name, int size, BigInt count);
  const BigInt& get(const std::string& name, int size) const;
  bool has(const std::string& name, int size) const;
  const std::map<std::pair<std::string, int>, BigInt>& entries() const { return counts_; }

 private:
  std::map<std::pair<std::string, int>, BigInt> counts_;
};

}  // namespace cperm
