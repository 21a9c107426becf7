#include "cperm/enumeration.hpp"

#include <cstdlib>

#include "cperm/association.hpp"
#include "cperm/error.hpp"
#include "cperm/unimodal.hpp"

namespace cperm {

int default_workers() {
  if (const char* env = std::getenv("CPERM_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct CtildeAcc {
  BigInt total;
  std::map<int, BigInt> by_k;
  std::vector<Permutation> members;
};

}  // namespace

CtildeEnumeration enumerate_ctilde(int n, const EnumerationOptions& opts) {
  auto acc = reduce_permutations<CtildeAcc>(
      n, opts.workers,
      [&](CtildeAcc& a, const Permutation& p) {
        if (!is_associated(p).member()) return;
        a.total += 1;
        a.by_k[static_cast<int>(free_fixed_points(p).points.size())] += 1;
        if (opts.list) a.members.push_back(p);
      },
      [](CtildeAcc& into, CtildeAcc&& from) {
        into.total += from.total;
        for (auto& [k, c] : from.by_k) into.by_k[k] += c;
        into.members.insert(into.members.end(), from.members.begin(), from.members.end());
      });
  return {acc.total, acc.by_k, std::move(acc.members)};
}

namespace {

struct FiberAcc {
  BigInt count;
  std::vector<Permutomino> listing;
};

}  // namespace

PermutominoEnumeration enumerate_convex_permutominoes(int n, ConvexMethod method,
                                                      const EnumerationOptions& opts) {
  if (method == ConvexMethod::kIntervals) {
    auto all = interval_permutominoes(n, IntervalFamily::kConvex);
    PermutominoEnumeration out{BigInt(all.size()), {}};
    if (opts.list) out.listing = std::move(all);
    return out;
  }
  auto acc = reduce_permutations<FiberAcc>(
      n, opts.workers,
      [&](FiberAcc& a, const Permutation& p) {
        if (!is_associated(p).member()) return;
        if (opts.list) {
          auto f = fiber(p);
          a.count += f.size();
          a.listing.insert(a.listing.end(), f.begin(), f.end());
        } else {
          a.count += BigInt(1) << free_fixed_points(p).points.size();
        }
      },
      [](FiberAcc& into, FiberAcc&& from) {
        into.count += from.count;
        into.listing.insert(into.listing.end(), from.listing.begin(), from.listing.end());
      });
  return {acc.count, std::move(acc.listing)};
}

namespace {

struct SquareAcc {
  BigInt square;
  BigInt decomposable;
  std::map<int, BigInt> by_k;
  std::vector<Permutation> listing;
};

}  // namespace

SquareEnumeration enumerate_square(int n, const EnumerationOptions& opts) {
  auto acc = reduce_permutations<SquareAcc>(
      n, opts.workers,
      [&](SquareAcc& a, const Permutation& p) {
        if (!is_square(p)) return;
        a.square += 1;
        const int k = static_cast<int>(split_points(p).size()) + 1;
        if (k >= 2) {
          a.decomposable += 1;
          a.by_k[k] += 1;
        }
        if (opts.list) a.listing.push_back(p);
      },
      [](SquareAcc& into, SquareAcc&& from) {
        into.square += from.square;
        into.decomposable += from.decomposable;
        for (auto& [k, c] : from.by_k) into.by_k[k] += c;
        into.listing.insert(into.listing.end(), from.listing.begin(), from.listing.end());
      });
  return {acc.square, acc.decomposable, acc.by_k, std::move(acc.listing)};
}

namespace {

class IntervalSearch {
 public:
  IntervalSearch(int n, IntervalFamily family)
      : n_(n), w_(n - 1), convex_(family == IntervalFamily::kConvex) {}

  std::vector<Permutomino> run() {
    for (int a = 1; a <= w_; ++a) {
      for (int b = a; b <= w_; ++b) {
        stack_.push_back({a, b});
        extend(false, false);
        stack_.pop_back();
      }
    }
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  // top_fell: the top has already decreased; bottom_rose: the bottom has
  // already increased. Convex shapes may not reverse either trend.
  void extend(bool top_fell, bool bottom_rose) {
    if (static_cast<int>(stack_.size()) == w_) {
      finish();
      return;
    }
    const RowInterval prev = stack_.back();
    // Neighbouring columns of a permutomino share exactly one endpoint, so
    // the boundary has a single vertical side on the abscissa between them.
    for (int top = prev.bottom; top <= w_; ++top) {
      if (top == prev.top) continue;
      const bool fell = top_fell || top < prev.top;
      if (convex_ && top_fell && top > prev.top) continue;
      stack_.push_back({prev.bottom, top});
      extend(fell, bottom_rose);
      stack_.pop_back();
    }
    for (int bottom = 1; bottom <= prev.top; ++bottom) {
      if (bottom == prev.bottom) continue;
      const bool rose = bottom_rose || bottom > prev.bottom;
      if (convex_ && bottom_rose && bottom < prev.bottom) continue;
      stack_.push_back({bottom, prev.top});
      extend(top_fell, rose);
      stack_.pop_back();
    }
  }

  void finish() {
    int lo = w_ + 1, hi = 0;
    for (const auto& iv : stack_) {
      lo = std::min(lo, iv.bottom);
      hi = std::max(hi, iv.top);
    }
    if (lo != 1 || hi != w_) return;
    // One horizontal side per ordinate: the columns with a boundary edge at
    // height y form a single non-empty run.
    for (int y = 1; y <= n_; ++y) {
      int runs = 0;
      bool prev = false;
      for (const auto& iv : stack_) {
        const bool edge = iv.bottom == y || iv.top + 1 == y;
        if (edge && !prev) ++runs;
        prev = edge;
      }
      if (runs != 1) return;
    }
    CellGrid grid(w_, w_);
    for (int c = 1; c <= w_; ++c) {
      for (int r = stack_[c - 1].bottom; r <= stack_[c - 1].top; ++r) grid.set(c, r);
    }
    try {
      found_.push_back(Permutomino::from_cells(grid));
    } catch (const Error&) {
      // Not a permutomino after all; the oracle keeps only validated shapes.
    }
  }

  int n_;
  int w_;
  bool convex_;
  std::vector<RowInterval> stack_;
  std::vector<Permutomino> found_;
};

}  // namespace

std::vector<Permutomino> interval_permutominoes(int n, IntervalFamily family) {
  if (n < 1) throw Error(ErrorKind::kOutOfRange, "size must be >= 1");
  if (n == 1) return {Permutomino::empty()};
  return IntervalSearch(n, family).run();
}

BigInt enumerate_symmetric(int n) {
  BigInt count;
  for (const auto& p : interval_permutominoes(n, IntervalFamily::kConvex)) {
    if (classify(p).symmetric_xy) count += 1;
  }
  return count;
}

std::vector<Permutomino> enumerate_column_convex_oracle(int n, int bound) {
  if (n > bound) {
    throw Error(ErrorKind::kSizeTooLarge,
                "column-convex oracle bound is " + std::to_string(bound));
  }
  return interval_permutominoes(n, IntervalFamily::kColumnConvex);
}

std::vector<Permutomino> directed_convex_permutominoes(int n) {
  std::vector<Permutomino> out;
  for (auto& p : interval_permutominoes(n, IntervalFamily::kConvex)) {
    if (classify(p).directed) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Permutomino> parallelogram_permutominoes(int n) {
  std::vector<Permutomino> out;
  for (auto& p : interval_permutominoes(n, IntervalFamily::kConvex)) {
    if (classify(p).parallelogram) out.push_back(std::move(p));
  }
  return out;
}

void CountTable::set(const std::string& name, int size, BigInt count) {
  if (count < 0) throw Error(ErrorKind::kOutOfRange, "negative count for " + name);
  counts_[{name, size}] = std::move(count);
}

const BigInt& CountTable::get(const std::string& name, int size) const {
  auto it = counts_.find({name, size});
  if (it == counts_.end()) {
    throw Error(ErrorKind::kOutOfRange, name + " at size " + std::to_string(size));
  }
  return it->second;
}

bool CountTable::has(const std::string& name, int size) const {
  return counts_.count({name, size}) != 0;
}

}  // namespace cperm
