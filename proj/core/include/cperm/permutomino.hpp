#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cperm/permutation.hpp"

namespace cperm {

struct Point {
  int x;
  int y;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

// Clockwise boundary encoding over {N, E, S, W}. Construction only checks the
// alphabet; closure, simplicity and the start convention are checked by
// Permutomino::from_boundary_word.
class BoundaryWord {
 public:
  BoundaryWord() = default;
  explicit BoundaryWord(std::string letters);

  const std::string& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  friend bool operator==(const BoundaryWord&, const BoundaryWord&) = default;
  friend auto operator<=>(const BoundaryWord&, const BoundaryWord&) = default;

 private:
  std::string letters_;
};

// Rows and columns are 1-based; cell (c, r) is the unit square
// [c, c+1] x [r, r+1].
class CellGrid {
 public:
  CellGrid() = default;
  CellGrid(int width, int height);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  bool contains(int column, int row) const noexcept;
  void set(int column, int row, bool filled = true);
  std::size_t area() const;

  CellGrid transposed() const;

  friend bool operator==(const CellGrid&, const CellGrid&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> cells_;
};

struct RowInterval {
  int bottom;
  int top;  // inclusive

  friend bool operator==(const RowInterval&, const RowInterval&) = default;
};

enum class ReentrantLabel { kAlpha, kBeta, kGamma, kDelta };

char label_letter(ReentrantLabel label);      // 'a','b','g','d'
const char* label_name(ReentrantLabel label);  // "alpha", ...
std::optional<ReentrantLabel> parse_label(std::string_view text);

struct LabeledPoint {
  Point point;
  ReentrantLabel label;

  friend bool operator==(const LabeledPoint&, const LabeledPoint&) = default;
};

struct BoundaryPoints {
  std::vector<Point> salient;
  std::vector<LabeledPoint> reentrant;
};

struct ClassFlags {
  bool column_convex = false;
  bool row_convex = false;
  bool convex = false;
  bool directed = false;
  bool parallelogram = false;
  bool symmetric_xy = false;

  friend bool operator==(const ClassFlags&, const ClassFlags&) = default;
};

// A permutomino of size n: n-1 rows and columns, bounding box anchored at
// (1,1), exactly one vertical boundary side per abscissa 1..n and one
// horizontal side per ordinate 1..n. Size 1 is the empty permutomino.
class Permutomino {
 public:
  static Permutomino empty();

  // Throws Error with kind kNotClosed, kSelfIntersecting, kNotCanonical or
  // kNotPermutomino. The word must start at the leftmost lowest point with N.
  static Permutomino from_boundary_word(const BoundaryWord& word);

  // Traces the boundary of a cell set and validates it.
  static Permutomino from_cells(const CellGrid& cells);

  // Builds the permutomino whose pi1 vertices, visited clockwise, are
  // `anchors`. Each step p -> q is a vertical move to (p.x, q.y) followed by
  // a horizontal move to q.
  static Permutomino from_anchor_cycle(std::span<const Point> anchors);

  int size() const noexcept { return size_; }
  bool is_empty() const noexcept { return size_ == 1; }

  const BoundaryWord& boundary() const noexcept { return boundary_; }
  // Clockwise from the lowest vertex on abscissa 1; 2n entries.
  std::span<const Point> vertices() const noexcept { return vertices_; }
  const CellGrid& cells() const noexcept { return cells_; }
  const Permutation& pi1() const noexcept { return pi1_; }
  const Permutation& pi2() const noexcept { return pi2_; }

  // Lattice points visited by the boundary word, starting point first.
  std::vector<Point> path() const;

  // Per-column row intervals when every column is connected.
  std::optional<std::vector<RowInterval>> column_intervals() const;

  friend bool operator==(const Permutomino& a, const Permutomino& b) {
    return a.size_ == b.size_ && a.boundary_ == b.boundary_;
  }
  // Listing order: pi1, then boundary word.
  friend std::strong_ordering operator<=>(const Permutomino& a, const Permutomino& b);

 private:
  Permutomino(int size, BoundaryWord boundary, std::vector<Point> vertices,
              CellGrid cells, Permutation pi1, Permutation pi2);

  int size_;
  BoundaryWord boundary_;
  std::vector<Point> vertices_;
  CellGrid cells_;
  Permutation pi1_;
  Permutation pi2_;
};

std::pair<Permutation, Permutation> vertex_permutations(const Permutomino& p);

BoundaryPoints boundary_points(const Permutomino& p);

ClassFlags classify(const Permutomino& p);

// Mirror images re-anchored at (1,1). across_vertical: x -> -x;
// across_horizontal: y -> -y.
Permutomino reflect_across_vertical(const Permutomino& p);
Permutomino reflect_across_horizontal(const Permutomino& p);

// Rotates a closed word so it starts at the lowest-then-leftmost point.
std::string canonical_rotation(std::string_view word);

}  // namespace cperm
