#include <gtest/gtest.h>

#include "cperm/association.hpp"
#include "cperm/enumeration.hpp"
#include "cperm/error.hpp"
#include "cperm/permutomino.hpp"
#include "oracles.hpp"

namespace cperm {
namespace {

Permutomino word(const char* w) { return Permutomino::from_boundary_word(BoundaryWord(w)); }

ErrorKind kind_of(const char* w) {
  try {
    word(w);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << w << " was accepted";
  return ErrorKind::kOutOfRange;
}

oracle::Cells cells_of(const Permutomino& p) {
  oracle::Cells out;
  const CellGrid& g = p.cells();
  for (int c = 1; c <= g.width(); ++c) {
    for (int r = 1; r <= g.height(); ++r) {
      if (g.contains(c, r)) out.insert({c, r});
    }
  }
  return out;
}

Permutomino from_oracle_cells(const oracle::Cells& cells, int n) {
  CellGrid g(n - 1, n - 1);
  for (auto [c, r] : cells) g.set(c, r);
  return Permutomino::from_cells(g);
}

TEST(BoundaryWord, AlphabetIsChecked) {
  EXPECT_THROW(BoundaryWord("NEXW"), Error);
  EXPECT_NO_THROW(BoundaryWord("NESW"));
}

TEST(FromBoundaryWord, SingleCell) {
  const Permutomino p = word("NESW");
  EXPECT_EQ(p.size(), 2);
  EXPECT_EQ(p.pi1(), (Permutation{1, 2}));
  EXPECT_EQ(p.pi2(), (Permutation{2, 1}));
  EXPECT_EQ(p.cells().area(), 1u);
}

TEST(FromBoundaryWord, LShape) {
  const Permutomino p = word("NENESSWW");
  EXPECT_EQ(p.size(), 3);
  EXPECT_EQ(p.pi1(), (Permutation{1, 2, 3}));
  EXPECT_EQ(p.pi2(), (Permutation{2, 3, 1}));
  const std::vector<Point> path = p.path();
  const std::vector<Point> want{{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 2}, {3, 1}, {2, 1}};
  EXPECT_EQ(path, want);
  const std::vector<Point> corners(p.vertices().begin(), p.vertices().end());
  const std::vector<Point> want_corners{{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 1}};
  EXPECT_EQ(corners, want_corners);
}

TEST(FromBoundaryWord, Errors) {
  EXPECT_EQ(kind_of("NNEESSWW"), ErrorKind::kNotPermutomino);
  EXPECT_EQ(kind_of("NNE"), ErrorKind::kNotClosed);
  EXPECT_EQ(kind_of("NENW"), ErrorKind::kNotClosed);
  EXPECT_EQ(kind_of("NS"), ErrorKind::kSelfIntersecting);
  // Figure-eight through (2,2).
  EXPECT_EQ(kind_of("NENESWSW"), ErrorKind::kSelfIntersecting);
  EXPECT_EQ(kind_of("ESWN"), ErrorKind::kNotCanonical);
  EXPECT_EQ(kind_of("ESSWWNEN"), ErrorKind::kNotCanonical);
  EXPECT_THROW(word(""), Error);
}

TEST(FromBoundaryWord, NamesTheBadCoordinate) {
  try {
    word("NNEESSWW");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("abscissa 2"), std::string::npos) << e.what();
  }
}

TEST(VertexPermutations, Examples) {
  EXPECT_EQ(vertex_permutations(word("NESW")),
            std::make_pair(Permutation{1, 2}, Permutation{2, 1}));
  EXPECT_EQ(vertex_permutations(word("NENESSWW")),
            std::make_pair(Permutation{1, 2, 3}, Permutation{2, 3, 1}));
  const Permutomino gamma = word("NNEESWSW");
  EXPECT_EQ(vertex_permutations(gamma), std::make_pair(Permutation{1, 2, 3}, Permutation{3, 1, 2}));
  ASSERT_EQ(boundary_points(gamma).reentrant.size(), 1u);
  EXPECT_EQ(boundary_points(gamma).reentrant[0].label, ReentrantLabel::kGamma);
}

TEST(EmptyPermutomino, Conventions) {
  const Permutomino e = Permutomino::empty();
  EXPECT_EQ(e.size(), 1);
  EXPECT_TRUE(e.is_empty());
  EXPECT_TRUE(e.boundary().empty());
  EXPECT_EQ(vertex_permutations(e), std::make_pair(Permutation{1}, Permutation{1}));
  EXPECT_EQ(classify(e), (ClassFlags{true, true, true, true, true, true}));
}

TEST(BoundaryPoints, Examples) {
  const auto cell = boundary_points(word("NESW"));
  EXPECT_EQ(cell.salient.size(), 4u);
  EXPECT_TRUE(cell.reentrant.empty());
  const auto l = boundary_points(word("NENESSWW"));
  EXPECT_EQ(l.salient.size(), 5u);
  ASSERT_EQ(l.reentrant.size(), 1u);
  EXPECT_EQ(l.reentrant[0], (LabeledPoint{{2, 2}, ReentrantLabel::kAlpha}));
}

TEST(Labels, RoundTripNames) {
  for (auto l : {ReentrantLabel::kAlpha, ReentrantLabel::kBeta, ReentrantLabel::kGamma,
                 ReentrantLabel::kDelta}) {
    EXPECT_EQ(parse_label(label_name(l)), l);
    EXPECT_EQ(parse_label(std::string(1, label_letter(l))), l);
  }
  EXPECT_FALSE(parse_label("epsilon").has_value());
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(word("NENESSWW")), (ClassFlags{true, true, true, true, true, false}));
  EXPECT_EQ(classify(word("NESW")), (ClassFlags{true, true, true, true, true, true}));
  const Permutomino sym = build_canonical(Permutation{3, 2, 1, 7, 6, 5, 4});
  EXPECT_TRUE(classify(sym).symmetric_xy);
  EXPECT_TRUE(classify(sym).convex);
}

TEST(CanonicalRotation, StartsAtLowestLeftmostPoint) {
  EXPECT_EQ(canonical_rotation("ESWN"), "NESW");
  EXPECT_EQ(canonical_rotation("SWWNENES"), "NENESSWW");
  EXPECT_EQ(canonical_rotation("NENESSWW"), "NENESSWW");
}

// Ground truth from the cell-subset oracle, which knows nothing about
// boundary words.
class BruteForceSizes : public ::testing::TestWithParam<int> {};

TEST_P(BruteForceSizes, CellOracleAgreesWithValidator) {
  const int n = GetParam();
  const auto brute = oracle::all_permutomino_cells(n);
  std::set<oracle::Cells> brute_set(brute.begin(), brute.end());

  // Every surviving subset validates, and re-encodes to a word that parses
  // back to the same cells.
  std::set<oracle::Cells> convex, column_convex;
  for (const auto& cells : brute) {
    const Permutomino p = from_oracle_cells(cells, n);
    EXPECT_EQ(cells_of(p), cells);
    EXPECT_EQ(Permutomino::from_boundary_word(p.boundary()), p);
    if (oracle::cells_convex(cells, n)) convex.insert(cells);
    if (classify(p).column_convex) column_convex.insert(cells);
  }

  // No other subset of the box validates.
  const int m = n - 1;
  std::size_t accepted = 0;
  for (unsigned mask = 1; mask < (1u << (m * m)); ++mask) {
    CellGrid g(m, m);
    for (int i = 0; i < m * m; ++i) {
      if (mask & (1u << i)) g.set(i % m + 1, i / m + 1);
    }
    try {
      // Smaller shapes placed inside the box validate at their own size.
      if (Permutomino::from_cells(g).size() == n) ++accepted;
    } catch (const Error&) {
    }
  }
  EXPECT_EQ(accepted, brute.size());

  std::set<oracle::Cells> intervals_convex, intervals_column;
  for (const auto& p : interval_permutominoes(n, IntervalFamily::kConvex)) intervals_convex.insert(cells_of(p));
  for (const auto& p : interval_permutominoes(n, IntervalFamily::kColumnConvex)) {
    intervals_column.insert(cells_of(p));
  }
  EXPECT_EQ(intervals_convex, convex);
  EXPECT_EQ(intervals_column, column_convex);
}

TEST_P(BruteForceSizes, VertexPermutationsReadTheVerticalSides) {
  const int n = GetParam();
  for (const auto& cells : oracle::all_permutomino_cells(n)) {
    const Permutomino p = from_oracle_cells(cells, n);
    for (int x = 1; x <= n; ++x) {
      const auto [lo, hi] = oracle::vertical_side(cells, n, x);
      const int a = p.pi1()(x), b = p.pi2()(x);
      ASSERT_EQ(std::make_pair(std::min(a, b), std::max(a, b)), std::make_pair(lo, hi)) << p.boundary().letters() << " x=" << x;
    }
  }
}

// Frozen from the cell-subset oracle.
TEST(BruteForce, PermutominoCounts) {
  const std::vector<std::size_t> want{1, 4, 26, 240};
  for (int n = 2; n <= 5; ++n) EXPECT_EQ(oracle::all_permutomino_cells(n).size(), want[n - 2]) << n;
}

INSTANTIATE_TEST_SUITE_P(Sizes, BruteForceSizes, ::testing::Values(2, 3, 4, 5));

class ConvexSizes : public ::testing::TestWithParam<int> {};

TEST_P(ConvexSizes, StructuralInvariants) {
  const int n = GetParam();
  for (const auto& p : interval_permutominoes(n, IntervalFamily::kConvex)) {
    const auto bp = boundary_points(p);
    ASSERT_EQ(static_cast<int>(bp.salient.size()) - static_cast<int>(bp.reentrant.size()), 4);
    ASSERT_EQ(static_cast<int>(p.boundary().length()), 4 * (n - 1));
    ASSERT_EQ(static_cast<int>(bp.salient.size()), n + 2);
    ASSERT_EQ(static_cast<int>(bp.reentrant.size()), n - 2);
    ASSERT_EQ(static_cast<int>(p.vertices().size()), 2 * n);
    for (int i = 1; i <= n; ++i) ASSERT_NE(p.pi1()(i), p.pi2()(i));
    ASSERT_LT(p.pi1()(1), p.pi2()(1));
    ASSERT_GT(p.pi1()(n), p.pi2()(n));
    const ClassFlags f = classify(p);
    ASSERT_TRUE(f.convex && f.row_convex && f.column_convex);
    if (f.parallelogram) ASSERT_TRUE(f.directed);
    if (f.directed) ASSERT_TRUE(f.convex);
    if (f.symmetric_xy) {
      ASSERT_TRUE(p.pi1().is_involution());
      ASSERT_TRUE(p.pi2().is_involution());
    }
  }
}

TEST_P(ConvexSizes, ReflectionsMatchReversalAndComplementOfPi2) {
  const int n = GetParam();
  for (const auto& p : interval_permutominoes(n, IntervalFamily::kConvex)) {
    const Permutomino v = reflect_across_vertical(p);
    const Permutomino h = reflect_across_horizontal(p);
    ASSERT_EQ(v.pi1(), reversal(p.pi2()));
    ASSERT_EQ(h.pi1(), complement(p.pi2()));
    ASSERT_EQ(reflect_across_vertical(v), p);
    ASSERT_EQ(reflect_across_horizontal(h), p);
    ASSERT_EQ(v.cells().area(), p.cells().area());
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, ConvexSizes, ::testing::Values(2, 3, 4, 5, 6));

TEST(Permutomino, AllValidatedShapesSatisfySalientMinusReentrant) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& p : interval_permutominoes(n, IntervalFamily::kColumnConvex)) {
      const auto bp = boundary_points(p);
      ASSERT_EQ(static_cast<int>(bp.salient.size()) - static_cast<int>(bp.reentrant.size()), 4);
    }
  }
}

TEST(Permutomino, ListingOrderIsPi1ThenWord) {
  auto ps = interval_permutominoes(4, IntervalFamily::kConvex);
  EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end()));
  for (std::size_t i = 1; i < ps.size(); ++i) {
    ASSERT_TRUE(ps[i - 1].pi1() < ps[i].pi1() ||
                (ps[i - 1].pi1() == ps[i].pi1() && ps[i - 1].boundary() < ps[i].boundary()));
  }
}

TEST(Permutomino, ColumnIntervalsOnlyForColumnConvex) {
  const Permutomino l = word("NENESSWW");
  const auto iv = l.column_intervals();
  ASSERT_TRUE(iv.has_value());
  EXPECT_EQ(*iv, (std::vector<RowInterval>{{1, 1}, {1, 2}}));
}

}  // namespace
}  // namespace cperm
