#include <gtest/gtest.h>

#include <map>
#include <set>

#include "cperm/association.hpp"
#include "cperm/enumeration.hpp"
#include "cperm/error.hpp"
#include "cperm/unimodal.hpp"
#include "oracles.hpp"

namespace cperm {
namespace {

Permutation from_digits(const std::string& s) {
  std::vector<int> v;
  for (char c : s) v.push_back(c - '0');
  return Permutation(v);
}

TEST(IsAssociated, Examples) {
  const auto v = is_associated(Permutation{5, 9, 8, 7, 6, 3, 1, 2, 4});
  EXPECT_FALSE(v.member());
  ASSERT_TRUE(std::holds_alternative<Decomposable>(v.reason));
  EXPECT_EQ(std::get<Decomposable>(v.reason).split, 5);
  EXPECT_TRUE(is_associated(Permutation{3, 1, 6, 8, 2, 4, 7, 5}).member());
  EXPECT_TRUE(is_associated(Permutation{1}).member());
}

TEST(IsAssociated, SizeFourListExactly) {
  std::set<Permutation> listed;
  for (const char* s : {"1234", "1243", "1324", "1342", "1423", "1432", "2143", "2314", "2134", "2413",
                        "3124", "3142", "3214"}) {
    listed.insert(from_digits(s));
  }
  std::set<Permutation> members;
  for (const auto& p : all_permutations(4)) {
    if (is_associated(p).member()) members.insert(p);
  }
  EXPECT_EQ(members, listed);
  EXPECT_EQ(24 - members.size(), 11u);
}

TEST(IsAssociated, SmallSizesMatchTheListedSets) {
  std::set<Permutation> c3;
  for (const auto& p : all_permutations(3)) {
    if (is_associated(p).member()) c3.insert(p);
  }
  EXPECT_EQ(c3, (std::set<Permutation>{from_digits("123"), from_digits("132"), from_digits("213")}));
  EXPECT_TRUE(is_associated(Permutation{1, 2}).member());
  EXPECT_FALSE(is_associated(Permutation{2, 1}).member());
}

TEST(IsAssociated, SigmaWitnessIsAnAscentThenDescent) {
  const Permutation p{1, 5, 8, 2, 7, 3, 9, 10, 6, 4};
  const auto v = is_associated(p);
  ASSERT_TRUE(std::holds_alternative<SigmaNotUnimodal>(v.reason));
  const auto pos = std::get<SigmaNotUnimodal>(v.reason).positions;
  const auto sigma = mu_sigma(p).sigma.values();
  ASSERT_LT(pos[0], pos[1]);
  ASSERT_LT(pos[1], pos[2]);
  EXPECT_LT(sigma[pos[0] - 1], sigma[pos[1] - 1]);
  EXPECT_GT(sigma[pos[1] - 1], sigma[pos[2] - 1]);
}

TEST(IsAssociatedPrime, Examples) {
  EXPECT_TRUE(is_associated_prime(Permutation{2, 4, 1, 3}));
  EXPECT_TRUE(is_associated(Permutation{2, 4, 1, 3}).member());
  EXPECT_FALSE(is_associated_prime(Permutation{1, 2}));
  EXPECT_TRUE(is_associated_prime(Permutation{2, 1}));
  EXPECT_TRUE(is_associated_prime(Permutation{1}));
}

TEST(FreeFixedPoints, Examples) {
  EXPECT_EQ(free_fixed_points(Permutation{2, 1, 3, 4, 7, 6, 5}).points, (std::vector<int>{3, 4}));
  EXPECT_EQ(free_fixed_points(Permutation::identity(7)).points, (std::vector<int>{2, 3, 4, 5, 6}));
  EXPECT_TRUE(free_fixed_points(Permutation{8, 6, 1, 9, 11, 14, 2, 16, 15, 13, 12, 10, 7, 3, 5, 4})
                  .points.empty());
  try {
    free_fixed_points(Permutation{2, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotAssociated);
  }
}

TEST(BuildCanonical, Examples) {
  const Permutation th2{3, 1, 6, 8, 2, 4, 7, 5};
  const Permutomino p = build_canonical(th2);
  EXPECT_EQ(p.pi1(), th2);
  EXPECT_TRUE(classify(p).convex);
  EXPECT_EQ(build_canonical(Permutation{1, 2}), Permutomino::from_boundary_word(BoundaryWord("NESW")));
  EXPECT_TRUE(build_canonical(Permutation{1}).is_empty());
  EXPECT_THROW(build_canonical(Permutation{5, 9, 8, 7, 6, 3, 1, 2, 4}), Error);
}

TEST(BuildCanonical, CornerPointsAndAlphaFreeFixedPoints) {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& p : all_permutations(n)) {
      if (!is_associated(p).member()) continue;
      const Permutomino q = build_canonical(p);
      ASSERT_EQ(q.pi1(), p);
      ASSERT_TRUE(classify(q).convex);
      const std::set<Point> vs(q.vertices().begin(), q.vertices().end());
      ASSERT_TRUE(vs.count({1, p(1)}));
      ASSERT_TRUE(vs.count({p.position_of(n), n}));
      ASSERT_TRUE(vs.count({n, p(n)}));
      ASSERT_TRUE(vs.count({p.position_of(1), 1}));
      std::set<Point> alphas;
      for (const auto& r : boundary_points(q).reentrant) {
        if (r.label == ReentrantLabel::kAlpha) alphas.insert(r.point);
      }
      for (int f : free_fixed_points(p).points) ASSERT_TRUE(alphas.count({f, f})) << p;
    }
  }
}

TEST(Fiber, Examples) {
  EXPECT_EQ(fiber(Permutation{2, 1, 3, 4, 5}).size(), 4u);
  EXPECT_EQ(fiber(Permutation{2, 1, 3, 4, 7, 6, 5}).size(), 4u);
  EXPECT_EQ(fiber(Permutation{1, 2}).size(), 1u);
  EXPECT_EQ(fiber(Permutation::identity(6)).size(), 16u);
  EXPECT_THROW(fiber(Permutation{2, 1}), Error);
}

TEST(Fiber, DescendingEndsGiveASingletonFiber) {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& p : all_permutations(n)) {
      if (p(1) > p(n) && is_associated(p).member()) ASSERT_EQ(fiber(p).size(), 1u) << p;
    }
  }
}

// Grouping the oracle's convex permutominoes by pi1 must reproduce both the
// membership predicate and every fiber.
class OracleSizes : public ::testing::TestWithParam<int> {};

TEST_P(OracleSizes, MembershipAndFibersMatchTheIntervalOracle) {
  const int n = GetParam();
  std::map<Permutation, std::vector<Permutomino>> by_pi1;
  for (const auto& q : interval_permutominoes(n, IntervalFamily::kConvex)) by_pi1[q.pi1()].push_back(q);
  for (const auto& p : all_permutations(n)) {
    const bool member = is_associated(p).member();
    ASSERT_EQ(member, by_pi1.count(p) > 0) << p;
    if (!member || n > 6) continue;
    const auto f = fiber(p);
    ASSERT_EQ(f, by_pi1[p]) << p;
    ASSERT_EQ(f.size(), std::size_t{1} << free_fixed_points(p).points.size());
    for (const auto& q : f) {
      ASSERT_EQ(q.pi1(), p);
      ASSERT_TRUE(classify(q).convex);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, OracleSizes, ::testing::Values(1, 2, 3, 4, 5, 6, 7));

TEST(Membership, CellOracleAgreesUpToFive) {
  for (int n = 2; n <= 5; ++n) {
    std::set<Permutation> from_cells;
    for (const auto& cells : oracle::all_permutomino_cells(n)) {
      if (!oracle::cells_convex(cells, n)) continue;
      CellGrid g(n - 1, n - 1);
      for (auto [c, r] : cells) g.set(c, r);
      from_cells.insert(Permutomino::from_cells(g).pi1());
    }
    std::set<Permutation> members;
    for (const auto& p : all_permutations(n)) {
      if (is_associated(p).member()) members.insert(p);
    }
    EXPECT_EQ(from_cells, members) << n;
  }
}

TEST(Membership, AscendingEndsReduceToSigmaUnimodality) {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& p : all_permutations(n)) {
      if (p(1) >= p(n)) continue;
      ASSERT_EQ(is_associated(p).member(), is_lower_unimodal(mu_sigma(p).sigma.values())) << p;
    }
  }
}

TEST(Membership, SquareIsUnionOfBothClasses) {
  for (int n = 1; n <= 7; ++n) {
    long long ascending = 0, square = 0;
    for (const auto& p : all_permutations(n)) {
      const bool in = is_associated(p).member();
      ASSERT_EQ(is_square(p), in || is_associated_prime(p)) << p;
      ASSERT_EQ(is_associated_prime(p), is_associated(reversal(p)).member());
      if (in && (n == 1 || p(1) < p(n))) ++ascending;
      square += is_square(p);
    }
    if (n >= 2) EXPECT_EQ(2 * ascending, square) << n;
  }
}

TEST(Membership, EveryPermutationHasAColumnConvexPermutomino) {
  for (int n = 2; n <= 5; ++n) {
    std::set<Permutation> seen;
    for (const auto& q : enumerate_column_convex_oracle(n)) {
      seen.insert(q.pi1());
      seen.insert(q.pi2());
    }
    EXPECT_EQ(seen.size(), all_permutations(n).size()) << n;
  }
}

TEST(Membership, ColumnConvexFiberOfTheFigureExample) {
  const Permutation p{1, 6, 2, 5, 3, 4};
  int total = 0, convex = 0;
  for (const auto& q : enumerate_column_convex_oracle(6)) {
    if (q.pi1() != p) continue;
    ++total;
    convex += classify(q).convex;
  }
  EXPECT_EQ(total, 4);
  EXPECT_EQ(convex, 1);
  EXPECT_EQ(fiber(p).size(), 1u);
}

}  // namespace
}  // namespace cperm
