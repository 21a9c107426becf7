#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <set>

#include "cperm/bijection.hpp"
#include "cperm/enumeration.hpp"
#include "cperm/error.hpp"
#include "cperm/unimodal.hpp"

namespace cperm {
namespace {

const Permutation kFigure{16, 15, 18, 19, 17, 14, 12, 13, 9, 7, 11, 10, 8, 3, 1, 6, 5, 2, 4};

Permutomino word(const char* w) { return Permutomino::from_boundary_word(BoundaryWord(w)); }

TEST(Bijection, FigureExampleBackward) {
  const PermutominoSequence s = permutation_to_sequence(kFigure);
  ASSERT_EQ(s.length(), 5u);
  const auto& parts = s.parts();
  std::vector<int> sizes;
  for (const auto& p : parts) sizes.push_back(p.size());
  EXPECT_EQ(sizes, (std::vector<int>{5, 1, 2, 5, 6}));
  EXPECT_EQ(parts[0].pi2(), (Permutation{3, 5, 4, 1, 2}));
  EXPECT_TRUE(parts[1].is_empty());
  EXPECT_EQ(parts[2], word("NESW"));
  EXPECT_EQ(parts[3].pi2(), (Permutation{2, 4, 5, 1, 3}));
  EXPECT_EQ(parts[4].pi2(), (Permutation{4, 6, 1, 2, 5, 3}));
  EXPECT_TRUE(classify(parts[0]).directed);
  EXPECT_TRUE(classify(parts[3]).parallelogram);
  EXPECT_TRUE(classify(parts[4]).directed);
  EXPECT_EQ(s.total_size(), 19);
}

TEST(Bijection, FigureExampleForwardFromComponents) {
  const std::vector<Permutation> deltas{{2, 1, 4, 5, 3}, {1}, {1, 2}, {3, 1, 5, 4, 2}, {3, 1, 6, 5, 2, 4}};
  std::vector<Permutomino> parts;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    parts.push_back(part_of_component(deltas[i], i == 0, i + 1 == deltas.size()));
  }
  const PermutominoSequence s(parts);
  EXPECT_EQ(sequence_to_permutation(s), kFigure);
  EXPECT_EQ(component_of_part(parts[4], true), (Permutation{3, 1, 6, 5, 2, 4}));
  EXPECT_EQ(complement(Permutation{4, 6, 1, 2, 5, 3}), (Permutation{3, 1, 6, 5, 2, 4}));
}

TEST(Bijection, EmptyParts) {
  const Permutomino e = Permutomino::empty();
  EXPECT_EQ(sequence_to_permutation(PermutominoSequence({e, e})), (Permutation{2, 1}));
  EXPECT_EQ(permutation_to_sequence(Permutation{2, 1}), PermutominoSequence({e, e}));
  EXPECT_EQ(permutation_to_sequence(Permutation{3, 2, 1}), PermutominoSequence({e, e, e}));
}

TEST(Bijection, TwoSingleCells) {
  const Permutomino c = word("NESW");
  const Permutation p = sequence_to_permutation(PermutominoSequence({c, c}));
  // reversal(2,1) = (1,2) and complement(2,1) = (1,2).
  EXPECT_EQ(p, direct_difference(Permutation{1, 2}, Permutation{1, 2}));
  EXPECT_EQ(p, (Permutation{3, 4, 1, 2}));
  EXPECT_TRUE(is_square(p));
  EXPECT_EQ(decompose(p).size(), 2u);
}

TEST(Bijection, DomainErrors) {
  try {
    permutation_to_sequence(Permutation{1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIndecomposable);
  }
  try {
    permutation_to_sequence(Permutation{1, 5, 8, 2, 7, 3, 9, 10, 6, 4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotSquare);
  }
}

TEST(PermutominoSequence, ConstraintsAreChecked) {
  const Permutomino e = Permutomino::empty();
  const Permutomino not_directed = word("NWNEESSW");
  const Permutomino directed_only = word("NNESESWW");
  ASSERT_FALSE(classify(not_directed).directed);
  ASSERT_TRUE(classify(directed_only).directed);
  ASSERT_FALSE(classify(directed_only).parallelogram);
  EXPECT_THROW(PermutominoSequence({e}), Error);
  EXPECT_THROW(PermutominoSequence({not_directed, e}), Error);
  EXPECT_THROW(PermutominoSequence({e, not_directed}), Error);
  EXPECT_THROW(PermutominoSequence({e, directed_only, e}), Error);
  EXPECT_NO_THROW(PermutominoSequence({directed_only, e, directed_only}));
  try {
    PermutominoSequence({e, directed_only, e});
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::kInvalidSequence);
  }
}

TEST(Bijection, RoundTripOverAllDecomposableSquares) {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& p : all_permutations(n)) {
      if (!is_square(p) || !is_decomposable(p)) continue;
      const auto s = permutation_to_sequence(p);
      ASSERT_EQ(s.total_size(), n);
      ASSERT_EQ(s.length(), decompose(p).size());
      ASSERT_EQ(sequence_to_permutation(s), p) << p;
      for (const auto& d : decompose(p)) {
        ASSERT_TRUE(is_upper_unimodal(mu_sigma(d).mu.values()));
        ASSERT_TRUE(is_lower_unimodal(mu_sigma(d).sigma.values()));
      }
    }
  }
}

// Generates T_{n,k} from the oracle's class lists; the forward map must be
// a bijection onto B_{n,k}.
TEST(Bijection, ForwardMapIsABijectionFromGeneratedSequences) {
  constexpr int kMax = 6;
  std::vector<std::vector<Permutomino>> directed(kMax + 1), parallelogram(kMax + 1);
  for (int s = 1; s <= kMax; ++s) {
    directed[s] = directed_convex_permutominoes(s);
    parallelogram[s] = parallelogram_permutominoes(s);
  }
  for (int n = 2; n <= kMax; ++n) {
    std::map<int, std::set<Permutation>> images;
    std::map<int, std::size_t> generated;
    std::vector<Permutomino> current;
    std::function<void(int)> extend = [&](int remaining) {
      // Close the sequence with a directed convex last part.
      if (!current.empty()) {
        for (const auto& last : directed[remaining]) {
          current.push_back(last);
          const PermutominoSequence seq(current);
          const Permutation p = sequence_to_permutation(seq);
          const int k = static_cast<int>(current.size());
          ASSERT_TRUE(images[k].insert(p).second) << "collision at " << p;
          ASSERT_EQ(permutation_to_sequence(p), seq);
          ++generated[k];
          current.pop_back();
        }
      }
      for (int s = 1; s < remaining; ++s) {
        const auto& pool = current.empty() ? directed[s] : parallelogram[s];
        for (const auto& part : pool) {
          current.push_back(part);
          extend(remaining - s);
          current.pop_back();
        }
      }
    };
    extend(n);
    std::map<int, std::set<Permutation>> by_k;
    for (const auto& p : all_permutations(n)) {
      if (is_square(p) && is_decomposable(p)) by_k[static_cast<int>(decompose(p).size())].insert(p);
    }
    EXPECT_EQ(images, by_k) << n;
  }
}

TEST(Bijection, ComponentsHaveUniquePreimages) {
  constexpr int kMax = 6;
  std::vector<std::vector<Permutomino>> directed(kMax + 1), parallelogram(kMax + 1);
  for (int s = 1; s <= kMax; ++s) {
    directed[s] = directed_convex_permutominoes(s);
    parallelogram[s] = parallelogram_permutominoes(s);
  }
  for (int s = 1; s <= kMax; ++s) {
    std::map<Permutation, int> first, middle, last;
    for (const auto& q : directed[s]) {
      ++first[component_of_part(q, false)];
      ++last[component_of_part(q, true)];
    }
    for (const auto& q : parallelogram[s]) ++middle[component_of_part(q, false)];
    for (const auto* m : {&first, &middle, &last}) {
      for (const auto& [delta, count] : *m) ASSERT_EQ(count, 1) << delta;
    }
  }
}

}  // namespace
}  // namespace cperm
