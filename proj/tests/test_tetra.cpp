#include "lattice/oracle.hpp"
#include "lattice/tetra.hpp"
#include "lattice/triangle_core.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <numeric>

using namespace lattice;

TEST(TetraCount, Examples) {
  EXPECT_EQ(tetra_count({1, 2, 3, 3}), 7);
  EXPECT_EQ(tetra_count({6, 10, 15, 21}), 9);
  EXPECT_EQ(tetra_count({2, 3, 5, -1}), 0);
  EXPECT_EQ(tetra_count({1, 1, 1, 0}), 1);
  EXPECT_THROW(tetra_count({0, 1, 1, 3}), InputError);
  EXPECT_THROW(tetra_count({1, -2, 1, 3}), InputError);
}

TEST(TetraCount, SlicesAlongLargestGenerator) {
  auto tr = tetra_count_traced({6, 15, 10, 21});
  EXPECT_EQ(tr.slice_axis, 1u);
  EXPECT_EQ(tr.slices, 2);
  EXPECT_EQ(tr.count, 9);
}

TEST(TetraCount, MatchesEnumerationAllOrders) {
  for (int a1 = 1; a1 <= 6; ++a1) {
    for (int a2 = 1; a2 <= 6; ++a2) {
      for (int a3 = 1; a3 <= 6; ++a3) {
        for (int b : {0, 1, 5, 17, 30, 41}) {
          ASSERT_EQ(tetra_count({a1, a2, a3, b}), oracle::brute_tetra({a1, a2, a3, b}))
              << a1 << " " << a2 << " " << a3 << " " << b;
        }
      }
    }
  }
}

TEST(TetraCount, PermutationInvariant) {
  for (auto gens : {std::array<int, 3>{6, 10, 15}, {2, 3, 7}, {4, 4, 9}, {1, 8, 8}}) {
    std::sort(gens.begin(), gens.end());
    const Int n = tetra_count({gens[0], gens[1], gens[2], 97});
    do {
      EXPECT_EQ(tetra_count({gens[0], gens[1], gens[2], 97}), n);
    } while (std::next_permutation(gens.begin(), gens.end()));
  }
}

TEST(TetraCount, SingleSliceReducesToPlane) {
  // a3 > b leaves only x3 = 0: the gcd-reduced plane count.
  for (int a1 = 1; a1 <= 8; ++a1) {
    for (int a2 = 1; a2 <= 8; ++a2) {
      for (int b = 0; b <= 40; ++b) {
        const Int d = gcd(a1, a2);
        EXPECT_EQ(tetra_count({a1, a2, 100, b}), count_thr({a1 / d, a2 / d, floor_div(b, d)}));
      }
    }
  }
}

TEST(TetraCount, ClosedFormAgreesWhenFirstPairCoprime) {
  for (int a1 = 1; a1 <= 7; ++a1) {
    for (int a2 = 1; a2 <= 7; ++a2) {
      if (std::gcd(a1, a2) != 1) continue;
      for (int a3 = 1; a3 <= 7; ++a3) {
        for (int b = -2; b <= 60; b += 3) {
          EXPECT_EQ(tetra_count_closed_form({a1, a2, a3, b}), tetra_count({a1, a2, a3, b}));
        }
      }
    }
  }
  EXPECT_THROW(tetra_count_closed_form({6, 10, 15, 21}), InputError);
}

TEST(TetraCount, LargeRightHandSideUsesExactPath) {
  // x1 + x2 + x3 <= n has C(n+3, 3) points.
  const Int n = (Int(1) << 20) + 5;
  EXPECT_EQ(tetra_count({1, 1, 1, n}), (n + 3) * (n + 2) * (n + 1) / 6);
  const Int m = boost::multiprecision::pow(Int(10), 7);
  EXPECT_EQ(tetra_count({1, 1, m, m - 1}), (m + 1) * m / 2);
}

TEST(Denumerant3, Examples) {
  EXPECT_EQ(denumerant3(3, 5, 7, 10), 2);
  EXPECT_EQ(denumerant3(1, 2, 3, 0), 1);
  EXPECT_EQ(denumerant3(6, 10, 15, 21), 1);
  EXPECT_EQ(denumerant3(6, 10, 15, -3), 0);
  EXPECT_EQ(denumerant3(6, 10, 15, 1), 0);
  EXPECT_THROW(denumerant3(0, 10, 15, 21), InputError);
}

TEST(Denumerant3, MatchesEnumeration) {
  for (int a1 = 1; a1 <= 5; ++a1) {
    for (int a2 = 1; a2 <= 5; ++a2) {
      for (int a3 = 1; a3 <= 5; ++a3) {
        for (int n = 0; n <= 30; ++n) {
          EXPECT_EQ(denumerant3(a1, a2, a3, n), oracle::brute_representations3(a1, a2, a3, n));
        }
      }
    }
  }
}
