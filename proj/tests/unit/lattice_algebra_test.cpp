#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "polydual/lattice_algebra.hpp"

using namespace polydual;

namespace {

IntMatrix rand_matrix(std::size_t n, std::mt19937& rng, int r = 5) {
  std::uniform_int_distribution<int> d(-r, r);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

std::vector<oracle::Pt> as_rows(const IntMatrix& m) {
  std::vector<oracle::Pt> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j).get_si());
  return out;
}

}  // namespace

TEST(Det, ExampleSquare) {
  EXPECT_EQ(det(IntMatrix{{0, 2, 1}, {3, 2, 0}, {0, 0, 2}}), -12);
}

TEST(Det, IdentityAndDiagonal) {
  EXPECT_EQ(det(IntMatrix::identity(3)), 1);
  EXPECT_EQ(det(IntMatrix{{5, 0, 0}, {0, 3, 0}, {0, 0, 2}}), 30);
}

TEST(Det, NonSquareThrows) {
  EXPECT_THROW(det(IntMatrix(2, 3)), DimensionError);
}

TEST(Det, MatchesCofactorExpansion) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const IntMatrix m = rand_matrix(n, rng);
    EXPECT_EQ(det(m), oracle::cofactor_det(as_rows(m)));
  }
}

TEST(Det, UnimodularInvariance) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const IntMatrix m = rand_matrix(n, rng);
    const IntMatrix u = oracle::random_unimodular(n, rng);
    const Integer du = det(u);
    ASSERT_TRUE(du == 1 || du == -1);
    EXPECT_EQ(abs(det(u * m)), abs(det(m)));
  }
}

TEST(Det, LargeEntriesStayExact) {
  const Integer big("123456789012345678901234567890");
  IntMatrix m{{big, 1}, {1, big}};
  EXPECT_EQ(det(m), Integer(big * big - 1));
}

TEST(Hnf, Trivial) {
  auto r = hnf(IntMatrix::identity(3));
  EXPECT_EQ(r.h, IntMatrix::identity(3));
  EXPECT_EQ(r.u, IntMatrix::identity(3));
  r = hnf(IntMatrix{{2, 0}, {0, 1}});
  EXPECT_EQ(r.h, (IntMatrix{{2, 0}, {0, 1}}));
}

TEST(Hnf, ShapeAndUnimodular) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const IntMatrix m = rand_matrix(n, rng);
    const auto [h, u] = hnf(m);
    EXPECT_EQ(u * m, h);
    EXPECT_EQ(abs(det(u)), 1);
    // echelon: pivots positive, entries above a pivot in [0, pivot)
    std::size_t col = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
      while (col < n && h(i, col) == 0) {
        for (std::size_t k = i; k < h.rows(); ++k) EXPECT_EQ(h(k, col), 0);
        ++col;
      }
      if (col == n) {
        for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(h(i, k), 0);
        continue;
      }
      EXPECT_GT(h(i, col), 0);
      for (std::size_t k = 0; k < i; ++k) {
        EXPECT_GE(h(k, col), 0);
        EXPECT_LT(h(k, col), h(i, col));
      }
      for (std::size_t k = i + 1; k < h.rows(); ++k) EXPECT_EQ(h(k, col), 0);
      ++col;
    }
  }
}

TEST(Hnf, ZeroMatrix) {
  const auto r = hnf(IntMatrix(2, 2));
  EXPECT_EQ(r.h, IntMatrix(2, 2));
}

TEST(Sublattice, IndexOfEvenSumLattice) {
  // {alpha : alpha_1 + alpha_2 + alpha_3 even}, permuted generators
  Sublattice l(IntMatrix{{0, 2, 0}, {1, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(sublattice_index(l), 2);
  EXPECT_EQ(abs(det(l.canonical_basis())), 2);
  EXPECT_TRUE(l.contains({1, 1, 0}));
  EXPECT_FALSE(l.contains({1, 0, 0}));
  EXPECT_EQ(sublattice_index(Sublattice::standard(3)), 1);
}

TEST(Sublattice, SingularBasisRejected) {
  EXPECT_THROW(Sublattice(IntMatrix{{1, 1}, {2, 2}}), InvalidLatticeError);
  EXPECT_THROW(Sublattice::from_generators(IntMatrix{{1, 1}, {2, 2}}), InvalidLatticeError);
}

TEST(Sublattice, EqualityIgnoresBasisChoice) {
  std::mt19937 rng(5);
  const IntMatrix b{{2, 1, 0}, {0, 3, 1}, {1, 0, 4}};
  for (int trial = 0; trial < 20; ++trial) {
    const IntMatrix u = oracle::random_unimodular(3, rng);
    EXPECT_EQ(Sublattice(u * b), Sublattice(b));
  }
}

TEST(Solve, Small) {
  EXPECT_EQ(*solve_rational(IntMatrix::identity(3), RatVector{1, 2, 3}), (RatVector{1, 2, 3}));
  EXPECT_EQ(*solve_rational(IntMatrix{{2, 1}, {1, 2}}, RatVector{3, 3}), (RatVector{1, 1}));
  EXPECT_FALSE(solve_rational(IntMatrix{{1, 1}, {1, 1}}, RatVector{1, 2}).has_value());
}

TEST(Solve, DualWeightsFromTranspose) {
  const IntMatrix c{{0, 2, 1}, {3, 2, 0}, {0, 0, 2}};
  EXPECT_EQ(*solve_rational(c.transpose(), RatVector{12, 12, 12}), (RatVector{2, 4, 5}));
}

TEST(Solve, RoundTrip) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const IntMatrix a = rand_matrix(n, rng);
    RatVector b;
    for (std::size_t i = 0; i < n; ++i) b.push_back(ratio(d(rng), 1 + trial % 3));
    const auto x = solve_rational(a, b);
    if (det(a) == 0) {
      EXPECT_FALSE(x.has_value());
      continue;
    }
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(to_rational(a) * RatMatrix::from_rows({*x}, n).transpose(), RatMatrix::from_rows({b}, n).transpose());
  }
}

TEST(Rational, Canonical) {
  EXPECT_EQ(ratio(6, -4), Rational(-3, 2));
  EXPECT_EQ(parse_rational("10/4"), Rational(5, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_THROW(ratio(1, 0), DimensionError);
  EXPECT_EQ(to_string(Rational(-3, 2)), "-3/2");
}

TEST(Inverse, TimesOriginalIsIdentity) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix m = rand_matrix(3, rng);
    const auto inv = inverse(to_rational(m));
    if (det(m) == 0) {
      EXPECT_FALSE(inv.has_value());
      continue;
    }
    EXPECT_EQ(to_rational(m) * *inv, RatMatrix::identity(3));
  }
}

TEST(LeftKernel, AnnihilatesAndHasRightRank) {
  const IntMatrix m{{1, 2}, {2, 4}, {3, 6}};
  const IntMatrix k = left_kernel(m);
  EXPECT_EQ(k.rows(), 2u);
  const IntMatrix z = k * m;
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j) EXPECT_EQ(z(i, j), 0);
}
