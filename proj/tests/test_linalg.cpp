#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "antirotor/cas/linalg.hpp"
#include "generators.hpp"

using namespace antirotor::cas;
using antirotor::testing::Gen;

namespace {

// Independent oracle: the Leibniz permutation expansion.
MultiPoly leibniz_det(const PMatrix& m) {
  std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly sum(m(0, 0).num_vars());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    MultiPoly term = MultiPoly::constant(sum.num_vars(), inversions % 2 == 0 ? 1 : -1);
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

PMatrix random_pmatrix(Gen& g, std::size_t n, std::size_t nvars) {
  PMatrix m = zero_pmatrix(n, n, nvars);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = g.poly(nvars, 3, 2);
  }
  return m;
}

MultiPoly X(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }

}  // namespace

TEST(DetPoly, SmallClosedForms) {
  MultiPoly x = X(2, 0), y = X(2, 1), one = MultiPoly::constant(2, 1);
  PMatrix a = zero_pmatrix(2, 2, 2);
  a(0, 0) = x; a(0, 1) = one; a(1, 0) = one; a(1, 1) = x;
  EXPECT_EQ(det_poly(a), x * x - one);
  PMatrix c = zero_pmatrix(2, 2, 2);
  c(0, 0) = x; c(0, 1) = -y; c(1, 0) = y; c(1, 1) = x;
  EXPECT_EQ(det_poly(c), x * x + y * y);
}

TEST(DetPoly, LowerTriangularToeplitzGivesCube) {
  MultiPoly x = X(3, 0), y = X(3, 1), z = X(3, 2);
  PMatrix t = zero_pmatrix(3, 3, 3);
  t(0, 0) = x; t(1, 1) = x; t(2, 2) = x;
  t(1, 0) = y; t(2, 1) = y; t(2, 0) = z;
  EXPECT_EQ(det_poly(t, DetMethod::bareiss), x * x * x);
  EXPECT_EQ(det_poly(t, DetMethod::cofactor), x * x * x);
}

TEST(DetPoly, MethodsAgreeWithLeibniz) {
  Gen g(314);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
    PMatrix m = random_pmatrix(g, n, 2);
    MultiPoly oracle = leibniz_det(m);
    EXPECT_EQ(det_poly(m, DetMethod::bareiss), oracle);
    EXPECT_EQ(det_poly(m, DetMethod::cofactor), oracle);
  }
}

TEST(Adjugate, ClosedFormsAndIdentity) {
  MultiPoly x = X(2, 0), y = X(2, 1);
  PMatrix c = zero_pmatrix(2, 2, 2);
  c(0, 0) = x; c(0, 1) = -y; c(1, 0) = y; c(1, 1) = x;
  PMatrix adj = adjugate(c);
  EXPECT_EQ(adj(0, 0), x);
  EXPECT_EQ(adj(0, 1), y);
  EXPECT_EQ(adj(1, 0), -y);
  EXPECT_EQ(adj(1, 1), x);

  PMatrix id = zero_pmatrix(3, 3, 1);
  for (std::size_t i = 0; i < 3; ++i) id(i, i) = MultiPoly::constant(1, 1);
  EXPECT_EQ(adjugate(id), id);
}

TEST(Adjugate, TimesMatrixIsDeterminantTimesIdentity) {
  Gen g(1618);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = static_cast<std::size_t>(g.integer(2, 3));
    PMatrix m = random_pmatrix(g, n, 2);
    PMatrix adj = adjugate(m);
    MultiPoly d = det_poly(m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        MultiPoly s(2);
        for (std::size_t k = 0; k < n; ++k) s += m(i, k) * adj(k, j);
        EXPECT_EQ(s, i == j ? d : MultiPoly(2));
      }
    }
  }
}

TEST(Nullspace, CanonicalBasis) {
  QMatrix a = zero_qmatrix(1, 2);
  a(0, 0) = 1; a(0, 1) = 1;
  auto ns = nullspace_exact(a);
  ASSERT_EQ(ns.size(), 1U);
  EXPECT_TRUE(ns[0] == (QVector{-1, 1}));

  auto full = nullspace_exact(zero_qmatrix(2, 3));
  ASSERT_EQ(full.size(), 3U);
  for (std::size_t i = 0; i < 3; ++i) {
    QVector e(3);
    e[i] = 1;
    EXPECT_TRUE(full[i] == e);
  }
}

TEST(Nullspace, RankNullityAndAnnihilation) {
  Gen g(42);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = static_cast<std::size_t>(g.integer(1, 5)), c = static_cast<std::size_t>(g.integer(1, 6));
    QMatrix a = g.qmatrix(r, c);
    // Force some dependence.
    if (r >= 2) {
      for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = a(0, j) * 2 - a(1, j);
    }
    auto ns = nullspace_exact(a);
    EXPECT_EQ(ns.size() + rank_exact(a), c);
    for (const auto& v : ns) {
      for (const auto& x : mat_vec(a, v)) EXPECT_EQ(x, 0);
    }
  }
}

TEST(Rank, SmallCases) {
  EXPECT_EQ(rank_exact(identity_qmatrix(3)), 3U);
  QMatrix ones(2, 2, BigRational(1));
  EXPECT_EQ(rank_exact(ones), 1U);
  EXPECT_EQ(rank_exact(zero_qmatrix(3, 2)), 0U);
}

TEST(Rank, AgreesWithRrefOnRationalMatrices) {
  Gen g(8);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = static_cast<std::size_t>(g.integer(1, 5)), c = static_cast<std::size_t>(g.integer(1, 5));
    QMatrix a = zero_qmatrix(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) a(i, j) = g.rational(3, 3);
    }
    EchelonBasis e(c);
    for (std::size_t i = 0; i < r; ++i) {
      QVector row(c);
      for (std::size_t j = 0; j < c; ++j) row[j] = a(i, j);
      e.add_row(row);
    }
    EXPECT_EQ(rank_exact(a), e.rank());
  }
}

TEST(Solve, InverseAndConsistency) {
  Gen g(77);
  for (int trial = 0; trial < 30; ++trial) {
    QMatrix a = g.qmatrix(3, 3);
    auto inv = inverse_exact(a);
    if (det_exact(a) == 0) {
      EXPECT_FALSE(inv.has_value());
      continue;
    }
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(a * *inv, identity_qmatrix(3));
    QVector b{g.rational(), g.rational(), g.rational()};
    auto x = solve_exact(a, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_TRUE(mat_vec(a, *x) == b);
  }
  QMatrix s(2, 2, BigRational(1));
  EXPECT_FALSE(solve_exact(s, QVector{1, 2}).has_value());
}

TEST(Echelon, LastPivotPrefersEarlyFreeColumns) {
  // Constraint M11 + M22 = 0 over unknowns (M11, M12, M22).
  EchelonBasis e(3, EchelonBasis::Pivot::last);
  e.add_row(QVector{1, 0, 1});
  auto ns = e.nullspace();
  ASSERT_EQ(ns.size(), 2U);
  EXPECT_TRUE(ns[0] == (QVector{1, 0, -1}));
  EXPECT_TRUE(ns[1] == (QVector{0, 1, 0}));
}
