#include <gtest/gtest.h>

#include <cmath>

#include "antirotor/algebra/registry.hpp"
#include "antirotor/errors.hpp"
#include "antirotor/harness/oracles.hpp"
#include "antirotor/harness/trials.hpp"
#include "antirotor/skewer/skewer.hpp"
#include "generators.hpp"

using namespace antirotor;
using namespace antirotor::skewer;
using antirotor::testing::Gen;

namespace {

// Independent oracle: the Jacobian of s -> L s^-1 by central differences.  An
// uncurling metric makes it symmetric.
double numeric_curl(const Algebra& a, const QMatrix& l, const std::vector<double>& s) {
  auto inv = alg::symbolic_inverse(a);
  std::size_t n = a.dim();
  auto g = [&](std::vector<double> x) {
    auto f = inv.evaluate(x);
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out[i] += l(i, j).get_d() * f[j];
    }
    return out;
  };
  const double h = 1e-5;
  std::vector<std::vector<double>> jac(n, std::vector<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    auto p = s, m = s;
    p[k] += h;
    m[k] -= h;
    auto gp = g(p), gm = g(m);
    for (std::size_t i = 0; i < n; ++i) jac[i][k] = (gp[i] - gm[i]) / (2 * h);
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) worst = std::max(worst, std::abs(jac[i][k] - jac[k][i]));
  }
  return worst;
}

std::vector<double> near_unit(const Algebra& a, Gen& g, double radius) {
  std::vector<double> s;
  for (std::size_t i = 0; i < a.dim(); ++i) s.push_back(a.unit()[i].get_d() + g.real(-radius, radius));
  return s;
}

QMatrix random_member(Gen& g, const ParamSymMatrix& u) {
  QVector alpha;
  for (std::size_t q = 0; q < u.param_count(); ++q) alpha.push_back(g.rational());
  return u.realize(alpha);
}

}  // namespace

TEST(ParamSymMatrix, RejectsAsymmetricGenerator) {
  QMatrix m = cas::zero_qmatrix(2, 2);
  m(0, 1) = 1;
  EXPECT_THROW(ParamSymMatrix(2, {m}), UsageError);
}

TEST(ParamSymMatrix, RejectsDependentGenerators) {
  QMatrix m = cas::identity_qmatrix(2);
  QMatrix m2 = m;
  m2(0, 0) = 2;
  m2(1, 1) = 2;
  EXPECT_THROW(ParamSymMatrix(2, {m, m2}), UsageError);
}

TEST(ParamSymMatrix, UpperIndexRoundTrip) {
  QVector upper{1, 2, 3, 4, 5, 6};
  auto s = symmetric_from_upper(3, upper);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) {
      EXPECT_EQ(s(i, j), upper[upper_index(3, i, j)]);
      EXPECT_EQ(s(j, i), s(i, j));
    }
  }
}

TEST(AntiRotor, TableOneSubspaces) {
  for (const auto& row : harness::table_one_rows()) {
    auto u = anti_rotor(alg::registry(row.algebra));
    EXPECT_TRUE(subspace_equal(u, row.expected)) << row.algebra << "\n" << u.to_string();
  }
}

TEST(AntiRotor, TableTwoSubspaces) {
  for (const auto& row : harness::table_two_rows()) {
    auto u = anti_rotor(alg::registry(row.algebra));
    EXPECT_TRUE(subspace_equal(u, row.expected)) << row.algebra << "\n" << u.to_string();
  }
}

TEST(AntiRotor, ComplexDisplay) {
  auto u = anti_rotor(alg::registry("complex"));
  EXPECT_EQ(u.param_count(), 2u);
  EXPECT_NE(u.to_string().find("-α"), std::string::npos);
}

TEST(AntiRotor, MatrixAlgebrasAreSpannedByTranspose) {
  for (std::size_t n : {2u, 3u}) {
    auto u = anti_rotor(alg::registry("matrix:" + std::to_string(n)));
    ASSERT_EQ(u.param_count(), 1u);
    EXPECT_TRUE(membership_check(u, alg::transpose_permutation(n)).has_value());
  }
}

TEST(AntiRotor, AtLeastOneDimensionalForUnitalAssociative) {
  for (const auto& name : alg::registry_catalog()) {
    auto a = alg::registry(name);
    if (!a.unital() || !a.associative()) continue;
    EXPECT_GE(anti_rotor(a).param_count(), 1u) << name;
  }
}

// Property: every member of the anti-rotor has a symmetric Jacobian of L s^-1,
// checked numerically at random points near the unit.
TEST(AntiRotor, MembersAreNumericallyUncurling) {
  Gen g(0xc0ffee);
  for (const auto& name : {"complex", "split-complex", "real-dual", "toeplitz:3", "quaternion", "matrix:2",
                           "triangular-4", "spin:2"}) {
    auto a = alg::registry(name);
    auto u = anti_rotor(a);
    auto inv = alg::symbolic_inverse(a);
    for (int trial = 0; trial < 5; ++trial) {
      auto l = random_member(g, u);
      EXPECT_TRUE(is_uncurling(inv, l)) << name;
      EXPECT_LT(numeric_curl(a, l, near_unit(a, g, 0.3)), 1e-6) << name;
    }
  }
}

TEST(AntiRotor, EuclideanMetricOnDualCurls) {
  auto a = alg::registry("dual");
  auto i2 = cas::identity_qmatrix(2);
  EXPECT_FALSE(is_uncurling(alg::symbolic_inverse(a), i2));
  EXPECT_FALSE(membership_check(anti_rotor(a), i2).has_value());
  Gen g(5);
  EXPECT_GT(numeric_curl(a, i2, near_unit(a, g, 0.2)), 1e-3);
}

// Property: u of the transformed algebra is the K-congruence of u.
TEST(AntiRotor, CongruenceUnderBasisChange) {
  Gen g(0x5eed);
  for (const auto& name : {"complex", "split-complex", "dual", "real-complex", "toeplitz:3"}) {
    auto a = alg::registry(name);
    for (int trial = 0; trial < 10; ++trial) {
      auto k = harness::random_invertible(a.dim(), g.engine());
      auto u = anti_rotor(a);
      auto v = anti_rotor(alg::transform(a, k));
      EXPECT_TRUE(subspace_equal(v.congruence(k), u)) << name;
    }
  }
}

TEST(AntiRotor, SplitComplexRotatedToDiagonal) {
  auto a = alg::registry("split-complex");
  QMatrix k = cas::zero_qmatrix(2, 2);
  k(0, 0) = 1;
  k(0, 1) = -1;
  k(1, 0) = 1;
  k(1, 1) = 1;
  auto u = anti_rotor(alg::transform(a, k));
  for (const auto& gen : u.generators()) EXPECT_EQ(gen(0, 1), 0);
}

TEST(AntiRotor, PowerTypesAgreeOnComplex) {
  auto a = alg::registry("complex");
  auto base = anti_rotor(a);
  for (int j : {-2, 2, 3}) EXPECT_TRUE(subspace_equal(anti_rotor(a, Mode::power(j)), base)) << j;
}

TEST(AntiRotor, NilpotentPowerDimensions) {
  auto a = alg::registry("nilpotent-3");
  EXPECT_EQ(anti_rotor(a, Mode::power(2)).param_count(), 3u);
  EXPECT_EQ(anti_rotor(a, Mode::power(3)).param_count(), 4u);
  EXPECT_EQ(anti_rotor(a, Mode::power(4)).param_count(), 6u);
}

TEST(CurlSystem, HasOneBlockPerPair) {
  auto a = alg::registry("toeplitz:3");
  auto sys = assemble_curl_system(a, field_for_mode(a, Mode::inverse()));
  EXPECT_EQ(sys.n, 3u);
  EXPECT_EQ(sys.unknowns, 6u);
  EXPECT_EQ(sys.pair_count, 3u);
  for (const auto& row : sys.rows) EXPECT_EQ(row.coeffs.size(), 6u);
}

// Property: normalized metrics satisfy s^T L s^-1 = |1|^2 at random points.
TEST(Normalized, IdentityHoldsNumerically) {
  Gen g(0xabc);
  for (const auto& name : {"complex", "dual", "real-complex", "toeplitz:3", "matrix:2", "quaternion"}) {
    auto a = alg::registry(name);
    auto u = anti_rotor(a);
    auto aff = normalized_subspace(a, u);
    ASSERT_TRUE(aff.consistent) << name;
    auto inv = alg::symbolic_inverse(a);
    for (int trial = 0; trial < 4; ++trial) {
      QMatrix l = aff.particular;
      if (aff.homogeneous.param_count() > 0) {
        auto h = random_member(g, aff.homogeneous);
        for (std::size_t i = 0; i < a.dim(); ++i) {
          for (std::size_t j = 0; j < a.dim(); ++j) l(i, j) += h(i, j);
        }
      }
      EXPECT_TRUE(membership_check(u, l).has_value()) << name;
      auto s = near_unit(a, g, 0.4);
      auto f = inv.evaluate(s);
      double acc = 0.0;
      for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) acc += s[i] * l(i, j).get_d() * f[j];
      }
      EXPECT_NEAR(acc, a.unit_norm_sq().get_d(), 1e-9) << name;
    }
  }
}

TEST(Membership, CoordinatesReconstructMetric) {
  Gen g(0x42);
  auto u = anti_rotor(alg::registry("real-complex"));
  QVector alpha{g.rational(), g.rational(), g.rational()};
  auto l = u.realize(alpha);
  auto coords = membership_check(u, l);
  ASSERT_TRUE(coords);
  EXPECT_EQ(*coords, alpha);
}
