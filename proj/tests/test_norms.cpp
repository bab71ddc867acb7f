#include <gtest/gtest.h>

#include <cmath>

#include "antirotor/algebra/registry.hpp"
#include "antirotor/errors.hpp"
#include "antirotor/harness/oracles.hpp"
#include "antirotor/norms/norms.hpp"
#include "antirotor/skewer/skewer.hpp"
#include "generators.hpp"

using namespace antirotor;
using namespace antirotor::norms;
using antirotor::testing::Gen;

namespace {

QMatrix diag(std::initializer_list<long> d) {
  QMatrix m = cas::zero_qmatrix(d.size(), d.size());
  std::size_t i = 0;
  for (long x : d) {
    m(i, i) = x;
    ++i;
  }
  return m;
}

Point near_unit(const Algebra& a, Gen& g, double radius) {
  Point s;
  for (std::size_t i = 0; i < a.dim(); ++i) s.push_back(a.unit()[i].get_d() + g.real(-radius, radius));
  return s;
}

NormOptions tight() {
  NormOptions o;
  o.tol = 1e-12;
  return o;
}

}  // namespace

TEST(Norm, ComplexModulus) {
  NormEvaluator ev(alg::registry("complex"), diag({1, -1}));
  EXPECT_NEAR(ev.evaluate({3, 4}, tight()).value, 5.0, 1e-10);
  EXPECT_DOUBLE_EQ(ev.degree(), 1.0);
}

TEST(Norm, DualFirstCoordinate) {
  NormEvaluator ev(alg::registry("dual"), diag({1, 0}));
  EXPECT_NEAR(ev.evaluate({2, 7}, tight()).value, 2.0, 1e-10);
}

TEST(Norm, MatrixDeterminant) {
  auto a = alg::registry("matrix:2");
  NormEvaluator ev(a, alg::transpose_permutation(2));
  // Column-stacked [[2, 1], [0.5, 3]]; the normalized norm is sqrt(det).
  Point s{2, 0.5, 1, 3};
  double det = 2 * 3 - 1 * 0.5;
  EXPECT_DOUBLE_EQ(ev.degree(), 1.0);
  EXPECT_NEAR(ev.evaluate(s, tight()).value, std::sqrt(det), 1e-9);
}

TEST(Norm, StaircaseEndpoints) {
  auto path = staircase_path({1, 0, 0}, {2, 3, 4}, PathOrder::forward);
  ASSERT_EQ(path.size(), 4u);
  EXPECT_EQ(path[1], (Point{2, 0, 0}));
  auto rev = staircase_path({1, 0, 0}, {2, 3, 4}, PathOrder::reversed);
  EXPECT_EQ(rev[1], (Point{1, 0, 4}));
  EXPECT_EQ(rev.back(), (Point{2, 3, 4}));
}

TEST(Norm, NonMemberMetricRejected) {
  EXPECT_THROW(NormEvaluator(alg::registry("dual"), diag({1, 1})), DomainError);
  EXPECT_THROW(NormEvaluator(alg::registry("nilpotent-3"), diag({1, 1, 1})), DomainError);
  EXPECT_THROW(NormEvaluator(alg::registry("complex"), diag({1, 1, 1})), UsageError);
}

TEST(Norm, SingularPathIsDomainError) {
  NormEvaluator ev(alg::registry("direct-product:2"), diag({1, 0}));
  EXPECT_THROW(ev.evaluate({-1, 1}), DomainError);
}

// Every closed form of the reference tables, for random combinations of the
// anti-rotor members, at random points near the unit.
TEST(Norm, ClosedFormOracles) {
  Gen g(0x0c1e);
  auto oracles = harness::table_norm_oracles();
  oracles.push_back(harness::toeplitz_oracle(4));
  oracles.push_back(harness::triangular4_oracle());
  oracles.push_back(harness::triangular5_oracle());
  for (const auto& o : oracles) {
    auto a = alg::registry(o.algebra);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<cas::BigRational> c;
      for (std::size_t q = 0; q < o.members.size(); ++q) c.push_back(g.rational(3, 2));
      NormEvaluator ev(a, harness::oracle_metric(o, c));
      auto s = near_unit(a, g, 0.3);
      Point unit;
      for (const auto& x : a.unit()) unit.push_back(x.get_d());
      double expect = (harness::oracle_phi(o, c, s) - harness::oracle_phi(o, c, unit)) / a.unit_norm_sq().get_d();
      EXPECT_NEAR(ev.evaluate(s, tight()).log_value, expect, 1e-9) << o.algebra;
    }
  }
}

// Property battery over random members of every low-dimensional anti-rotor.
TEST(Norm, PropertyBattery) {
  Gen g(0xbeef);
  for (const auto& name : {"complex", "split-complex", "dual", "real-complex", "toeplitz:3", "matrix:2"}) {
    auto a = alg::registry(name);
    auto aff = skewer::normalized_subspace(a, skewer::anti_rotor(a));
    ASSERT_TRUE(aff.consistent);
    NormEvaluator ev(a, aff.particular);
    for (int trial = 0; trial < 3; ++trial) {
      auto s = near_unit(a, g, 0.25);
      EXPECT_TRUE(check_path_independence(ev, s, 1e-8).passed) << name;
      EXPECT_TRUE(check_homogeneity(ev, s, g.real(0.5, 2.0), 1e-8).passed) << name;
      auto r = check_reciprocity(ev, s, 1e-8);
      EXPECT_TRUE(r.passed) << name << ": " << r.detail;
      auto d = check_duality(ev, s, 1e-5);
      EXPECT_TRUE(d.passed) << name << ": " << d.detail;
    }
  }
}

TEST(Norm, GroupLaw) {
  auto a = alg::registry("real-complex");
  NormEvaluator e1(a, diag({1, 0, 0})), e2(a, diag({0, 1, -1}));
  Gen g(8);
  auto r = check_group_law(e1, e2, near_unit(a, g, 0.3), 1e-8);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Norm, EuclideanMetricOnDualIsPathDependent) {
  NormEvaluator ev(alg::registry("dual"), diag({1, 1}), false);
  auto r = check_path_independence(ev, {1.2, 0.3}, 1e-8);
  EXPECT_FALSE(r.passed);
}

TEST(Norm, InverseAndGradient) {
  auto a = alg::registry("complex");
  NormEvaluator ev(a, diag({1, -1}));
  auto inv = ev.inverse({3, 4});
  EXPECT_NEAR(inv[0], 3.0 / 25, 1e-14);
  EXPECT_NEAR(inv[1], -4.0 / 25, 1e-14);
  auto grad = ev.log_gradient({3, 4});
  EXPECT_NEAR(grad[0], 3.0 / 25, 1e-14);
  EXPECT_NEAR(grad[1], 4.0 / 25, 1e-14);
}

TEST(SpecialNorm, WitnessesAndStarMetrics) {
  for (const auto& name : alg::registry_catalog()) {
    auto e = alg::registry_entry(name);
    if (!e.witness && !e.star_metric) continue;
    auto r = check_special_vs_det(e, 1e-8, 5);
    EXPECT_TRUE(r.passed) << name << ": " << r.detail;
  }
}

TEST(SpecialNorm, QuaternionIsEuclideanLength) {
  auto e = alg::registry_entry("quaternion");
  ASSERT_TRUE(e.witness);
  NormEvaluator ev(e.algebra, alg::witness_metric(e.algebra, *e.witness));
  Point s{1.1, 0.2, -0.3, 0.4};
  double len = std::sqrt(1.21 + 0.04 + 0.09 + 0.16);
  EXPECT_NEAR(ev.evaluate(s, tight()).value, std::pow(len, ev.degree()), 1e-9);
}
