#include <gtest/gtest.h>

#include "antirotor/algebra/registry.hpp"
#include "antirotor/harness/oracles.hpp"
#include "antirotor/harness/trials.hpp"
#include "antirotor/invariants/invariants.hpp"
#include "generators.hpp"

using namespace antirotor;
using namespace antirotor::inv;
using antirotor::testing::Gen;

namespace {

MultiPoly var(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }

std::array<std::size_t, 6> sextuple_of(const InvariantReport& r) {
  return {r.m, r.max_rank.value, r.min_nonzero_rank.value, r.sensitive_param_count, r.variety.dim,
          r.variety.components};
}

// Independent oracle for the signature: eigenvalue signs of a 2 x 2 symmetric
// matrix from its trace and determinant.
Signature signature_2x2(const QMatrix& a) {
  cas::BigRational det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  cas::BigRational tr = a(0, 0) + a(1, 1);
  if (det < 0) return {1, 1, 0};
  if (det > 0) return tr > 0 ? Signature{2, 0, 0} : Signature{0, 2, 0};
  if (tr > 0) return {1, 0, 1};
  if (tr < 0) return {0, 1, 1};
  return {0, 0, 2};
}

}  // namespace

TEST(Signature, MatchesTwoByTwoOracle) {
  Gen g(3);
  for (int trial = 0; trial < 200; ++trial) {
    QMatrix a = cas::zero_qmatrix(2, 2);
    a(0, 0) = g.integer(-2, 2);
    a(1, 1) = g.integer(-2, 2);
    a(0, 1) = a(1, 0) = g.integer(-2, 2);
    auto s = signature(a), o = signature_2x2(a);
    EXPECT_EQ(s.positive, o.positive);
    EXPECT_EQ(s.negative, o.negative);
    EXPECT_EQ(s.zero, o.zero);
  }
}

TEST(SensitiveReduction, ConstantDirectionsDrop) {
  // (a + b)^2 c depends on two directions of three.
  auto a = var(3, 0), b = var(3, 1), c = var(3, 2);
  auto r = sensitive_reduction((a + b) * (a + b) * c);
  EXPECT_EQ(r.dim, 2u);
  EXPECT_EQ(r.reduced.num_vars(), 2u);
  EXPECT_EQ(r.reduced.total_degree(), 3);
}

// Property: the sensitive dimension is unchanged by an invertible linear
// substitution of the parameters.
TEST(SensitiveReduction, InvariantUnderLinearSubstitution) {
  Gen g(0x51);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 3;
    auto p = g.poly(n, 3, 2);
    auto k = harness::random_invertible(n, g.engine());
    std::vector<MultiPoly> sub;
    for (std::size_t i = 0; i < n; ++i) {
      MultiPoly acc(n);
      for (std::size_t j = 0; j < n; ++j) acc += MultiPoly::constant(n, k(i, j)) * var(n, j);
      sub.push_back(acc);
    }
    EXPECT_EQ(sensitive_reduction(p).dim, sensitive_reduction(p.compose(sub)).dim);
  }
}

TEST(Variety, ComplexDeterminantHasOnlyOrigin) {
  auto a = var(2, 0), b = var(2, 1);
  auto v = variety_summary(a * a + b * b);
  ASSERT_TRUE(v.supported);
  EXPECT_EQ(v.dim, 0u);
  EXPECT_EQ(v.components, 1u);
}

TEST(Variety, SplitComplexDeterminantIsTwoLines) {
  auto a = var(2, 0), b = var(2, 1);
  auto v = variety_summary(a * a - b * b);
  ASSERT_TRUE(v.supported);
  EXPECT_EQ(v.dim, 1u);
  EXPECT_EQ(v.components, 2u);
  EXPECT_EQ(v.linear_factors.size(), 2u);
}

TEST(Variety, ZeroDeterminant) {
  auto v = variety_summary(MultiPoly(3));
  EXPECT_EQ(v.shape, "zero");
}

TEST(Sextuple, ComplexDeterminant) {
  auto r = compute_invariants(alg::registry("complex"));
  auto a = var(2, 0), b = var(2, 1);
  EXPECT_EQ(r.det_poly, -(a * a) - b * b);
}

TEST(Sextuple, TableTwo) {
  for (const auto& row : harness::table_two_rows()) {
    auto r = compute_invariants(alg::registry(row.algebra));
    ASSERT_TRUE(row.sextuple);
    EXPECT_EQ(sextuple_of(r), *row.sextuple) << row.algebra;
    ASSERT_TRUE(r.tau);
    EXPECT_EQ((std::array<long, 3>{r.tau->reduced_rat, r.tau->reduced_log, r.tau->reduced_arc}), *row.reduced_tau)
        << row.algebra;
  }
}

TEST(Tau, TableOneRawTriples) {
  for (const auto& row : harness::table_one_rows()) {
    auto r = compute_invariants(alg::registry(row.algebra));
    ASSERT_TRUE(r.tau && row.raw_tau);
    EXPECT_EQ((std::array<std::size_t, 3>{r.tau->raw.rat, r.tau->raw.log, r.tau->raw.arc}), *row.raw_tau)
        << row.algebra;
    EXPECT_EQ(r.tau->method, "exact");
  }
}

TEST(Tau, LogPartIsPositiveForUnitalAssociative) {
  for (const auto& name : alg::low_dimensional_registry()) {
    auto r = compute_invariants(alg::registry(name));
    ASSERT_TRUE(r.tau) << name;
    EXPECT_GE(r.tau->raw.log, 1u) << name;
    EXPECT_EQ(r.tau->raw.rat + r.tau->raw.log + r.tau->raw.arc, r.m) << name;
  }
}

TEST(Invariants, RankBounds) {
  for (const auto& name : alg::registry_catalog()) {
    auto a = alg::registry(name);
    if (!a.unital() || a.dim() > 5) continue;
    auto r = compute_invariants(a);
    EXPECT_LE(1u, r.min_nonzero_rank.value) << name;
    EXPECT_LE(r.min_nonzero_rank.value, r.max_rank.value) << name;
    EXPECT_LE(r.max_rank.value, r.n) << name;
    EXPECT_LE(r.sensitive_param_count, r.m) << name;
  }
}

TEST(Invariants, NilpotentUsesPowerMode) {
  auto r = compute_invariants(alg::registry("nilpotent-3"), skewer::Mode::power(2));
  EXPECT_EQ(r.m, 3u);
  EXPECT_FALSE(r.tau);
}

// Property: certified invariants agree across random bases.
TEST(Invariants, CertifiedFieldsSurviveBasisChange) {
  Gen g(0x5eed);
  for (const auto& name : {"complex", "split-complex", "dual", "real-dual", "trivial-extension:3"}) {
    auto a = alg::registry(name);
    auto base = certified_fields(compute_invariants(a));
    for (int trial = 0; trial < 8; ++trial) {
      auto k = harness::random_invertible(a.dim(), g.engine());
      auto other = certified_fields(compute_invariants(alg::transform(a, k)));
      EXPECT_TRUE(certified_agree(base, other)) << name << "\n" << base.dump() << "\n" << other.dump();
      EXPECT_EQ(base["sensitive_param_count"], other["sensitive_param_count"]) << name;
    }
  }
}

TEST(Compare, SeparatesComplexAndDual) {
  auto v = compare(compute_invariants(alg::registry("complex")), compute_invariants(alg::registry("dual")));
  EXPECT_TRUE(v.not_isomorphic);
  EXPECT_FALSE(v.witnesses.empty());
}

TEST(Compare, SplitComplexMatchesDirectProduct) {
  auto v = compare(compute_invariants(alg::registry("split-complex")),
                   compute_invariants(alg::registry("direct-product:2")));
  EXPECT_FALSE(v.not_isomorphic);
}

TEST(Compare, SplitComplexAndDualDifferInTau) {
  auto v = compare(compute_invariants(alg::registry("split-complex")), compute_invariants(alg::registry("dual")));
  EXPECT_TRUE(v.not_isomorphic);
  bool tau_witness = false;
  for (const auto& w : v.witnesses) tau_witness = tau_witness || w.find("tau") != std::string::npos;
  EXPECT_TRUE(tau_witness);
}

TEST(Epimorphism, LargerTargetExcluded) {
  auto m2 = compute_invariants(alg::registry("matrix:2"));
  auto c = compute_invariants(alg::registry("complex"));
  auto v = epimorphism_dim_check(m2, c);
  EXPECT_TRUE(v.excluded);
  EXPECT_TRUE(v.a_simple);
  EXPECT_FALSE(epimorphism_dim_check(c, m2).excluded);
}

TEST(Json, ReportCarriesSextupleAndTau) {
  auto j = report_to_json(compute_invariants(alg::registry("toeplitz:3")));
  EXPECT_EQ(j["sextuple"], nlohmann::json({3, 3, 1, 1, 0, 1}));
  EXPECT_EQ(j["tau_reduced"], nlohmann::json({2, 0, 0}));
}
