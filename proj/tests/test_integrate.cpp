#include <gtest/gtest.h>

#include <cmath>

#include "antirotor/cas/integrate.hpp"
#include "antirotor/errors.hpp"
#include "generators.hpp"

using namespace antirotor::cas;
using antirotor::testing::Gen;

namespace {

UPoly P(std::initializer_list<long> c) {
  std::vector<BigRational> v;
  for (long x : c) v.emplace_back(x);
  return UPoly(v);
}

MultiPoly as_multi(const UPoly& p) {
  std::vector<MultiPoly::Term> terms;
  for (int i = 0; i <= p.degree(); ++i) terms.emplace_back(Monomial(std::vector<std::uint32_t>{static_cast<std::uint32_t>(i)}), p.coeff(i));
  return MultiPoly::from_terms(1, std::move(terms));
}

TermClassSummary classify(const UPoly& num, const UPoly& den) {
  return univariate_real_factor_classify(as_multi(num), as_multi(den), 0);
}

// Independent quadrature oracle: composite 10-point Gauss-Legendre.
double quadrature(const UPoly& num, const UPoly& den, double a, double b) {
  static const double x[] = {0.1488743389816312, 0.4333953941292472, 0.6794095682990244,
                             0.8650633666889845, 0.9739065285171717};
  static const double w[] = {0.2955242247147529, 0.2692667193099963, 0.2190863625159820,
                             0.1494513491505806, 0.0666713443086881};
  const int panels = 400;
  double h = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    double mid = a + (p + 0.5) * h;
    for (int k = 0; k < 5; ++k) {
      for (double s : {-1.0, 1.0}) {
        double t = mid + s * x[k] * h / 2;
        sum += w[k] * num.evaluate(t) / den.evaluate(t) * h / 2;
      }
    }
  }
  return sum;
}

}  // namespace

TEST(Classify, SpecExamples) {
  auto log_only = classify(P({1}), P({0, 1}));
  EXPECT_FALSE(log_only.has_rational);
  EXPECT_TRUE(log_only.has_log);
  EXPECT_FALSE(log_only.has_arctan);

  auto rational_only = classify(P({1}), P({0, 0, 1}));
  EXPECT_TRUE(rational_only.has_rational);
  EXPECT_FALSE(rational_only.has_log);
  EXPECT_FALSE(rational_only.has_arctan);

  auto arctan_only = classify(P({1}), P({1, 0, 1}));
  EXPECT_FALSE(arctan_only.has_rational);
  EXPECT_FALSE(arctan_only.has_log);
  EXPECT_TRUE(arctan_only.has_arctan);
}

TEST(Classify, DerivativeProportionalNumeratorHasNoArctan) {
  // t / (t^2 + 1) integrates to log(t^2 + 1) / 2.
  auto s = classify(P({0, 1}), P({1, 0, 1}));
  EXPECT_TRUE(s.has_log);
  EXPECT_FALSE(s.has_arctan);
}

TEST(Classify, ConstantPolynomialPartCountsAsRational) {
  // (t + 1) / t = 1 + 1/t
  auto s = classify(P({1, 1}), P({0, 1}));
  EXPECT_TRUE(s.has_rational);
  EXPECT_TRUE(s.has_log);
}

TEST(Classify, ZeroDenominatorIsDomainError) {
  EXPECT_THROW(classify(P({1}), UPoly()), antirotor::DomainError);
}

TEST(Classify, IrreducibleCubicWithComplexPair) {
  // 1/(t^3 - 2): one real root and a complex pair, both term kinds appear.
  auto s = classify(P({1}), P({-2, 0, 0, 1}));
  EXPECT_TRUE(s.has_log);
  EXPECT_TRUE(s.has_arctan);
  EXPECT_FALSE(s.undecided);
}

TEST(Integrator, FactorShapes) {
  // (t - 1)^2 (t^2 + 1) (t^2 - 2)
  UPoly den = P({-1, 1}) * P({-1, 1}) * P({1, 0, 1}) * P({-2, 0, 1});
  RationalIntegrator integ(den);
  const auto& f = integ.factors();
  ASSERT_EQ(f.size(), 3U);  // t - 1 and the quartic split into two quadratics
  EXPECT_TRUE(integ.all_exact());
}

TEST(Integrator, ReconstructedAntiderivativeMatchesQuadrature) {
  Gen g(4242);
  const std::vector<UPoly> pieces = {P({2, 1}),     P({3, 1}),     P({1, 0, 1}),    P({5, 2, 1}),
                                     P({2, 0, 0, 1}), P({-6, 0, 1}), P({13, 4, 1}),   P({3, 0, 0, 0, 1})};
  for (int trial = 0; trial < 40; ++trial) {
    UPoly den = UPoly::constant(BigRational(g.integer(1, 3)));
    int count = static_cast<int>(g.integer(1, 3));
    for (int k = 0; k < count; ++k) {
      UPoly f = pieces[static_cast<std::size_t>(g.integer(0, static_cast<long>(pieces.size()) - 1))];
      den = den * f;
      if (g.integer(0, 3) == 0) den = den * f;
    }
    std::vector<BigRational> nc(static_cast<std::size_t>(g.integer(1, den.degree() + 2)));
    for (auto& c : nc) c = g.rational(4, 3);
    UPoly num(nc);
    // All real roots of the pieces lie outside [0, 1].
    RationalIntegrator integ(den);
    double exact = integ.antiderivative(num, 1.0) - integ.antiderivative(num, 0.0);
    double quad = quadrature(num, den, 0.0, 1.0);
    EXPECT_NEAR(exact, quad, 1e-8 * std::max(1.0, std::fabs(quad))) << "trial " << trial;
  }
}

TEST(Integrator, CoordinatesAreLinearInNumerator) {
  UPoly den = P({1, 0, 1}) * P({2, 1}) * P({2, 1});
  RationalIntegrator integ(den);
  UPoly a = P({1, 2, 0, 1}), b = P({-3, 0, 5});
  auto ta = integ.integrate(a), tb = integ.integrate(b), tab = integ.integrate(a + b);
  ASSERT_EQ(ta.log_exact.size(), tab.log_exact.size());
  for (std::size_t i = 0; i < ta.log_exact.size(); ++i) EXPECT_EQ(ta.log_exact[i] + tb.log_exact[i], tab.log_exact[i]);
  for (std::size_t i = 0; i < ta.arctan_exact.size(); ++i) {
    EXPECT_EQ(ta.arctan_exact[i] + tb.arctan_exact[i], tab.arctan_exact[i]);
  }
}
