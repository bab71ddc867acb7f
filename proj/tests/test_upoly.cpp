#include <gtest/gtest.h>

#include <cmath>

#include "antirotor/cas/upoly.hpp"
#include "generators.hpp"

using namespace antirotor::cas;
using antirotor::testing::Gen;

namespace {

UPoly P(std::initializer_list<long> c) {
  std::vector<BigRational> v;
  for (long x : c) v.emplace_back(x);
  return UPoly(v);
}

UPoly product(const std::vector<UPoly>& fs) {
  UPoly r = UPoly::constant(1);
  for (const auto& f : fs) r = r * f;
  return r;
}

}  // namespace

TEST(UPoly, DivmodReconstructs) {
  Gen g(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<BigRational> a(static_cast<std::size_t>(g.integer(1, 7))), b(static_cast<std::size_t>(g.integer(1, 4)));
    for (auto& c : a) c = g.rational();
    for (auto& c : b) c = g.rational();
    UPoly pa(a), pb(b);
    if (pb.is_zero()) continue;
    auto [q, r] = divmod(pa, pb);
    EXPECT_EQ(q * pb + r, pa);
    EXPECT_LT(r.degree(), pb.degree());
  }
}

TEST(UPoly, GcdOfProducts) {
  UPoly common = P({-2, 0, 1});  // t^2 - 2
  UPoly a = common * P({1, 1});
  UPoly b = common * P({3, 0, 1});
  EXPECT_EQ(gcd(a, b), common);
}

TEST(UPoly, SquarefreeDecompositionMatchesConstruction) {
  // (t - 1) (t^2 + 1)^2 (t + 3)^3
  UPoly f1 = P({-1, 1}), f2 = P({1, 0, 1}), f3 = P({3, 1});
  UPoly p = f1 * f2 * f2 * f3 * f3 * f3;
  auto parts = squarefree_decomposition(p * BigRational(5));
  ASSERT_EQ(parts.size(), 3U);
  EXPECT_EQ(parts[0], f1);
  EXPECT_EQ(parts[1], f2);
  EXPECT_EQ(parts[2], f3);
}

TEST(UPoly, RationalRootsByRationalRootTheorem) {
  UPoly p = P({-3, 2}) * P({1, 4}) * P({0, 1}) * P({2, 0, 1});  // (2t-3)(4t+1) t (t^2+2)
  auto roots = rational_roots(p);
  ASSERT_EQ(roots.size(), 3U);
  EXPECT_EQ(roots[0], make_rational(-1, 4));
  EXPECT_EQ(roots[1], BigRational(0));
  EXPECT_EQ(roots[2], make_rational(3, 2));
}

TEST(UPoly, SturmCountsDistinctRealRoots) {
  EXPECT_EQ(count_real_roots(P({1, 0, 1})), 0);
  EXPECT_EQ(count_real_roots(P({-2, 0, 1})), 2);
  EXPECT_EQ(count_real_roots(P({-2, 0, 0, 1})), 1);                // t^3 - 2
  EXPECT_EQ(count_real_roots(P({1, -3, 0, 1})), 3);                // t^3 - 3t + 1
  EXPECT_EQ(count_real_roots(P({-1, 0, 0, 0, 0, 1})), 1);          // t^5 - 1
  EXPECT_EQ(count_real_roots(P({-1, 1}) * P({-1, 1}) * P({2, 1})), 2);
}

TEST(UPoly, NumericRootsSatisfyPolynomial) {
  UPoly p = P({1, -3, 0, 1}) * P({5, 2, 1});
  auto roots = numeric_roots(p);
  ASSERT_EQ(roots.size(), 5U);
  for (const auto& r : roots) EXPECT_LT(std::abs(p.evaluate(r)), 1e-12L);
}

TEST(UPoly, QuarticSplitsIntoRationalQuadratics) {
  UPoly q1 = P({2, 0, 1}), q2 = P({3, 2, 1});  // t^2+2, t^2+2t+3
  auto parts = split_rational_irreducible(q1 * q2);
  ASSERT_EQ(parts.size(), 2U);
  EXPECT_EQ(product(parts), (q1 * q2).monic());
  // Biquadratic with Q = 0: (t^2 - 2)(t^2 - 3)
  auto bi = split_rational_irreducible(P({-2, 0, 1}) * P({-3, 0, 1}));
  EXPECT_EQ(bi.size(), 2U);
  // t^4 + 1 is irreducible over Q.
  EXPECT_EQ(split_rational_irreducible(P({1, 0, 0, 0, 1})).size(), 1U);
  // t^4 + 4 = (t^2 + 2t + 2)(t^2 - 2t + 2).
  EXPECT_EQ(split_rational_irreducible(P({4, 0, 0, 0, 1})).size(), 2U);
}
