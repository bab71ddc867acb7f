#include <gtest/gtest.h>

#include <filesystem>

#include "antirotor/algebra/algebra.hpp"
#include "antirotor/algebra/io.hpp"
#include "antirotor/algebra/registry.hpp"
#include "antirotor/errors.hpp"
#include "generators.hpp"

using namespace antirotor;
using namespace antirotor::alg;
using antirotor::testing::Gen;

namespace {

QVector basis(std::size_t n, std::size_t i) {
  QVector e(n, BigRational(0));
  e[i] = 1;
  return e;
}

QVector random_vector(Gen& g, std::size_t n) {
  QVector v(n);
  for (auto& x : v) x = g.rational();
  return v;
}

// Independent oracle: triple products of basis elements built from c directly.
bool associative_by_triples(const Algebra& a) {
  std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t r = 0; r < n; ++r) {
          BigRational left = 0, right = 0;
          for (std::size_t p = 0; p < n; ++p) {
            left += a.c(i, j, p) * a.c(p, k, r);
            right += a.c(j, k, p) * a.c(i, p, r);
          }
          if (left != right) return false;
        }
      }
    }
  }
  return true;
}

QVector evaluate_field(const RationalVectorField& f, const QVector& s) {
  BigRational q = f.denominator.evaluate(s);
  QVector out;
  for (const auto& p : f.numerators) out.push_back(BigRational(p.evaluate(s) / q));
  return out;
}

std::vector<BigRational> complex_structure() {
  // e0 = 1, e1 = i
  return {1, 0, 0, 1, 0, 1, -1, 0};
}

}  // namespace

TEST(Algebra, ComplexValidation) {
  auto c = Algebra::create("c", 2, complex_structure());
  auto v = validate(c);
  EXPECT_TRUE(v.associative);
  EXPECT_TRUE(v.commutative);
  ASSERT_TRUE(v.unit);
  EXPECT_EQ(*v.unit, (QVector{1, 0}));
  EXPECT_EQ(*v.unit_norm_sq, 1);
}

TEST(Algebra, NilpotentIsNotUnital) {
  auto a = registry("nilpotent-3");
  EXPECT_TRUE(a.associative());
  EXPECT_FALSE(a.unital());
  EXPECT_THROW(a.unit(), DomainError);
  EXPECT_THROW(symbolic_inverse(a), DomainError);
}

TEST(Algebra, WrongStructureSizeIsUsageError) {
  EXPECT_THROW(Algebra::create("bad", 2, {1, 0, 0}), UsageError);
}

TEST(Algebra, SuppliedNonUnitRejected) {
  EXPECT_ANY_THROW(Algebra::create("c", 2, complex_structure(), QVector{0, 1}));
}

TEST(Algebra, OctonionsAreNotAssociative) {
  auto o = registry("cayley-dickson:3");
  EXPECT_FALSE(o.associative());
  EXPECT_FALSE(associative_by_triples(o));
  EXPECT_FALSE(validate(o).warnings.empty());
}

TEST(Registry, AssociativityFlagMatchesTripleOracle) {
  for (const auto& name : registry_catalog()) {
    auto a = registry(name);
    EXPECT_EQ(a.associative(), associative_by_triples(a)) << name;
  }
}

TEST(Registry, UnitIsTwoSided) {
  for (const auto& name : registry_catalog()) {
    auto a = registry(name);
    if (!a.unital()) continue;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      auto e = basis(a.dim(), i);
      EXPECT_EQ(a.multiply(a.unit(), e), e) << name;
      EXPECT_EQ(a.multiply(e, a.unit()), e) << name;
    }
  }
}

TEST(Registry, UnknownNameIsUsageError) {
  EXPECT_THROW(registry("no-such-algebra"), UsageError);
  EXPECT_THROW(registry("matrix:0"), UsageError);
}

TEST(Registry, WitnessesVerify) {
  for (const auto& name : registry_catalog()) {
    auto e = registry_entry(name);
    if (e.witness) EXPECT_TRUE(verify_witness(e.algebra, *e.witness)) << name;
  }
}

TEST(Registry, JsonRoundTripIsExact) {
  for (const auto& name : registry_catalog()) {
    auto a = registry(name);
    auto b = algebra_from_json(algebra_to_json(a));
    EXPECT_TRUE(a.same_structure(b)) << name;
    EXPECT_EQ(a.name(), b.name());
  }
}

TEST(Registry, FileRoundTrip) {
  auto path = std::filesystem::temp_directory_path() / "antirotor_test_algebra.json";
  auto a = registry("real-dual");
  save_algebra(a, path.string());
  auto b = load_algebra(path.string());
  EXPECT_TRUE(a.same_structure(b));
  std::filesystem::remove(path);
}

TEST(Io, MalformedJsonRejected) {
  EXPECT_ANY_THROW(algebra_from_json(nlohmann::json::parse(R"({"name":"x","dim":2})")));
}

TEST(LeftRegularRep, ActsAsLeftMultiplication) {
  Gen g(11);
  for (const auto& name : {"complex", "toeplitz:3", "quaternion", "matrix:2"}) {
    auto a = registry(name);
    auto l = left_regular_rep(a);
    for (int trial = 0; trial < 5; ++trial) {
      auto s = random_vector(g, a.dim()), y = random_vector(g, a.dim());
      QMatrix ls = cas::zero_qmatrix(a.dim(), a.dim());
      for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) ls(i, j) = l(i, j).evaluate(s);
      }
      EXPECT_EQ(cas::mat_vec(ls, y), a.multiply(s, y)) << name;
    }
  }
}

// Property: s * s^-1 = 1 exactly at random rational points, for every unital
// registry algebra including the left-solve ones.
TEST(SymbolicInverse, TimesElementIsUnit) {
  Gen g(0x1234);
  for (const auto& name : registry_catalog()) {
    auto a = registry(name);
    if (!a.unital()) continue;
    auto inv = symbolic_inverse(a);
    for (int trial = 0; trial < 4; ++trial) {
      auto s = random_vector(g, a.dim());
      for (std::size_t i = 0; i < a.dim(); ++i) s[i] += 2 * a.unit()[i];
      if (inv.denominator.evaluate(s) == 0) continue;
      EXPECT_EQ(a.multiply(s, evaluate_field(inv, s)), a.unit()) << name;
    }
  }
}

TEST(SymbolicPower, MatchesRepeatedProduct) {
  Gen g(0x77);
  auto a = registry("toeplitz:3");
  for (int j : {2, 3, -2}) {
    auto f = symbolic_power(a, j);
    auto s = random_vector(g, 3);
    s[0] += 3;
    QVector expect = a.unit();
    QVector base = j > 0 ? s : evaluate_field(symbolic_inverse(a), s);
    for (int k = 0; k < std::abs(j); ++k) expect = a.multiply(expect, base);
    EXPECT_EQ(evaluate_field(f, s), expect) << j;
  }
  EXPECT_ANY_THROW(symbolic_power(a, 0));
}

// Property: K is an isomorphism from A onto transform(A, K).
TEST(Transform, IsHomomorphism) {
  Gen g(0x99);
  for (const auto& name : {"complex", "dual", "real-complex", "quaternion"}) {
    auto a = registry(name);
    for (int trial = 0; trial < 5; ++trial) {
      QMatrix k = g.qmatrix(a.dim(), a.dim());
      if (cas::det_exact(k) == 0) continue;
      auto b = transform(a, k);
      auto x = random_vector(g, a.dim()), y = random_vector(g, a.dim());
      EXPECT_EQ(cas::mat_vec(k, a.multiply(x, y)), b.multiply(cas::mat_vec(k, x), cas::mat_vec(k, y))) << name;
      EXPECT_EQ(b.unit(), cas::mat_vec(k, a.unit()));
    }
  }
}

TEST(Transform, SingularIsDomainError) {
  auto a = registry("complex");
  QMatrix k = cas::zero_qmatrix(2, 2);
  k(0, 0) = 1;
  k(0, 1) = 1;
  k(1, 0) = 1;
  k(1, 1) = 1;
  EXPECT_THROW(transform(a, k), DomainError);
}

TEST(VecLeftRep, ReproducesLeftRegularRep) {
  auto a = registry("upper-triangular-2x2");
  auto iv = vec_left_rep(a);
  QVector s{2, 3, 5};
  auto v = cas::mat_vec(iv, s);
  auto l = left_regular_rep(a);
  for (std::size_t col = 0; col < 3; ++col) {
    for (std::size_t row = 0; row < 3; ++row) EXPECT_EQ(v[col * 3 + row], l(row, col).evaluate(s));
  }
}
