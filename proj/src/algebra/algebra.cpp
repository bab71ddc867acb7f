#include "antirotor/algebra/algebra.hpp"

#include <random>

#include "antirotor/errors.hpp"

namespace antirotor::alg {

using cas::BigInt;
using cas::EchelonBasis;

namespace {

bool is_two_sided_unit(std::size_t n, const std::vector<BigRational>& c, const QVector& u) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      BigRational left = 0;
      BigRational right = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (u[j] == 0) continue;
        left += u[j] * c[(j * n + i) * n + k];
        right += u[j] * c[(i * n + j) * n + k];
      }
      BigRational expect = i == k ? 1 : 0;
      if (left != expect || right != expect) return false;
    }
  }
  return true;
}

std::optional<QVector> solve_unit(std::size_t n, const std::vector<BigRational>& c) {
  // u e_i = e_i and e_i u = e_i: 2 n^2 linear equations in the n entries of u.
  QMatrix a = cas::zero_qmatrix(2 * n * n, n);
  QVector b(2 * n * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        a(row, j) = c[(j * n + i) * n + k];
        a(row + 1, j) = c[(i * n + j) * n + k];
      }
      b[row] = i == k ? 1 : 0;
      b[row + 1] = b[row];
      row += 2;
    }
  }
  auto sol = cas::solve_exact(a, b);
  if (!sol) return std::nullopt;
  if (cas::rank_exact(a) < n) throw DomainError("unit is not unique");
  return sol;
}

bool check_associative(std::size_t n, const std::vector<BigRational>& c) {
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const BigRational& { return c[(i * n + j) * n + k]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t out = 0; out < n; ++out) {
          BigRational lhs = 0;
          BigRational rhs = 0;
          for (std::size_t m = 0; m < n; ++m) {
            if (at(i, j, m) != 0) lhs += at(i, j, m) * at(m, k, out);
            if (at(j, k, m) != 0) rhs += at(j, k, m) * at(i, m, out);
          }
          if (lhs != rhs) return false;
        }
      }
    }
  }
  return true;
}

std::vector<MultiPoly> coordinate_vector(std::size_t n) {
  std::vector<MultiPoly> s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(MultiPoly::variable(n, i));
  return s;
}

std::vector<MultiPoly> constant_vector(std::size_t n, const QVector& v) {
  std::vector<MultiPoly> out;
  for (const auto& x : v) out.push_back(MultiPoly::constant(n, x));
  return out;
}

// Divides every component and the denominator by their common rational content
// and makes the denominator's leading coefficient positive.
void normalize_field(RationalVectorField& f) {
  BigInt g = 0;
  BigInt l = 1;
  auto absorb = [&](const MultiPoly& p) {
    if (p.is_zero()) return;
    BigRational c = p.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  };
  for (const auto& p : f.numerators) absorb(p);
  absorb(f.denominator);
  BigRational scale = cas::make_rational(l, g);
  if (f.denominator.leading_term().second < 0) scale = -scale;
  for (auto& p : f.numerators) p *= scale;
  f.denominator *= scale;
}

// Removes a common polynomial factor when `candidate` divides everything.
bool cancel_common(RationalVectorField& f, const MultiPoly& candidate) {
  if (candidate.is_constant()) return false;
  std::vector<MultiPoly> nums;
  for (const auto& p : f.numerators) {
    auto q = cas::divide_exact(p, candidate);
    if (!q) return false;
    nums.push_back(std::move(*q));
  }
  auto q = cas::divide_exact(f.denominator, candidate);
  if (!q) return false;
  f.numerators = std::move(nums);
  f.denominator = std::move(*q);
  return true;
}

// Greatest common monomial of all terms in the field.
MultiPoly common_monomial(const RationalVectorField& f, std::size_t n) {
  std::vector<std::uint32_t> e(n, UINT32_MAX);
  auto absorb = [&](const MultiPoly& p) {
    for (const auto& [m, c] : p.terms()) {
      for (std::size_t i = 0; i < n; ++i) e[i] = std::min(e[i], m[i]);
    }
  };
  for (const auto& p : f.numerators) absorb(p);
  absorb(f.denominator);
  for (auto& x : e) {
    if (x == UINT32_MAX) x = 0;
  }
  return MultiPoly::monomial(cas::Monomial(e), 1);
}

bool satisfies_inverse_identity(const Algebra& alg, const PMatrix& ls, const RationalVectorField& f) {
  std::size_t n = alg.dim();
  for (std::size_t k = 0; k < n; ++k) {
    MultiPoly lhs(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (!ls(k, j).is_zero() && !f.numerators[j].is_zero()) lhs += ls(k, j) * f.numerators[j];
    }
    if (!(lhs == f.denominator * alg.unit()[k])) return false;
  }
  return true;
}

std::vector<QVector> evaluate_vectors(const std::vector<std::vector<MultiPoly>>& vs, const QVector& pt) {
  std::vector<QVector> out;
  for (const auto& v : vs) {
    QVector e;
    for (const auto& p : v) e.push_back(p.evaluate(pt));
    out.push_back(std::move(e));
  }
  return out;
}

// Inverse from the generic minimal polynomial s^d = sum_{i<d} c_i s^i, valid
// for power-associative algebras.  Returns nullopt when the identity cannot
// be established exactly.
std::optional<RationalVectorField> inverse_by_minimal_polynomial(const Algebra& alg) {
  std::size_t n = alg.dim();
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long> dist(-97, 97);
  std::vector<QVector> points(2, QVector(n));
  for (auto& pt : points) {
    for (auto& x : pt) x = dist(rng);
  }
  std::vector<std::vector<MultiPoly>> powers{constant_vector(n, alg.unit())};
  std::vector<MultiPoly> s = coordinate_vector(n);
  std::size_t d = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    powers.push_back(alg.multiply(powers.back(), s));
    std::size_t generic_rank = 0;
    for (const auto& pt : points) {
      auto vals = evaluate_vectors(powers, pt);
      EchelonBasis e(n);
      for (auto& v : vals) e.add_row(v);
      generic_rank = std::max(generic_rank, e.rank());
    }
    if (generic_rank < powers.size()) {
      d = k;
      break;
    }
  }
  if (d == 0) return std::nullopt;

  // Choose d coordinate rows on which 1, s, ..., s^{d-1} are independent.
  auto vals = evaluate_vectors(powers, points[0]);
  std::vector<std::size_t> rows;
  {
    EchelonBasis e(d);
    for (std::size_t r = 0; r < n && rows.size() < d; ++r) {
      QVector row(d);
      for (std::size_t i = 0; i < d; ++i) row[i] = vals[i][r];
      if (e.add_row(row)) rows.push_back(r);
    }
  }
  if (rows.size() < d) return std::nullopt;
  PMatrix a = cas::zero_pmatrix(d, d, n);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t i = 0; i < d; ++i) a(r, i) = powers[i][rows[r]];
  }
  MultiPoly det_a = cas::det_poly(a);
  if (det_a.is_zero()) return std::nullopt;
  std::vector<MultiPoly> cramer;
  for (std::size_t i = 0; i < d; ++i) {
    PMatrix ai = a;
    for (std::size_t r = 0; r < d; ++r) ai(r, i) = powers[d][rows[r]];
    cramer.push_back(cas::det_poly(ai));
  }
  // Check det_a s^d = sum_i cramer_i s^i on every coordinate.
  for (std::size_t k = 0; k < n; ++k) {
    MultiPoly lhs = det_a * powers[d][k];
    MultiPoly rhs(n);
    for (std::size_t i = 0; i < d; ++i) rhs += cramer[i] * powers[i][k];
    if (!(lhs == rhs)) return std::nullopt;
  }
  if (cramer[0].is_zero()) return std::nullopt;
  // s^{-1} = (det_a s^{d-1} - sum_{i=1}^{d-1} cramer_i s^{i-1}) / cramer_0.
  RationalVectorField f;
  f.kind = RationalVectorField::Kind::inverse;
  f.method = "minimal-polynomial";
  f.denominator = cramer[0];
  for (std::size_t k = 0; k < n; ++k) {
    MultiPoly p = det_a * powers[d - 1][k];
    for (std::size_t i = 1; i < d; ++i) p -= cramer[i] * powers[i - 1][k];
    f.numerators.push_back(std::move(p));
  }
  cancel_common(f, det_a);
  cancel_common(f, common_monomial(f, n));
  normalize_field(f);
  return f;
}

RationalVectorField inverse_by_adjugate(const Algebra& alg, const PMatrix& ls) {
  std::size_t n = alg.dim();
  RationalVectorField f;
  f.kind = RationalVectorField::Kind::inverse;
  f.method = "adjugate";
  f.denominator = cas::det_poly(ls);
  if (f.denominator.is_zero()) throw DomainError("no generic inverse: det(L_s) is identically zero");
  // Cramer: p_k = det(L_s with column k replaced by the unit) = (Adj(L_s) 1)_k.
  for (std::size_t k = 0; k < n; ++k) {
    PMatrix m = ls;
    for (std::size_t r = 0; r < n; ++r) m(r, k) = MultiPoly::constant(n, alg.unit()[r]);
    f.numerators.push_back(cas::det_poly(m));
  }
  cancel_common(f, common_monomial(f, n));
  normalize_field(f);
  return f;
}

}  // namespace

Algebra Algebra::create(std::string name, std::size_t dim, std::vector<BigRational> structure,
                        std::optional<QVector> unit) {
  if (dim == 0) throw UsageError("algebra dimension must be at least 1");
  if (structure.size() != dim * dim * dim) throw UsageError("structure array must have shape n x n x n");
  Algebra a;
  a.name_ = std::move(name);
  a.dim_ = dim;
  a.structure_ = std::move(structure);
  a.associative_ = check_associative(dim, a.structure_);
  if (unit) {
    if (unit->size() != dim) throw UsageError("unit has wrong length");
    if (!is_two_sided_unit(dim, a.structure_, *unit)) throw DomainError("supplied unit is not a two-sided unit");
    a.unit_ = std::move(unit);
  } else {
    a.unit_ = solve_unit(dim, a.structure_);
  }
  return a;
}

const QVector& Algebra::unit() const {
  if (!unit_) throw DomainError("algebra '" + name_ + "' has no unit");
  return *unit_;
}

BigRational Algebra::unit_norm_sq() const {
  BigRational s = 0;
  for (const auto& x : unit()) s += x * x;
  return s;
}

QVector Algebra::multiply(const QVector& a, const QVector& b) const {
  QVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      BigRational ab = a[i] * b[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (c(i, j, k) != 0) out[k] += ab * c(i, j, k);
      }
    }
  }
  return out;
}

std::vector<MultiPoly> Algebra::multiply(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) const {
  std::size_t nv = a.empty() ? 0 : a[0].num_vars();
  std::vector<MultiPoly> out(dim_, MultiPoly(nv));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      bool any = false;
      for (std::size_t k = 0; k < dim_ && !any; ++k) any = c(i, j, k) != 0;
      if (!any) continue;
      MultiPoly ab = a[i] * b[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (c(i, j, k) != 0) out[k] += ab * c(i, j, k);
      }
    }
  }
  return out;
}

std::vector<double> Algebra::multiply(const std::vector<double>& a, const std::vector<double>& b) const {
  std::vector<double> out(dim_, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      double ab = a[i] * b[j];
      if (ab == 0.0) continue;
      for (std::size_t k = 0; k < dim_; ++k) {
        if (c(i, j, k) != 0) out[k] += ab * c(i, j, k).get_d();
      }
    }
  }
  return out;
}

Algebra Algebra::renamed(std::string name) const {
  Algebra a(*this);
  a.name_ = std::move(name);
  return a;
}

bool Algebra::same_structure(const Algebra& other) const {
  return dim_ == other.dim_ && structure_ == other.structure_ && unit_ == other.unit_;
}

ValidationReport validate(const Algebra& alg) {
  ValidationReport r;
  r.associative = alg.associative();
  r.unital = alg.unital();
  std::size_t n = alg.dim();
  r.commutative = true;
  for (std::size_t i = 0; i < n && r.commutative; ++i) {
    for (std::size_t j = 0; j < n && r.commutative; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (alg.c(i, j, k) != alg.c(j, i, k)) {
          r.commutative = false;
          break;
        }
      }
    }
  }
  if (alg.unital()) {
    r.unit = alg.unit();
    r.unit_norm_sq = alg.unit_norm_sq();
  } else {
    r.warnings.push_back("no two-sided unit: only power-map mode is available");
  }
  if (!alg.associative()) {
    r.warnings.push_back("not associative: inverses are computed as the left-solve L_s^{-1} 1");
  }
  return r;
}

PMatrix left_regular_rep(const Algebra& alg) {
  std::size_t n = alg.dim();
  PMatrix l = cas::zero_pmatrix(n, n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      MultiPoly e(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (alg.c(i, j, k) != 0) e += MultiPoly::variable(n, i) * alg.c(i, j, k);
      }
      l(k, j) = std::move(e);
    }
  }
  return l;
}

cas::DMatrix left_regular_rep(const Algebra& alg, const std::vector<double>& s) {
  std::size_t n = alg.dim();
  cas::DMatrix l(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (alg.c(i, j, k) != 0) l(k, j) += s[i] * alg.c(i, j, k).get_d();
      }
    }
  }
  return l;
}

std::vector<double> RationalVectorField::evaluate(const std::vector<double>& point) const {
  double q = denominator.evaluate(point);
  std::vector<double> out;
  for (const auto& p : numerators) out.push_back(p.evaluate(point) / q);
  return out;
}

RationalVectorField symbolic_inverse(const Algebra& alg) {
  if (!alg.unital()) throw DomainError("inverse requested for a non-unital algebra");
  PMatrix ls = left_regular_rep(alg);
  std::optional<RationalVectorField> f = inverse_by_minimal_polynomial(alg);
  if (!f || !satisfies_inverse_identity(alg, ls, *f)) f = inverse_by_adjugate(alg, ls);
  if (!satisfies_inverse_identity(alg, ls, *f)) {
    throw VerificationError("symbolic inverse fails L_s p = q 1");
  }
  f->left_solve = !alg.associative();
  f->exponent = -1;
  return *f;
}

RationalVectorField symbolic_power(const Algebra& alg, int j) {
  std::size_t n = alg.dim();
  if (j == 0) throw UsageError("power 0 is the constant unit field");
  if (j < 0) {
    RationalVectorField inv = symbolic_inverse(alg);
    RationalVectorField f = inv;
    for (int k = 1; k < -j; ++k) {
      f.numerators = alg.multiply(f.numerators, inv.numerators);
      f.denominator *= inv.denominator;
    }
    f.kind = j == -1 ? RationalVectorField::Kind::inverse : RationalVectorField::Kind::power;
    f.exponent = j;
    normalize_field(f);
    return f;
  }
  RationalVectorField f;
  f.kind = RationalVectorField::Kind::power;
  f.exponent = j;
  f.method = "product";
  f.numerators = coordinate_vector(n);
  std::vector<MultiPoly> s = f.numerators;
  for (int k = 1; k < j; ++k) f.numerators = alg.multiply(f.numerators, s);
  f.denominator = MultiPoly::constant(n, 1);
  return f;
}

Algebra transform(const Algebra& alg, const QMatrix& k) {
  std::size_t n = alg.dim();
  if (k.rows() != n || k.cols() != n) throw UsageError("transform matrix has wrong shape");
  auto kinv = cas::inverse_exact(k);
  if (!kinv) throw DomainError("transform matrix is singular");
  std::vector<QVector> old_basis;
  for (std::size_t i = 0; i < n; ++i) {
    QVector col(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = (*kinv)(r, i);
    old_basis.push_back(std::move(col));
  }
  std::vector<BigRational> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      QVector prod = cas::mat_vec(k, alg.multiply(old_basis[i], old_basis[j]));
      for (std::size_t r = 0; r < n; ++r) c[(i * n + j) * n + r] = prod[r];
    }
  }
  std::optional<QVector> unit;
  if (alg.unital()) unit = cas::mat_vec(k, alg.unit());
  return Algebra::create(alg.name() + "*K", n, std::move(c), unit);
}

QMatrix vec_left_rep(const Algebra& alg) {
  std::size_t n = alg.dim();
  QMatrix m = cas::zero_qmatrix(n * n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      // Entry (k, j) of L_s sits at position j*n + k of the stacked columns.
      for (std::size_t i = 0; i < n; ++i) m(j * n + k, i) = alg.c(i, j, k);
    }
  }
  return m;
}

QMatrix transpose_permutation(std::size_t n) {
  QMatrix t = cas::zero_qmatrix(n * n, n * n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) t(p * n + q, q * n + p) = 1;
  }
  return t;
}

}  // namespace antirotor::alg
