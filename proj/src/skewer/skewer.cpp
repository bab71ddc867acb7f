#include "antirotor/skewer/skewer.hpp"

#include <map>

#include "antirotor/errors.hpp"

namespace antirotor::skewer {

namespace {

struct GrlexDescending {
  bool operator()(const cas::Monomial& a, const cas::Monomial& b) const { return cas::compare_grlex(a, b) > 0; }
};

// W[i][k] = d_i p_k q - p_k d_i q, so that q^2 d_i (p_k / q) = W[i][k].
std::vector<std::vector<MultiPoly>> quotient_derivatives(const RationalVectorField& f) {
  std::size_t n = f.dim();
  bool polynomial = f.denominator.is_constant();
  std::vector<std::vector<MultiPoly>> w(n, std::vector<MultiPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly dq = f.denominator.derivative(i);
    for (std::size_t k = 0; k < n; ++k) {
      MultiPoly dp = f.numerators[k].derivative(i);
      if (polynomial) {
        w[i][k] = dp * f.denominator;
      } else {
        w[i][k] = dp * f.denominator - f.numerators[k] * dq;
      }
    }
  }
  return w;
}

bool curl_vanishes(const std::vector<std::vector<MultiPoly>>& w, const QMatrix& l) {
  std::size_t n = l.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      MultiPoly c(w[i][0].num_vars());
      for (std::size_t k = 0; k < n; ++k) {
        if (l(j, k) != 0) c += w[i][k] * l(j, k);
        if (l(i, k) != 0) c -= w[j][k] * l(i, k);
      }
      if (!c.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

std::string Mode::label() const {
  if (kind == Kind::inverse) return "inverse";
  return "power(" + std::to_string(exponent) + ")";
}

RationalVectorField field_for_mode(const Algebra& alg, const Mode& mode) {
  if (mode.kind == Mode::Kind::inverse) return alg::symbolic_inverse(alg);
  if (mode.exponent < 0 && !alg.unital()) {
    throw DomainError("negative powers need a unital algebra; '" + alg.name() + "' has no unit");
  }
  return alg::symbolic_power(alg, mode.exponent);
}

ConstraintSystem assemble_curl_system(const Algebra& alg, const RationalVectorField& field) {
  std::size_t n = alg.dim();
  if (field.dim() != n) throw UsageError("vector field dimension does not match the algebra");
  ConstraintSystem sys;
  sys.n = n;
  sys.unknowns = n * (n + 1) / 2;
  sys.pair_count = n * (n - 1) / 2;
  auto w = quotient_derivatives(field);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // curl_ij = sum_k M_jk W[i][k] - M_ik W[j][k]
      std::map<cas::Monomial, QVector, GrlexDescending> rows;
      auto accumulate = [&](const MultiPoly& p, std::size_t unknown, int sgn) {
        for (const auto& [mono, coeff] : p.terms()) {
          auto it = rows.find(mono);
          if (it == rows.end()) it = rows.emplace(mono, QVector(sys.unknowns)).first;
          if (sgn > 0) {
            it->second[unknown] += coeff;
          } else {
            it->second[unknown] -= coeff;
          }
        }
      };
      for (std::size_t k = 0; k < n; ++k) {
        accumulate(w[i][k], upper_index(n, j, k), 1);
        accumulate(w[j][k], upper_index(n, i, k), -1);
      }
      for (auto& [mono, coeffs] : rows) {
        bool zero = true;
        for (const auto& c : coeffs) zero = zero && c == 0;
        if (!zero) sys.rows.push_back({i, j, mono, std::move(coeffs)});
      }
    }
  }
  return sys;
}

ParamSymMatrix solve_curl_system(const ConstraintSystem& system, const RationalVectorField& field) {
  // Pivoting on the last column leaves the earliest upper-triangle entries free,
  // so the parameters follow the row-major order of their leading entries.
  cas::EchelonBasis basis(system.unknowns, cas::EchelonBasis::Pivot::last);
  for (const auto& row : system.rows) basis.add_row(row.coeffs);
  std::vector<QMatrix> generators;
  for (const auto& v : basis.nullspace()) generators.push_back(symmetric_from_upper(system.n, v));
  auto w = quotient_derivatives(field);
  for (const auto& g : generators) {
    if (!curl_vanishes(w, g)) throw VerificationError("anti-rotor generator fails the curl identity");
  }
  return ParamSymMatrix(system.n, std::move(generators));
}

ParamSymMatrix anti_rotor(const Algebra& alg, const Mode& mode) {
  RationalVectorField field = field_for_mode(alg, mode);
  return solve_curl_system(assemble_curl_system(alg, field), field);
}

AffineSubspace normalized_subspace(const Algebra& alg, const ParamSymMatrix& u) {
  if (!alg.unital()) throw DomainError("normalized metrics need a unital algebra");
  if (u.n() != alg.dim()) throw UsageError("anti-rotor size does not match the algebra");
  std::size_t n = alg.dim();
  std::size_t m = u.param_count();
  RationalVectorField inv = alg::symbolic_inverse(alg);
  // sum_q alpha_q s^T U_q p = |1|^2 q as a polynomial identity in s.
  std::vector<MultiPoly> lhs;
  for (const auto& g : u.generators()) {
    MultiPoly acc(n);
    for (std::size_t j = 0; j < n; ++j) {
      MultiPoly row(n);
      for (std::size_t k = 0; k < n; ++k) {
        if (g(j, k) != 0) row += inv.numerators[k] * g(j, k);
      }
      if (!row.is_zero()) acc += MultiPoly::variable(n, j) * row;
    }
    lhs.push_back(std::move(acc));
  }
  MultiPoly rhs = inv.denominator * alg.unit_norm_sq();
  std::map<cas::Monomial, std::size_t, GrlexDescending> index;
  auto note = [&](const MultiPoly& p) {
    for (const auto& [mono, c] : p.terms()) index.emplace(mono, 0);
  };
  for (const auto& p : lhs) note(p);
  note(rhs);
  std::size_t r = 0;
  for (auto& [mono, idx] : index) idx = r++;
  QMatrix a = cas::zero_qmatrix(r, m);
  QVector b(r);
  for (std::size_t q = 0; q < m; ++q) {
    for (const auto& [mono, c] : lhs[q].terms()) a(index.at(mono), q) = c;
  }
  for (const auto& [mono, c] : rhs.terms()) b[index.at(mono)] = c;

  AffineSubspace out;
  auto sol = cas::solve_exact(a, b);
  if (!sol) {
    if (alg.associative()) {
      throw VerificationError("no normalized metric found for associative unital algebra '" + alg.name() + "'");
    }
    out.consistent = false;
    out.homogeneous = ParamSymMatrix(n, {});
    return out;
  }
  out.consistent = true;
  out.particular = u.realize(*sol);
  std::vector<QMatrix> hom;
  for (const auto& v : cas::nullspace_exact(a)) hom.push_back(u.realize(v));
  out.homogeneous = ParamSymMatrix(n, std::move(hom));
  return out;
}

std::optional<QVector> membership_check(const ParamSymMatrix& u, const QMatrix& l) {
  std::size_t n = u.n();
  if (l.rows() != n || l.cols() != n) throw UsageError("matrix size does not match the anti-rotor");
  if (!l.is_symmetric()) throw UsageError("membership test needs a symmetric matrix");
  std::size_t m = u.param_count();
  QMatrix a = cas::zero_qmatrix(n * n, m);
  QVector b(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t q = 0; q < m; ++q) a(i * n + j, q) = u.generators()[q](i, j);
      b[i * n + j] = l(i, j);
    }
  }
  if (m == 0) {
    for (const auto& x : b) {
      if (x != 0) return std::nullopt;
    }
    return QVector{};
  }
  return cas::solve_exact(a, b);
}

bool subspace_equal(const ParamSymMatrix& a, const ParamSymMatrix& b) {
  if (a.n() != b.n() || a.param_count() != b.param_count()) return false;
  for (const auto& g : a.generators()) {
    if (!membership_check(b, g)) return false;
  }
  for (const auto& g : b.generators()) {
    if (!membership_check(a, g)) return false;
  }
  return true;
}

bool is_uncurling(const RationalVectorField& field, const QMatrix& l) {
  if (l.rows() != field.dim() || l.cols() != field.dim()) throw UsageError("metric size does not match the field");
  return curl_vanishes(quotient_derivatives(field), l);
}

}  // namespace antirotor::skewer
