#include <map>
#include <random>

#include "antirotor/cas/upoly.hpp"
#include "antirotor/invariants/invariants.hpp"

namespace antirotor::inv {

using cas::BigRational;
using cas::QVector;

Signature signature(QMatrix a) {
  std::size_t n = a.rows();
  Signature s;
  std::size_t k = 0;
  while (k < n) {
    // Bring a nonzero diagonal entry to position k, creating one from an
    // off-diagonal entry (row/column i += row/column j) if needed.
    std::size_t p = n;
    for (std::size_t i = k; i < n && p == n; ++i) {
      if (a(i, i) != 0) p = i;
    }
    if (p == n) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (a(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == n) break;  // the remaining block is zero
      for (std::size_t c = 0; c < n; ++c) a(pi, c) += a(pj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, pi) += a(r, pj);
      p = pi;
    }
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(k, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(a(r, p), a(r, k));
    }
    BigRational pivot = a(k, k);
    // Schur complement: the congruence that clears row and column k.
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      BigRational f = a(i, k) / pivot;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
    for (std::size_t i = k + 1; i < n; ++i) a(i, k) = a(k, i) = 0;
    (pivot > 0 ? s.positive : s.negative)++;
    ++k;
  }
  s.zero = n - s.positive - s.negative;
  return s;
}

namespace {

// Symmetric matrix of a homogeneous quadratic form.
QMatrix quadratic_form_matrix(const MultiPoly& q) {
  std::size_t n = q.num_vars();
  QMatrix a = cas::zero_qmatrix(n, n);
  for (const auto& [mono, c] : q.terms()) {
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::uint32_t e = 0; e < mono[i]; ++e) vars.push_back(i);
    }
    if (vars[0] == vars[1]) {
      a(vars[0], vars[0]) += c;
    } else {
      a(vars[0], vars[1]) += c / 2;
      a(vars[1], vars[0]) += c / 2;
    }
  }
  return a;
}

bool is_homogeneous(const MultiPoly& p) {
  int d = p.total_degree();
  for (const auto& [mono, c] : p.terms()) {
    if (static_cast<int>(mono.degree()) != d) return false;
  }
  return true;
}

// Linear form sum_i coeffs[i] z_i as a polynomial.
MultiPoly linear_poly(const QVector& coeffs) {
  MultiPoly p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) p += MultiPoly::variable(coeffs.size(), i) * coeffs[i];
  }
  return p;
}

}  // namespace

SensitiveReduction sensitive_reduction(const MultiPoly& det_poly) {
  std::size_t m = det_poly.num_vars();
  // Directions v with sum_q v_q d_q det = 0 leave det unchanged; the sensitive
  // subspace is their quotient, of dimension rank{d_q det}.
  std::vector<MultiPoly> partials;
  struct GrlexLess {
    bool operator()(const cas::Monomial& a, const cas::Monomial& b) const { return cas::compare_grlex(a, b) < 0; }
  };
  std::map<cas::Monomial, std::size_t, GrlexLess> index;
  for (std::size_t q = 0; q < m; ++q) {
    partials.push_back(det_poly.derivative(q));
    for (const auto& [mono, c] : partials.back().terms()) index.emplace(mono, index.size());
  }
  QMatrix dt = cas::zero_qmatrix(index.size(), m);
  for (std::size_t q = 0; q < m; ++q) {
    for (const auto& [mono, c] : partials[q].terms()) dt(index.at(mono), q) = c;
  }
  auto invariant = index.empty() ? std::vector<QVector>{} : cas::nullspace_exact(dt);
  if (index.empty()) {
    for (std::size_t q = 0; q < m; ++q) {
      QVector e(m);
      e[q] = 1;
      invariant.push_back(e);
    }
  }
  SensitiveReduction red;
  red.dim = m - invariant.size();
  // Basis B: unit vectors completing the invariant directions, then those directions.
  cas::EchelonBasis span(m);
  for (const auto& v : invariant) span.add_row(v);
  std::vector<QVector> columns;
  for (std::size_t i = 0; i < m && columns.size() < red.dim; ++i) {
    QVector e(m);
    e[i] = 1;
    if (span.add_row(e)) columns.push_back(e);
  }
  for (const auto& v : invariant) columns.push_back(v);
  QMatrix b = cas::zero_qmatrix(m, m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i < m; ++i) b(i, r) = columns[r][i];
  }
  red.coordinates = m == 0 ? b : *cas::inverse_exact(b);
  std::vector<MultiPoly> images(m, MultiPoly(red.dim));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t r = 0; r < red.dim; ++r) {
      if (b(i, r) != 0) images[i] += MultiPoly::variable(red.dim, r) * b(i, r);
    }
  }
  red.reduced = det_poly.compose(images);
  return red;
}

VarietySummary variety_summary(const MultiPoly& det_poly) {
  VarietySummary out;
  std::size_t m = det_poly.num_vars();
  if (det_poly.is_zero()) {
    out.supported = true;
    out.dim = m;
    out.components = 0;
    out.shape = "zero";
    return out;
  }
  SensitiveReduction red = sensitive_reduction(det_poly);
  std::size_t s = red.dim;
  if (s == 0) {
    // A nonzero constant never vanishes.
    out.supported = true;
    out.dim = 0;
    out.components = 0;
    out.shape = "empty";
    return out;
  }
  if (!is_homogeneous(det_poly)) {
    out.shape = "unsupported";
    return out;
  }
  const MultiPoly& p = red.reduced;

  // y_1 = z_1, y_i = z_i + c_i z_1: afterwards z_1^d has a nonzero
  // coefficient, so every linear factor has a nonzero z_1 coefficient.
  std::mt19937_64 rng(0xa1b2c3);
  std::uniform_int_distribution<long> dist(-5, 5);
  QVector shift(s);
  for (int attempt = 0;; ++attempt) {
    QVector point(s);
    point[0] = 1;
    for (std::size_t i = 1; i < s; ++i) point[i] = shift[i];
    if (p.evaluate(point) != 0) break;
    for (std::size_t i = 1; i < s; ++i) shift[i] = dist(rng);
    if (attempt > 1000) {
      out.shape = "unsupported";
      return out;
    }
  }
  std::vector<MultiPoly> change;
  for (std::size_t i = 0; i < s; ++i) {
    MultiPoly y = MultiPoly::variable(s, i);
    if (i > 0 && shift[i] != 0) y += MultiPoly::variable(s, 0) * shift[i];
    change.push_back(std::move(y));
  }
  MultiPoly q = p.compose(change);

  // Candidate forms z_1 - sum_j a_j z_j with a_j a rational root of q(t e_1 + e_j).
  std::vector<std::vector<BigRational>> roots(s);
  for (std::size_t j = 1; j < s; ++j) {
    std::vector<MultiPoly> line(s, MultiPoly(1));
    line[0] = MultiPoly::variable(1, 0);
    line[j] = MultiPoly::constant(1, 1);
    roots[j] = cas::rational_roots(cas::UPoly::from_multi(q.compose(line), 0));
  }
  std::vector<QVector> forms;
  MultiPoly rem = q;
  std::vector<std::size_t> idx(s, 0);
  bool any_empty = false;
  for (std::size_t j = 1; j < s; ++j) any_empty = any_empty || roots[j].empty();
  if (!any_empty) {
    while (true) {
      QVector form(s);
      form[0] = 1;
      for (std::size_t j = 1; j < s; ++j) form[j] = -roots[j][idx[j]];
      MultiPoly lf = linear_poly(form);
      bool divided = false;
      while (rem.total_degree() > 0) {
        auto quot = cas::divide_exact(rem, lf);
        if (!quot) break;
        rem = std::move(*quot);
        divided = true;
      }
      if (divided) forms.push_back(form);
      std::size_t j = 1;
      while (j < s && ++idx[j] == roots[j].size()) idx[j++] = 0;
      if (j >= s) break;
    }
  }

  // Report the forms in the original parameters: z_1 = y_1, z_i = y_i - c_i y_1,
  // then z = (rows of B^-1) alpha.
  for (const auto& form : forms) {
    QVector y(s);
    y[0] = form[0];
    for (std::size_t i = 1; i < s; ++i) {
      y[i] = form[i];
      y[0] -= form[i] * shift[i];
    }
    QVector orig(m);
    for (std::size_t r = 0; r < s; ++r) {
      for (std::size_t i = 0; i < m; ++i) orig[i] += y[r] * red.coordinates(r, i);
    }
    out.linear_factors.push_back(linear_poly(orig).primitive());
  }

  int rdeg = rem.total_degree();
  if (rdeg == 0) {
    out.supported = true;
    out.shape = "linear-forms";
    out.components = forms.size();
    out.dim = s - 1;
    return out;
  }
  if (rdeg != 2) {
    out.shape = "unsupported";
    return out;
  }
  QMatrix a = quadratic_form_matrix(rem);
  Signature sig = signature(a);
  if (sig.positive > 0 && sig.negative > 0) {
    out.shape = "unsupported";
    return out;
  }
  // Semidefinite: the zero set is the kernel of the form.
  auto kernel = cas::nullspace_exact(a);
  bool inside_hyperplane = false;
  for (const auto& form : forms) {
    bool all = true;
    for (const auto& k : kernel) {
      BigRational dot = 0;
      for (std::size_t i = 0; i < s; ++i) dot += form[i] * k[i];
      all = all && dot == 0;
    }
    inside_hyperplane = inside_hyperplane || all;
  }
  out.supported = true;
  out.shape = forms.empty() ? "quadratic" : "linear-forms-times-quadratic";
  out.components = forms.size() + (inside_hyperplane ? 0 : 1);
  out.dim = forms.empty() ? kernel.size() : std::max(s - 1, inside_hyperplane ? 0 : kernel.size());
  return out;
}

}  // namespace antirotor::inv
