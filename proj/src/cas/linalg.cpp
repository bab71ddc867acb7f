#include "antirotor/cas/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace antirotor::cas {

QMatrix zero_qmatrix(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols, BigRational(0)); }

QMatrix identity_qmatrix(std::size_t n) { return identity_matrix<BigRational>(n, 0, 1); }

PMatrix zero_pmatrix(std::size_t rows, std::size_t cols, std::size_t nvars) {
  return PMatrix(rows, cols, MultiPoly(nvars));
}

QVector mat_vec(const QMatrix& a, const QVector& v) {
  if (a.cols() != v.size()) throw UsageError("matrix-vector shape mismatch");
  QVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0 && v[j] != 0) out[i] += a(i, j) * v[j];
    }
  }
  return out;
}

namespace {

std::size_t poly_nvars(const PMatrix& m) {
  return m.rows() == 0 ? 0 : m(0, 0).num_vars();
}

MultiPoly det_bareiss(PMatrix a) {
  std::size_t n = a.rows();
  std::size_t nv = poly_nvars(a);
  if (n == 0) return MultiPoly::constant(nv, 1);
  bool negate = false;
  MultiPoly prev = MultiPoly::constant(nv, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Prefer the sparsest nonzero pivot to limit intermediate growth.
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      if (best == n || a(i, k).terms().size() < a(best, k).terms().size()) best = i;
    }
    if (best == n) return MultiPoly(nv);
    if (best != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(best, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        if (prev.is_constant()) {
          num *= BigRational(1 / prev.constant_term());
          a(i, j) = std::move(num);
        } else {
          auto q = divide_exact(num, prev);
          if (!q) throw VerificationError("Bareiss step was not an exact division");
          a(i, j) = std::move(*q);
        }
      }
      a(i, k) = MultiPoly(nv);
    }
    prev = a(k, k);
  }
  MultiPoly d = a(n - 1, n - 1);
  return negate ? -d : d;
}

PMatrix minor_matrix(const PMatrix& a, std::size_t skip_row, std::size_t skip_col) {
  std::size_t n = a.rows();
  PMatrix m = zero_pmatrix(n - 1, n - 1, poly_nvars(a));
  for (std::size_t i = 0, r = 0; i < n; ++i) {
    if (i == skip_row) continue;
    for (std::size_t j = 0, c = 0; j < n; ++j) {
      if (j == skip_col) continue;
      m(r, c++) = a(i, j);
    }
    ++r;
  }
  return m;
}

MultiPoly det_cofactor(const PMatrix& a) {
  std::size_t n = a.rows();
  std::size_t nv = poly_nvars(a);
  if (n == 0) return MultiPoly::constant(nv, 1);
  if (n == 1) return a(0, 0);
  MultiPoly sum(nv);
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j).is_zero()) continue;
    MultiPoly term = a(0, j) * det_cofactor(minor_matrix(a, 0, j));
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

}  // namespace

MultiPoly det_poly(const PMatrix& m, DetMethod method) {
  if (!m.is_square()) throw UsageError("determinant of a non-square matrix");
  if (method == DetMethod::cofactor) return det_cofactor(m);
  if (method == DetMethod::automatic && m.rows() <= 3) return det_cofactor(m);
  return det_bareiss(m);
}

PMatrix adjugate(const PMatrix& m) {
  if (!m.is_square()) throw UsageError("adjugate of a non-square matrix");
  std::size_t n = m.rows();
  std::size_t nv = poly_nvars(m);
  PMatrix adj = zero_pmatrix(n, n, nv);
  if (n == 1) {
    adj(0, 0) = MultiPoly::constant(nv, 1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      MultiPoly c = det_poly(minor_matrix(m, j, i));
      adj(i, j) = (i + j) % 2 == 0 ? c : -c;
    }
  }
  return adj;
}

BigRational det_exact(const QMatrix& a) {
  if (!a.is_square()) throw UsageError("determinant of a non-square matrix");
  QMatrix m = a;
  std::size_t n = m.rows();
  BigRational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      BigRational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

std::size_t rank_exact(const QMatrix& a) {
  // Clear denominators row by row, then run integer Bareiss elimination.
  std::size_t rows = a.rows();
  std::size_t cols = a.cols();
  Matrix<BigInt> m(rows, cols, BigInt(0));
  for (std::size_t i = 0; i < rows; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = a(i, j).get_num() * (l / a(i, j).get_den());
  }
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(rank, j), m(p, j));
    }
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt v = m(rank, c) * m(i, j) - m(i, c) * m(rank, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
      m(i, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  return rank;
}

std::optional<QMatrix> inverse_exact(const QMatrix& a) {
  if (!a.is_square()) throw UsageError("inverse of a non-square matrix");
  std::size_t n = a.rows();
  QMatrix m = a;
  QMatrix inv = identity_qmatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(k, j), m(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    }
    BigRational piv = m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) /= piv;
      inv(k, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      BigRational f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

std::optional<QVector> solve_exact(const QMatrix& a, const QVector& b) {
  if (a.rows() != b.size()) throw UsageError("right-hand side has wrong length");
  std::size_t cols = a.cols();
  EchelonBasis basis(cols + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    QVector row(cols + 1);
    for (std::size_t j = 0; j < cols; ++j) row[j] = a(i, j);
    row[cols] = b[i];
    basis.add_row(std::move(row));
  }
  QMatrix r = basis.matrix();
  QVector x(cols);
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::size_t p = 0;
    while (p <= cols && r(i, p) == 0) ++p;
    if (p == cols) return std::nullopt;
    x[p] = r(i, cols);
  }
  return x;
}

std::vector<QVector> nullspace_exact(const QMatrix& a) {
  EchelonBasis basis(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    QVector row(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) row[j] = a(i, j);
    basis.add_row(std::move(row));
  }
  return basis.nullspace();
}

bool EchelonBasis::add_row(QVector row) {
  if (row.size() != cols_) throw UsageError("row length differs from column count");
  for (const auto& [p, r] : rows_) {
    if (row[p] == 0) continue;
    BigRational f = row[p];
    for (std::size_t j = 0; j < cols_; ++j) {
      if (r[j] != 0) row[j] -= f * r[j];
    }
  }
  std::size_t pivot = cols_;
  if (pivot_ == Pivot::first) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (row[j] != 0) {
        pivot = j;
        break;
      }
    }
  } else {
    for (std::size_t j = cols_; j-- > 0;) {
      if (row[j] != 0) {
        pivot = j;
        break;
      }
    }
  }
  if (pivot == cols_) return false;
  BigRational inv = 1 / row[pivot];
  for (auto& v : row) {
    if (v != 0) v *= inv;
  }
  for (auto& [p, r] : rows_) {
    if (r[pivot] == 0) continue;
    BigRational f = r[pivot];
    for (std::size_t j = 0; j < cols_; ++j) {
      if (row[j] != 0) r[j] -= f * row[j];
    }
  }
  rows_.emplace(pivot, std::move(row));
  return true;
}

std::vector<QVector> EchelonBasis::nullspace() const {
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (rows_.count(f) != 0) continue;
    QVector v(cols_);
    v[f] = 1;
    for (const auto& [p, r] : rows_) v[p] = -r[f];
    basis.push_back(std::move(v));
  }
  return basis;
}

QMatrix EchelonBasis::matrix() const {
  QMatrix m = zero_qmatrix(rows_.size(), cols_);
  std::size_t i = 0;
  for (const auto& [p, r] : rows_) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = r[j];
    ++i;
  }
  return m;
}

double det_double(DMatrix a) {
  std::size_t n = a.rows();
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::fabs(a(i, k)) > std::fabs(a(p, k))) p = i;
    }
    if (a(p, k) == 0.0) return 0.0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      double f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

std::vector<double> solve_double(DMatrix a, std::vector<double> b) {
  std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::fabs(a(i, k)) > std::fabs(a(p, k))) p = i;
    }
    if (a(p, k) == 0.0) throw DomainError("singular linear system");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      std::swap(b[k], b[p]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      double f = a(i, k) / a(k, k);
      if (f == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      b[i] -= f * b[k];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

std::size_t rank_double(DMatrix a, double rel_tol) {
  double scale = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) scale = std::max(scale, std::fabs(a(i, j)));
  }
  if (scale == 0.0) return 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t p = rank;
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (std::fabs(a(i, c)) > std::fabs(a(p, c))) p = i;
    }
    if (std::fabs(a(p, c)) <= rel_tol * scale) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(rank, j), a(p, j));
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      double f = a(i, c) / a(rank, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace antirotor::cas
