#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "antirotor/cas/matrix.hpp"
#include "antirotor/cas/poly.hpp"
#include "antirotor/cas/rational.hpp"

namespace antirotor::cas {

using QMatrix = Matrix<BigRational>;
using PMatrix = Matrix<MultiPoly>;
using QVector = std::vector<BigRational>;

QMatrix zero_qmatrix(std::size_t rows, std::size_t cols);
QMatrix identity_qmatrix(std::size_t n);
PMatrix zero_pmatrix(std::size_t rows, std::size_t cols, std::size_t nvars);
QVector mat_vec(const QMatrix& a, const QVector& v);

enum class DetMethod { automatic, bareiss, cofactor };

// Fraction-free (Bareiss) elimination with exact polynomial division, or
// Laplace expansion along the first row.  Both give the same polynomial.
MultiPoly det_poly(const PMatrix& m, DetMethod method = DetMethod::automatic);
PMatrix adjugate(const PMatrix& m);

BigRational det_exact(const QMatrix& a);
std::size_t rank_exact(const QMatrix& a);
std::optional<QMatrix> inverse_exact(const QMatrix& a);
// Some solution of a x = b (free variables set to zero), or nullopt.
std::optional<QVector> solve_exact(const QMatrix& a, const QVector& b);
// Basis of {x : a x = 0}: vector f has a 1 in the f-th free column, zeros in
// the other free columns, ordered by free column.
std::vector<QVector> nullspace_exact(const QMatrix& a);

// Row space kept in reduced echelon form while rows are added one at a time.
// With Pivot::last each row is pivoted on its last nonzero column, which makes
// the free columns (and hence nullspace parameters) the earliest possible.
class EchelonBasis {
 public:
  enum class Pivot { first, last };
  explicit EchelonBasis(std::size_t cols, Pivot pivot = Pivot::first) : cols_(cols), pivot_(pivot) {}

  // Returns true when the row was independent of those already present.
  bool add_row(QVector row);
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::vector<QVector> nullspace() const;
  QMatrix matrix() const;

 private:
  std::size_t cols_;
  Pivot pivot_;
  std::map<std::size_t, QVector> rows_;  // pivot column -> normalized row
};

// Floating-point helpers for the numeric layer.
using DMatrix = Matrix<double>;
double det_double(DMatrix a);
// Gaussian elimination with partial pivoting; throws DomainError when singular.
std::vector<double> solve_double(DMatrix a, std::vector<double> b);
std::size_t rank_double(DMatrix a, double rel_tol);

}  // namespace antirotor::cas
