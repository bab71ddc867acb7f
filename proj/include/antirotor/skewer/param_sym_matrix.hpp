#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "antirotor/cas/linalg.hpp"
#include "antirotor/cas/poly.hpp"

namespace antirotor::skewer {

using cas::BigRational;
using cas::LinForm;
using cas::MultiPoly;
using cas::PMatrix;
using cas::QMatrix;
using cas::QVector;

// Symmetric n x n matrix sum_q alpha_q U_q whose entries are linear forms in
// the m parameters alpha.  The generators U_q are linearly independent.
class ParamSymMatrix {
 public:
  ParamSymMatrix() = default;
  // Throws UsageError for asymmetric or dependent generators.
  ParamSymMatrix(std::size_t n, std::vector<QMatrix> generators);

  std::size_t n() const { return n_; }
  std::size_t param_count() const { return generators_.size(); }
  const std::vector<QMatrix>& generators() const { return generators_; }

  LinForm entry(std::size_t i, std::size_t j) const;
  QMatrix realize(const QVector& alpha) const;
  // Entries as polynomials in the m parameters.
  PMatrix as_poly_matrix() const;
  // K^T U_q K for every generator.
  ParamSymMatrix congruence(const QMatrix& k) const;

  // Row-per-line rendering with Greek parameter names.
  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<QMatrix> generators_;
};

// Position of entry (i, j), i <= j, in the row-major upper triangle.
std::size_t upper_index(std::size_t n, std::size_t i, std::size_t j);
// Symmetric matrix with the given row-major upper-triangle entries.
QMatrix symmetric_from_upper(std::size_t n, const QVector& upper);

// Affine family particular + span(homogeneous).  `consistent` is false when
// the defining inhomogeneous system has no solution.
struct AffineSubspace {
  bool consistent = false;
  QMatrix particular;
  ParamSymMatrix homogeneous;
};

}  // namespace antirotor::skewer
