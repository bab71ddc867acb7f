#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "antirotor/algebra/algebra.hpp"
#include "antirotor/skewer/param_sym_matrix.hpp"

namespace antirotor::skewer {

using alg::Algebra;
using alg::RationalVectorField;

// One homogeneous linear equation over the n(n+1)/2 upper-triangle unknowns:
// the coefficient of `monomial` in q^2 curl_{ij}(M p / q).
struct ConstraintRow {
  std::size_t i = 0;
  std::size_t j = 0;
  cas::Monomial monomial;
  QVector coeffs;
};

struct ConstraintSystem {
  std::size_t n = 0;
  std::size_t unknowns = 0;
  std::size_t pair_count = 0;  // n(n-1)/2 curl components
  std::vector<ConstraintRow> rows;  // sorted by (i, j), then descending grlex
};

struct Mode {
  enum class Kind { inverse, power };
  Kind kind = Kind::inverse;
  int exponent = -1;

  static Mode inverse() { return {Kind::inverse, -1}; }
  static Mode power(int j) { return {Kind::power, j}; }
  std::string label() const;
};

RationalVectorField field_for_mode(const Algebra& alg, const Mode& mode);

ConstraintSystem assemble_curl_system(const Algebra& alg, const RationalVectorField& field);

// Kernel of the curl system as a parametrized symmetric matrix.  Every
// generator is re-checked symbolically; a failure raises VerificationError.
ParamSymMatrix solve_curl_system(const ConstraintSystem& system, const RationalVectorField& field);
ParamSymMatrix anti_rotor(const Algebra& alg, const Mode& mode = Mode::inverse());

// Metrics in u with s^T L s^{-1} = |1|^2 identically.
AffineSubspace normalized_subspace(const Algebra& alg, const ParamSymMatrix& u);

// Coordinates of L in the generator basis, or nullopt when L is not in the span.
std::optional<QVector> membership_check(const ParamSymMatrix& u, const QMatrix& l);
bool subspace_equal(const ParamSymMatrix& a, const ParamSymMatrix& b);

// Exact test that curl(L f) vanishes identically.
bool is_uncurling(const RationalVectorField& field, const QMatrix& l);

}  // namespace antirotor::skewer
