#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "antirotor/cas/linalg.hpp"
#include "antirotor/cas/poly.hpp"

namespace antirotor::alg {

using cas::BigRational;
using cas::MultiPoly;
using cas::PMatrix;
using cas::QMatrix;
using cas::QVector;

// Finite-dimensional real algebra given by structure constants
// e_i e_j = sum_k c(i, j, k) e_k, all exact rationals.
class Algebra {
 public:
  // Validates shape, checks associativity exhaustively and determines the
  // unit.  A supplied unit must be a two-sided unit; without one the unit is
  // solved for exactly and the algebra is non-unital when none exists.
  static Algebra create(std::string name, std::size_t dim, std::vector<BigRational> structure,
                        std::optional<QVector> unit = std::nullopt);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const BigRational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return structure_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<BigRational>& structure() const { return structure_; }
  bool associative() const { return associative_; }
  bool unital() const { return unit_.has_value(); }
  // Throws DomainError for non-unital algebras.
  const QVector& unit() const;
  BigRational unit_norm_sq() const;

  QVector multiply(const QVector& a, const QVector& b) const;
  std::vector<MultiPoly> multiply(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) const;
  std::vector<double> multiply(const std::vector<double>& a, const std::vector<double>& b) const;

  Algebra renamed(std::string name) const;
  bool same_structure(const Algebra& other) const;

 private:
  Algebra() = default;

  std::string name_;
  std::size_t dim_ = 0;
  std::vector<BigRational> structure_;
  std::optional<QVector> unit_;
  bool associative_ = false;
};

struct ValidationReport {
  bool associative = false;
  bool commutative = false;
  bool unital = false;
  std::optional<QVector> unit;
  std::optional<BigRational> unit_norm_sq;
  std::vector<std::string> warnings;
};

ValidationReport validate(const Algebra& alg);

// (L_s)_{kj} = sum_i c(i, j, k) x_i, so that L_s y = s y.
PMatrix left_regular_rep(const Algebra& alg);
// Numeric L_s at a point.
cas::DMatrix left_regular_rep(const Algebra& alg, const std::vector<double>& s);

// Components p_k / q of a vector field sharing one denominator.
struct RationalVectorField {
  enum class Kind { inverse, power };
  Kind kind = Kind::inverse;
  int exponent = -1;  // -1 for the inverse
  std::vector<MultiPoly> numerators;
  MultiPoly denominator;
  // "minimal-polynomial" or "adjugate" for inverses, "product" otherwise.
  std::string method;
  // Set when the algebra is not associative: the inverse is L_s^{-1} 1.
  bool left_solve = false;

  std::size_t dim() const { return numerators.size(); }
  cas::RatFn component(std::size_t k) const { return cas::RatFn(numerators[k], denominator); }
  std::vector<double> evaluate(const std::vector<double>& point) const;
};

RationalVectorField symbolic_inverse(const Algebra& alg);
// j >= 1 gives polynomial fields by repeated right multiplication; j <= -1
// composes the inverse with itself.  j = 0 is rejected.
RationalVectorField symbolic_power(const Algebra& alg, int j);

// Algebra whose elements are K s: c'(i, j, .) = K ((K^-1 e_i)(K^-1 e_j)).
Algebra transform(const Algebra& alg, const QMatrix& k);

// vec (column-stacked) of the left regular representation: the n^2 x n
// matrix I with vec(L_s) = I s.
QMatrix vec_left_rep(const Algebra& alg);
// n^2 x n^2 permutation with vec(A^T) = T vec(A).
QMatrix transpose_permutation(std::size_t n);

}  // namespace antirotor::alg
