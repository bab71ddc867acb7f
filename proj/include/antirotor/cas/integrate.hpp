#pragma once

#include <cstddef>
#include <vector>

#include "antirotor/cas/poly.hpp"
#include "antirotor/cas/upoly.hpp"

namespace antirotor::cas {

// One factor F of the squarefree part of the denominator, with the shape of
// the logarithmic/arctangent terms that a numerator C/F contributes.
struct DenominatorFactor {
  UPoly factor;
  int real_roots = 0;
  int complex_pairs = 0;
  // Factors of degree <= 2, and factors with only real roots, have exactly
  // computable coordinates.  Others fall back to numeric residues.
  bool exact = true;
};

// Coordinates of the antiderivative of num/den in a basis that depends only
// on den.  Each group is linear in the numerator.
struct IntegralTerms {
  // Polynomial part of the integrand (ascending) and the numerator A of the
  // rational term A / gcd(D, D'), padded to deg gcd(D, D') coefficients.
  std::vector<BigRational> polynomial;
  std::vector<BigRational> hermite;
  std::vector<BigRational> log_exact;
  std::vector<BigRational> arctan_exact;
  std::vector<double> log_numeric;
  std::vector<double> arctan_numeric;
};

enum class Presence { absent, present, undecided };

struct TermClassSummary {
  bool has_rational = false;
  bool has_log = false;
  bool has_arctan = false;
  bool undecided = false;
};

class RationalIntegrator {
 public:
  explicit RationalIntegrator(const UPoly& denominator);

  IntegralTerms integrate(const UPoly& numerator) const;
  const std::vector<DenominatorFactor>& factors() const { return factors_; }
  bool all_exact() const;

  // Reconstructs the antiderivative numerically (up to a constant) from the
  // decomposition; used to cross-check against quadrature.
  double antiderivative(const UPoly& numerator, double t) const;

 private:
  struct Pieces {
    UPoly poly_part;
    UPoly hermite_num;
    std::vector<UPoly> partial;  // numerator C_i over factors_[i]
  };
  Pieces decompose(const UPoly& numerator) const;

  UPoly den_;
  UPoly hermite_den_;      // B = gcd(D, D')
  UPoly squarefree_den_;   // D* = D / B
  UPoly hermite_cofactor_; // B' D* / B
  std::vector<DenominatorFactor> factors_;
};

Presence numeric_presence(const std::vector<double>& values, double scale);
TermClassSummary classify_terms(const IntegralTerms& terms);

// Term classes of the antiderivative of num/den, both polynomials in the
// single variable `var`.
TermClassSummary univariate_real_factor_classify(const MultiPoly& num, const MultiPoly& den, std::size_t var);

}  // namespace antirotor::cas
