#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "antirotor/cas/poly.hpp"
#include "antirotor/cas/rational.hpp"

namespace antirotor::cas {

// Dense univariate polynomial over Q, coefficients in ascending order.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<BigRational> coeffs);
  static UPoly constant(const BigRational& c);
  static UPoly x();
  // Requires p to use at most the variable `var`.
  static UPoly from_multi(const MultiPoly& p, std::size_t var);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  BigRational coeff(int i) const;
  BigRational lead() const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const BigRational& c);
  bool operator==(const UPoly& other) const { return coeffs_ == other.coeffs_; }

  UPoly derivative() const;
  UPoly integral() const;
  UPoly monic() const;
  // Integer coefficients with gcd 1 and positive leading coefficient.
  UPoly primitive() const;

  BigRational evaluate(const BigRational& t) const;
  double evaluate(double t) const;
  std::complex<long double> evaluate(std::complex<long double> t) const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly exact_quotient(const UPoly& a, const UPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

// Yun's algorithm: p = c * prod_i f_i^i with f_i squarefree and coprime.
// Entry i-1 holds f_i (possibly constant 1).
std::vector<UPoly> squarefree_decomposition(const UPoly& p);

// Distinct rational roots, ascending.
std::vector<BigRational> rational_roots(const UPoly& p);

// Number of distinct real roots by an exact Sturm sequence.
int count_real_roots(const UPoly& p);

// All complex roots (with multiplicity) by Aberth iteration; intended for
// squarefree inputs of modest degree.
std::vector<std::complex<long double>> numeric_roots(const UPoly& p);

// Splits a polynomial without rational roots into factors over Q that are
// irreducible whenever the degree of the input is at most 4.  Higher-degree
// inputs are returned unsplit.
std::vector<UPoly> split_rational_irreducible(const UPoly& p);

}  // namespace antirotor::cas
