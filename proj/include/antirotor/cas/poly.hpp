#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "antirotor/cas/rational.hpp"

namespace antirotor::cas {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t degree() const { return degree_; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // Requires divides(other) to hold for the pair (this, other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial with_exponent(std::size_t var, std::uint32_t e) const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

// Graded lexicographic comparison: -1, 0 or 1.
int compare_grlex(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

// Exact multivariate polynomial over Q.  Terms are kept sorted in
// descending graded-lex order with no zero coefficients.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, BigRational>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const BigRational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t var);
  static MultiPoly monomial(const Monomial& m, const BigRational& c);
  static MultiPoly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t num_vars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigRational constant_term() const;
  BigRational coefficient(const Monomial& m) const;
  // -1 for the zero polynomial.
  int total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  const Term& leading_term() const;
  std::vector<bool> used_variables() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const BigRational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const BigRational& c) { return a *= c; }
  friend MultiPoly operator*(const BigRational& c, MultiPoly a) { return a *= c; }
  bool operator==(const MultiPoly& other) const;

  MultiPoly pow(unsigned e) const;
  MultiPoly derivative(std::size_t var) const;
  // Replaces x_var by a constant; the variable count is unchanged.
  MultiPoly substitute(std::size_t var, const BigRational& value) const;
  // Replaces every variable by a polynomial in a (possibly different) ring.
  MultiPoly compose(std::span<const MultiPoly> images) const;
  BigRational evaluate(std::span<const BigRational> point) const;
  double evaluate(std::span<const double> point) const;

  // Positive rational c with this/c having coprime integer coefficients
  // and positive leading coefficient sign preserved; zero for the zero polynomial.
  BigRational content() const;
  MultiPoly primitive() const;

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& other) const;

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

enum class PolyOp { add, sub, mul };
MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op);
MultiPoly poly_derivative(const MultiPoly& p, std::size_t var);

// Quotient a/b when b divides a exactly, nullopt otherwise.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

std::vector<std::string> default_variable_names(std::size_t n);
std::vector<std::string> greek_parameter_names(std::size_t m);

// Ratio of polynomials.  The denominator is nonzero with positive leading
// coefficient and the pair is content-reduced.
class RatFn {
 public:
  RatFn(MultiPoly num, MultiPoly den);
  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  double evaluate(std::span<const double> point) const;

 private:
  MultiPoly num_;
  MultiPoly den_;
};

// Affine form c . alpha + constant over m parameters.
struct LinForm {
  std::vector<BigRational> coeffs;
  BigRational constant;

  explicit LinForm(std::size_t m = 0) : coeffs(m) {}
  bool is_zero() const;
  bool operator==(const LinForm& other) const = default;
  MultiPoly to_poly() const;
  std::string to_string(const std::vector<std::string>& names) const;
};

}  // namespace antirotor::cas
