#include "antirotor/cas/integrate.hpp"

#include <algorithm>
#include <cmath>

#include "antirotor/cas/linalg.hpp"
#include "antirotor/errors.hpp"

namespace antirotor::cas {

namespace {

// Solves sum_k unknown_k * basis_k = target, where basis_k ranges over the
// polynomials in `columns`; the system is square and nonsingular by design.
std::vector<BigRational> solve_polynomial_identity(const std::vector<UPoly>& columns, const UPoly& target,
                                                   std::size_t equations) {
  QMatrix a = zero_qmatrix(equations, columns.size());
  QVector b(equations);
  for (std::size_t k = 0; k < columns.size(); ++k) {
    for (int i = 0; i <= columns[k].degree(); ++i) {
      if (static_cast<std::size_t>(i) >= equations) throw VerificationError("identity exceeds expected degree");
      a(i, k) = columns[k].coeff(i);
    }
  }
  for (int i = 0; i <= target.degree(); ++i) {
    if (static_cast<std::size_t>(i) >= equations) throw VerificationError("identity exceeds expected degree");
    b[i] = target.coeff(i);
  }
  auto x = solve_exact(a, b);
  if (!x) throw VerificationError("partial-fraction system is inconsistent");
  return *x;
}

UPoly monomial_times(const UPoly& p, int k) {
  std::vector<BigRational> c(static_cast<std::size_t>(k), BigRational(0));
  c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
  return UPoly(std::move(c));
}

struct NumericRoots {
  std::vector<std::complex<long double>> real;   // ascending
  std::vector<std::complex<long double>> upper;  // Im > 0, by real part
};

NumericRoots split_roots(const UPoly& f, int real_count) {
  auto roots = numeric_roots(f);
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    return std::fabs(a.imag()) < std::fabs(b.imag());
  });
  NumericRoots out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (static_cast<int>(i) < real_count) {
      out.real.emplace_back(roots[i].real(), 0.0L);
    } else if (roots[i].imag() > 0) {
      out.upper.push_back(roots[i]);
    }
  }
  auto by_real = [](const auto& a, const auto& b) { return a.real() < b.real(); };
  std::sort(out.real.begin(), out.real.end(), by_real);
  std::sort(out.upper.begin(), out.upper.end(), by_real);
  return out;
}

}  // namespace

RationalIntegrator::RationalIntegrator(const UPoly& denominator) : den_(denominator) {
  if (den_.is_zero()) throw DomainError("integrand denominator is identically zero");
  if (den_.degree() == 0) {
    hermite_den_ = UPoly::constant(1);
    squarefree_den_ = den_;
    return;
  }
  hermite_den_ = gcd(den_, den_.derivative());
  squarefree_den_ = exact_quotient(den_, hermite_den_);
  hermite_cofactor_ = exact_quotient(hermite_den_.derivative() * squarefree_den_, hermite_den_);

  UPoly rest = squarefree_den_.monic();
  for (const auto& r : rational_roots(rest)) {
    UPoly lin({BigRational(-r), BigRational(1)});
    rest = exact_quotient(rest, lin);
    factors_.push_back({lin, 1, 0, true});
  }
  if (rest.degree() > 0) {
    for (auto& f : split_rational_irreducible(rest)) {
      DenominatorFactor df;
      df.factor = f;
      if (f.degree() == 2) {
        BigRational disc = f.coeff(1) * f.coeff(1) - 4 * f.coeff(0) * f.coeff(2);
        df.real_roots = disc > 0 ? 2 : 0;
      } else {
        df.real_roots = count_real_roots(f);
      }
      df.complex_pairs = (f.degree() - df.real_roots) / 2;
      df.exact = f.degree() <= 2 || df.complex_pairs == 0;
      factors_.push_back(std::move(df));
    }
  }
}

bool RationalIntegrator::all_exact() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const auto& f) { return f.exact; });
}

RationalIntegrator::Pieces RationalIntegrator::decompose(const UPoly& numerator) const {
  Pieces out;
  auto [quot, rem] = divmod(numerator, den_);
  out.poly_part = quot;
  if (rem.is_zero() || factors_.empty()) return out;

  // Horowitz-Ostrogradsky: rem = A' D* - A H + C B with deg A < deg B and
  // deg C < deg D*.  Then rem/D = (A/B)' + C/D*.
  int b = hermite_den_.degree();
  int d = squarefree_den_.degree();
  UPoly c_poly;
  if (b == 0) {
    c_poly = rem * BigRational(1 / hermite_den_.lead());
  } else {
    std::vector<UPoly> columns;
    for (int k = 0; k < b; ++k) {
      UPoly tk = monomial_times(UPoly::constant(1), k);
      columns.push_back(tk.derivative() * squarefree_den_ - tk * hermite_cofactor_);
    }
    for (int k = 0; k < d; ++k) columns.push_back(monomial_times(hermite_den_, k));
    auto x = solve_polynomial_identity(columns, rem, static_cast<std::size_t>(b + d));
    out.hermite_num = UPoly(std::vector<BigRational>(x.begin(), x.begin() + b));
    c_poly = UPoly(std::vector<BigRational>(x.begin() + b, x.end()));
  }

  if (factors_.size() == 1) {
    out.partial.push_back(c_poly * BigRational(1 / squarefree_den_.lead()));
    return out;
  }
  // C / D* = sum_i C_i / F_i with D* = lead * prod F_i.
  UPoly monic_sf = squarefree_den_.monic();
  UPoly target = c_poly * BigRational(1 / squarefree_den_.lead());
  std::vector<UPoly> columns;
  std::vector<int> offsets;
  for (const auto& f : factors_) {
    UPoly cof = exact_quotient(monic_sf, f.factor);
    offsets.push_back(static_cast<int>(columns.size()));
    for (int k = 0; k < f.factor.degree(); ++k) columns.push_back(monomial_times(cof, k));
  }
  auto x = solve_polynomial_identity(columns, target, static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    auto first = x.begin() + offsets[i];
    out.partial.push_back(UPoly(std::vector<BigRational>(first, first + factors_[i].factor.degree())));
  }
  return out;
}

IntegralTerms RationalIntegrator::integrate(const UPoly& numerator) const {
  Pieces pieces = decompose(numerator);
  IntegralTerms out;
  out.polynomial = pieces.poly_part.coeffs();
  out.hermite = pieces.hermite_num.coeffs();
  out.hermite.resize(static_cast<std::size_t>(std::max(0, hermite_den_.degree())));
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    UPoly ci = i < pieces.partial.size() ? pieces.partial[i] : UPoly();
    int deg = f.factor.degree();
    if (deg == 1) {
      out.log_exact.push_back(ci.coeff(0));
    } else if (deg == 2 && f.real_roots == 0) {
      // C = lambda F' + mu with F monic: lambda -> log F, mu -> arctan.
      BigRational lambda = ci.coeff(1) / 2;
      BigRational mu = ci.coeff(0) - lambda * f.factor.coeff(1);
      out.log_exact.push_back(lambda);
      out.arctan_exact.push_back(mu);
    } else if (f.complex_pairs == 0) {
      // Residues at distinct real roots are an invertible image of C_i.
      for (int k = 0; k < deg; ++k) out.log_exact.push_back(ci.coeff(k));
    } else {
      UPoly fp = f.factor.derivative();
      NumericRoots roots = split_roots(f.factor, f.real_roots);
      for (const auto& r : roots.real) out.log_numeric.push_back(static_cast<double>((ci.evaluate(r) / fp.evaluate(r)).real()));
      for (const auto& r : roots.upper) {
        auto res = ci.evaluate(r) / fp.evaluate(r);
        out.log_numeric.push_back(static_cast<double>(res.real()));
        out.arctan_numeric.push_back(static_cast<double>(res.imag()));
      }
    }
  }
  return out;
}

double RationalIntegrator::antiderivative(const UPoly& numerator, double t) const {
  Pieces pieces = decompose(numerator);
  double value = pieces.poly_part.integral().evaluate(t);
  if (!pieces.hermite_num.is_zero()) value += pieces.hermite_num.evaluate(t) / hermite_den_.evaluate(t);
  for (std::size_t i = 0; i < factors_.size() && i < pieces.partial.size(); ++i) {
    const auto& f = factors_[i];
    const UPoly& ci = pieces.partial[i];
    UPoly fp = f.factor.derivative();
    NumericRoots roots = split_roots(f.factor, f.real_roots);
    if (f.factor.degree() == 1) {
      roots.real = {std::complex<long double>(static_cast<long double>(-f.factor.coeff(0).get_d()), 0.0L)};
    }
    long double tl = t;
    for (const auto& r : roots.real) {
      long double res = (ci.evaluate(r) / fp.evaluate(r)).real();
      value += static_cast<double>(res * std::log(std::fabs(tl - r.real())));
    }
    for (const auto& r : roots.upper) {
      auto res = ci.evaluate(r) / fp.evaluate(r);
      // res log(t - r) + conj = 2 Re(res) log|t - r| - 2 Im(res) arg(t - r).
      long double a = r.real();
      long double b = r.imag();
      long double modulus = std::log((tl - a) * (tl - a) + b * b);
      long double arg = std::atan2(-b, tl - a);
      value += static_cast<double>(res.real() * modulus - 2.0L * res.imag() * arg);
    }
  }
  return value;
}

Presence numeric_presence(const std::vector<double>& values, double scale) {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::fabs(v));
  double s = std::max(scale, 1e-300);
  if (m > 1e-8 * s) return Presence::present;
  if (m < 1e-12 * s) return Presence::absent;
  return Presence::undecided;
}

TermClassSummary classify_terms(const IntegralTerms& terms) {
  TermClassSummary out;
  auto any_nonzero = [](const std::vector<BigRational>& v) {
    return std::any_of(v.begin(), v.end(), [](const BigRational& c) { return c != 0; });
  };
  out.has_rational = any_nonzero(terms.polynomial) || any_nonzero(terms.hermite);
  double scale = 0.0;
  for (double v : terms.log_numeric) scale = std::max(scale, std::fabs(v));
  for (double v : terms.arctan_numeric) scale = std::max(scale, std::fabs(v));
  Presence log_num = numeric_presence(terms.log_numeric, scale);
  Presence arc_num = numeric_presence(terms.arctan_numeric, scale);
  out.has_log = any_nonzero(terms.log_exact) || log_num == Presence::present;
  out.has_arctan = any_nonzero(terms.arctan_exact) || arc_num == Presence::present;
  out.undecided = (!out.has_log && log_num == Presence::undecided) ||
                  (!out.has_arctan && arc_num == Presence::undecided);
  return out;
}

TermClassSummary univariate_real_factor_classify(const MultiPoly& num, const MultiPoly& den, std::size_t var) {
  if (var >= num.num_vars() || num.num_vars() != den.num_vars()) throw UsageError("bad integration variable");
  if (den.is_zero()) throw DomainError("integrand denominator is identically zero");
  UPoly n = UPoly::from_multi(num, var);
  UPoly d = UPoly::from_multi(den, var);
  RationalIntegrator integrator(d);
  return classify_terms(integrator.integrate(n));
}

}  // namespace antirotor::cas
