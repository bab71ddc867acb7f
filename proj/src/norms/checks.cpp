#include <cmath>
#include <random>
#include <sstream>

#include "antirotor/errors.hpp"
#include "antirotor/norms/norms.hpp"

namespace antirotor::norms {

namespace {

CheckReport make(std::string name, double error, double tolerance, std::string detail = {}) {
  CheckReport r;
  r.name = std::move(name);
  r.error = error;
  r.tolerance = tolerance;
  r.passed = std::isfinite(error) && error <= tolerance;
  r.detail = std::move(detail);
  return r;
}

NormOptions options_for(double tol) {
  NormOptions o;
  o.tol = std::min(o.tol, tol * 0.01);
  return o;
}

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

}  // namespace

CheckReport check_path_independence(const NormEvaluator& ev, const Point& s, double tol) {
  auto opts = options_for(tol);
  double f = ev.evaluate(s, opts, PathOrder::forward).log_value;
  double r = ev.evaluate(s, opts, PathOrder::reversed).log_value;
  return make("path-independence", std::fabs(f - r), 10 * tol,
              "forward log " + fmt(f) + ", reversed log " + fmt(r));
}

CheckReport check_homogeneity(const NormEvaluator& ev, const Point& s, double a, double tol) {
  if (!(a > 0)) throw UsageError("scaling factor must be positive");
  auto opts = options_for(tol);
  Point as = s;
  for (auto& v : as) v *= a;
  double base = ev.evaluate(s, opts).log_value;
  double scaled = ev.evaluate(as, opts).log_value;
  double expected = ev.degree() * std::log(a);
  return make("homogeneity", std::fabs(scaled - base - expected), tol,
              "log ratio " + fmt(scaled - base) + ", expected degree " + fmt(ev.degree()) + " times log a");
}

CheckReport check_reciprocity(const NormEvaluator& ev, const Point& s, double tol) {
  auto opts = options_for(tol);
  Point inv = ev.inverse(s);
  double ls = ev.evaluate(s, opts).log_value;
  double linv = ev.evaluate(inv, opts).log_value;
  double err = std::fabs(ls + linv);
  std::string detail = "log l(s) + log l(s^-1) = " + fmt(ls + linv);
  bool unit_ok = true;

  cas::DMatrix l(ev.metric().rows(), ev.metric().cols(), 0.0);
  for (std::size_t i = 0; i < l.rows(); ++i) {
    for (std::size_t j = 0; j < l.cols(); ++j) l(i, j) = ev.metric()(i, j).get_d();
  }
  if (std::fabs(cas::det_double(l)) > 1e-12) {
    // Unit direction: l(|1|^2 L^-1 grad l(s^-1)) = 1.
    std::size_t n = s.size();
    Point grad(n);
    double h = kGradientStep;
    for (std::size_t i = 0; i < n; ++i) {
      Point p = inv, m = inv;
      p[i] += h;
      m[i] -= h;
      grad[i] = (ev.evaluate(p, opts).value - ev.evaluate(m, opts).value) / (2 * h);
    }
    double norm_sq = ev.algebra().unit_norm_sq().get_d();
    Point dir = cas::solve_double(l, grad);
    for (auto& v : dir) v *= norm_sq;
    double ld = ev.evaluate(dir, opts).log_value;
    unit_ok = std::fabs(ld) <= kUnitDirectionTol;
    detail += "; unit-direction log " + fmt(ld) + " (tolerance " + fmt(kUnitDirectionTol) + ")";
  }
  auto r = make("reciprocity", err, tol, detail);
  r.passed = r.passed && unit_ok;
  return r;
}

CheckReport check_duality(const NormEvaluator& ev, const Point& s, double rel_tol) {
  auto opts = options_for(1e-8);
  double norm_sq = ev.algebra().unit_norm_sq().get_d();
  Point exact = ev.log_gradient(s);
  std::size_t n = s.size();
  double worst = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::fabs(exact[i] * norm_sq));
  scale = std::max(scale, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    Point p = s, m = s;
    p[i] += kGradientStep;
    m[i] -= kGradientStep;
    double fd = norm_sq * (ev.evaluate(p, opts).log_value - ev.evaluate(m, opts).log_value) / (2 * kGradientStep);
    worst = std::max(worst, std::fabs(fd - exact[i] * norm_sq) / scale);
  }
  return make("duality", worst, rel_tol, "max relative gradient mismatch " + fmt(worst));
}

CheckReport check_group_law(const NormEvaluator& a, const NormEvaluator& b, const Point& s, double tol) {
  auto opts = options_for(tol);
  QMatrix sum = a.metric() + b.metric();
  NormEvaluator c(a.algebra(), sum, false);
  double la = a.evaluate(s, opts).log_value;
  double lb = b.evaluate(s, opts).log_value;
  double lc = c.evaluate(s, opts).log_value;
  return make("group-law", std::fabs(lc - la - lb), 2 * tol,
              "log l_(L1+L2) " + fmt(lc) + ", sum of logs " + fmt(la + lb));
}

double witness_special_norm(const Algebra& quotient, const QMatrix& omega, const Point& s) {
  std::size_t m = omega.rows();
  Point w(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < omega.cols(); ++j) w[i] += omega(i, j).get_d() * s[j];
  }
  double d = cas::det_double(alg::left_regular_rep(quotient, w));
  if (!(d > 0)) throw DomainError("point is outside the unit component of the quotient");
  return std::pow(d, 1.0 / static_cast<double>(m));
}

CheckReport check_special_vs_det(const alg::RegistryEntry& entry, double tol, std::size_t points, double radius,
                                 unsigned long long seed) {
  const Algebra& a = entry.algebra;
  std::optional<Algebra> quotient;
  QMatrix metric;
  if (entry.witness) {
    quotient = alg::registry(entry.witness->quotient);
    metric = alg::witness_metric(a, *entry.witness);
  } else if (entry.star_metric) {
    metric = *entry.star_metric;
  } else {
    throw UsageError("registry entry '" + a.name() + "' has no special-norm witness");
  }
  // Star-metric algebras may be non-associative, where the anti-rotor
  // solve uses the left-solve inverse; membership is still required.
  NormEvaluator ev(a, metric, true);
  auto opts = options_for(tol);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-radius, radius);
  std::size_t n = a.dim();
  double worst = 0.0;
  for (std::size_t k = 0; k < points; ++k) {
    Point s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = a.unit()[i].get_d() + dist(rng);
    double expected;
    if (quotient) {
      expected = witness_special_norm(*quotient, entry.witness->omega, s);
    } else {
      double q = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) q += s[i] * metric(i, j).get_d() * s[j] * (j == 0 ? 1.0 : -1.0);
      }
      expected = std::sqrt(q);
    }
    double got = ev.evaluate(s, opts).value;
    worst = std::max(worst, std::fabs(got - expected) / std::max(1.0, std::fabs(expected)));
  }
  return make("special-vs-det", worst, tol,
              std::string(quotient ? "witness det^(1/m)" : "star-metric quadratic") + ", max relative error " +
                  fmt(worst));
}

}  // namespace antirotor::norms
