#include "antirotor/norms/norms.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "antirotor/errors.hpp"
#include "antirotor/skewer/skewer.hpp"

namespace antirotor::norms {

namespace {

constexpr std::size_t kNodes = 15;

struct GaussLegendre {
  std::array<double, kNodes> x{};  // on [0, 1]
  std::array<double, kNodes> w{};

  GaussLegendre() {
    // Newton iteration on P_n from the Chebyshev-like initial guesses.
    const int n = static_cast<int>(kNodes);
    for (int i = 0; i < n; ++i) {
      double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = z;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (z * p1 - p0) / (z * z - 1.0);
        double dz = p1 / dp;
        z -= dz;
        if (std::fabs(dz) < 1e-16) break;
      }
      x[i] = 0.5 * (1.0 - z);
      w[i] = 1.0 / ((1.0 - z * z) * dp * dp);  // 2/((1-z^2)P'^2) scaled by 1/2
    }
  }
};

const GaussLegendre& rule() {
  static const GaussLegendre gl;
  return gl;
}

Point lerp(const Point& a, const Point& b, double tau) {
  Point t(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) t[i] = a[i] + tau * (b[i] - a[i]);
  return t;
}

double inf_norm(const Point& p) {
  double m = 0.0;
  for (double v : p) m = std::max(m, std::fabs(v));
  return m;
}

std::string point_string(const Point& p) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < p.size(); ++i) out << (i ? ", " : "") << p[i];
  out << ")";
  return out.str();
}

}  // namespace

std::vector<Point> staircase_path(const QVector& unit, const Point& s, PathOrder order) {
  std::size_t n = unit.size();
  if (s.size() != n) throw UsageError("point has " + std::to_string(s.size()) + " coordinates, expected " +
                                      std::to_string(n));
  Point cur(n);
  for (std::size_t i = 0; i < n; ++i) cur[i] = unit[i].get_d();
  std::vector<Point> path{cur};
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t k = order == PathOrder::forward ? step : n - 1 - step;
    if (cur[k] == s[k]) continue;
    cur[k] = s[k];
    path.push_back(cur);
  }
  return path;
}

NormEvaluator::NormEvaluator(const Algebra& alg, const QMatrix& metric, bool require_membership)
    : alg_(alg), metric_(metric) {
  if (!alg_.unital()) throw DomainError("unital norms need a unital algebra; '" + alg_.name() + "' has no unit");
  std::size_t n = alg_.dim();
  if (metric_.rows() != n || metric_.cols() != n) throw UsageError("metric size does not match the algebra");
  if (!metric_.is_symmetric()) throw UsageError("metric is not symmetric");
  if (require_membership) {
    auto u = skewer::anti_rotor(alg_);
    coordinates_ = skewer::membership_check(u, metric_);
    if (!coordinates_) {
      throw DomainError("metric is not in the anti-rotor of '" + alg_.name() +
                        "'; the norm integral would depend on the path");
    }
  }
  metric_d_ = cas::DMatrix(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) metric_d_(i, j) = metric_(i, j).get_d();
  }
  for (const auto& c : alg_.unit()) unit_.push_back(c.get_d());
  unit_norm_sq_ = alg_.unit_norm_sq().get_d();
}

double NormEvaluator::degree() const {
  const auto& e = alg_.unit();
  cas::BigRational acc = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < e.size(); ++j) acc += e[i] * metric_(i, j) * e[j];
  }
  return cas::BigRational(acc / alg_.unit_norm_sq()).get_d();
}

Point NormEvaluator::inverse(const Point& t) const {
  return cas::solve_double(alg::left_regular_rep(alg_, t), unit_);
}

Point NormEvaluator::log_gradient(const Point& t) const {
  Point y = inverse(t);
  std::size_t n = y.size();
  Point g(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g[i] += metric_d_(i, j) * y[j];
    g[i] /= unit_norm_sq_;
  }
  return g;
}

double NormEvaluator::det_at(const Point& t) const {
  return cas::det_double(alg::left_regular_rep(alg_, t));
}

double NormEvaluator::integrand(const Point& a, const Point& b, double tau) const {
  Point t = lerp(a, b, tau);
  Point g = log_gradient(t);
  double acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) acc += g[i] * (b[i] - a[i]);
  return acc;
}

double NormEvaluator::segment_integral(const Point& a, const Point& b, const NormOptions& options,
                                       double& error) const {
  const auto& gl = rule();
  auto estimate = [&](double lo, double hi) {
    double acc = 0.0;
    for (std::size_t i = 0; i < kNodes; ++i) acc += gl.w[i] * integrand(a, b, lo + (hi - lo) * gl.x[i]);
    return acc * (hi - lo);
  };
  // Explicit stack keeps the summation order fixed: left halves first.
  struct Piece {
    double lo, hi, whole, tol;
    int depth;
  };
  double total = 0.0;
  bool ok = true;
  std::vector<Piece> stack{{0.0, 1.0, estimate(0.0, 1.0), options.tol, 0}};
  while (!stack.empty()) {
    Piece p = stack.back();
    stack.pop_back();
    double mid = 0.5 * (p.lo + p.hi);
    double left = estimate(p.lo, mid);
    double right = estimate(mid, p.hi);
    double diff = std::fabs(left + right - p.whole);
    if (!std::isfinite(left + right)) throw DomainError("integrand is not finite on the path");
    if (diff <= p.tol || p.depth >= options.max_depth) {
      ok = ok && diff <= p.tol;
      total += left + right;
      error += diff;
      continue;
    }
    stack.push_back({mid, p.hi, right, 0.5 * p.tol, p.depth + 1});
    stack.push_back({p.lo, mid, left, 0.5 * p.tol, p.depth + 1});
  }
  if (!ok) error = std::max(error, options.tol * 10);
  return total;
}

NormEvaluation NormEvaluator::evaluate(const Point& s, const NormOptions& options, PathOrder order) const {
  return evaluate_path(staircase_path(alg_.unit(), s, order), options);
}

NormEvaluation NormEvaluator::evaluate_path(const std::vector<Point>& path, const NormOptions& options) const {
  if (path.empty()) throw UsageError("empty path");
  std::size_t n = alg_.dim();
  for (const auto& p : path) {
    if (p.size() != n) throw UsageError("path point has the wrong number of coordinates");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (path[0][i] != unit_[i]) throw UsageError("path must start at the unit");
  }
  NormEvaluation out;
  out.path = path;
  if (coordinates_) out.metric_coordinates = *coordinates_;
  // det(L_1) = 1.  The norm is only defined on the component of units that
  // contains 1, so det must stay positive and away from zero along the path.
  const auto& gl = rule();
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    const Point& a = path[k];
    const Point& b = path[k + 1];
    std::vector<double> taus;
    for (int i = 0; i <= options.sign_samples; ++i) taus.push_back(static_cast<double>(i) / options.sign_samples);
    for (double x : gl.x) taus.push_back(x);
    for (double tau : taus) {
      Point t = lerp(a, b, tau);
      double scale = std::pow(std::max(inf_norm(t), 1e-300), static_cast<double>(n));
      double d = det_at(t);
      if (!(d > 1e-12 * scale)) {
        throw DomainError("non-unit on the path near " + point_string(t) +
                          " (det(L_t) reaches zero or changes sign); supply a custom path");
      }
    }
    double err = 0.0;
    out.log_value += segment_integral(a, b, options, err);
    out.quadrature_error_estimate += err;
  }
  out.converged = out.quadrature_error_estimate <= options.tol * static_cast<double>(path.size());
  out.value = std::exp(out.log_value);
  return out;
}

}  // namespace antirotor::norms
