#include <cmath>

#include "antirotor/cas/integrate.hpp"
#include "antirotor/errors.hpp"
#include "antirotor/invariants/invariants.hpp"

namespace antirotor::inv {

using cas::BigRational;
using cas::QVector;
using cas::UPoly;

namespace {

constexpr double kNumericRankTol = 1e-9;

struct ClassCoordinates {
  std::vector<std::vector<BigRational>> exact;  // one row per generator
  std::vector<std::vector<double>> numeric;
};

void append(ClassCoordinates& cls, std::size_t q, const std::vector<BigRational>& exact,
            const std::vector<double>& numeric) {
  cls.exact[q].insert(cls.exact[q].end(), exact.begin(), exact.end());
  cls.numeric[q].insert(cls.numeric[q].end(), numeric.begin(), numeric.end());
}

bool any_nonzero(const std::vector<BigRational>& v) {
  for (const auto& x : v) {
    if (x != 0) return true;
  }
  return false;
}

std::size_t exact_rank(const std::vector<std::vector<BigRational>>& rows) {
  if (rows.empty() || rows[0].empty()) return 0;
  QMatrix a = cas::zero_qmatrix(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) a(i, j) = rows[i][j];
  }
  return cas::rank_exact(a);
}

std::size_t numeric_rank(const ClassCoordinates& cls) {
  std::size_t rows = cls.exact.size();
  if (rows == 0) return 0;
  std::size_t cols = cls.exact[0].size() + cls.numeric[0].size();
  if (cols == 0) return 0;
  cas::DMatrix a(rows, cols, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    std::size_t c = 0;
    for (const auto& x : cls.exact[i]) a(i, c++) = x.get_d();
    for (double x : cls.numeric[i]) a(i, c++) = x;
  }
  return cas::rank_double(a, kNumericRankTol);
}

}  // namespace

TauReport tau_triple(const Algebra& alg, const ParamSymMatrix& u) {
  if (!alg.unital()) throw DomainError("tau triple needs a unital algebra");
  std::size_t n = alg.dim();
  if (u.n() != n) throw UsageError("anti-rotor size does not match the algebra");
  std::size_t m = u.param_count();
  auto inv = alg::symbolic_inverse(alg);
  const QVector& unit = alg.unit();

  ClassCoordinates rat{std::vector<std::vector<BigRational>>(m), std::vector<std::vector<double>>(m)};
  ClassCoordinates log = rat;
  ClassCoordinates arc = rat;
  TauReport report;
  bool numeric = false;

  for (std::size_t k = 0; k < n; ++k) {
    // Axis segment: x_k = t, every other coordinate at its unit value.
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < n; ++i) {
      images.push_back(i == k ? MultiPoly::variable(1, 0) : MultiPoly::constant(1, unit[i]));
    }
    UPoly den = UPoly::from_multi(inv.denominator.compose(images), 0);
    std::vector<UPoly> comps;
    for (const auto& p : inv.numerators) comps.push_back(UPoly::from_multi(p.compose(images), 0));
    cas::RationalIntegrator integ(den);
    numeric = numeric || !integ.all_exact();

    std::vector<cas::IntegralTerms> terms;
    std::size_t poly_len = 0;
    for (const auto& g : u.generators()) {
      UPoly num;
      for (std::size_t j = 0; j < n; ++j) {
        if (g(k, j) != 0) num = num + comps[j] * g(k, j);
      }
      terms.push_back(integ.integrate(num));
      poly_len = std::max(poly_len, terms.back().polynomial.size());
    }
    for (std::size_t q = 0; q < m; ++q) {
      auto& t = terms[q];
      t.polynomial.resize(poly_len);
      std::vector<BigRational> r = t.polynomial;
      r.insert(r.end(), t.hermite.begin(), t.hermite.end());
      append(rat, q, r, {});
      append(log, q, t.log_exact, t.log_numeric);
      append(arc, q, t.arctan_exact, t.arctan_numeric);
    }
  }

  auto presence = [&](const ClassCoordinates& cls) {
    std::size_t count = 0;
    for (std::size_t q = 0; q < m; ++q) {
      bool present = any_nonzero(cls.exact[q]);
      if (!present && !cls.numeric[q].empty()) {
        double scale = 1.0;
        for (double x : cls.numeric[q]) scale = std::max(scale, std::fabs(x));
        auto p = cas::numeric_presence(cls.numeric[q], scale);
        if (p == cas::Presence::undecided) {
          report.undecided = true;
          report.warnings.push_back("term presence for parameter " + std::to_string(q + 1) + " is undecided");
        }
        present = p == cas::Presence::present;
      }
      if (present) ++count;
    }
    return count;
  };
  report.presence = {presence(rat), presence(log), presence(arc)};

  if (numeric) {
    report.method = "numeric";
    report.raw = {exact_rank(rat.exact), numeric_rank(log), numeric_rank(arc)};
    report.warnings.push_back("some denominator factors have degree above four; log/arctan ranks are numeric");
  } else {
    report.method = "exact";
    report.raw = {exact_rank(rat.exact), exact_rank(log.exact), exact_rank(arc.exact)};
  }
  report.reduced_rat = static_cast<long>(report.raw.rat);
  report.reduced_log = static_cast<long>(report.raw.log) - 1;
  report.reduced_arc = static_cast<long>(report.raw.arc);
  if (report.raw.log == 0 && alg.associative()) {
    report.warnings.push_back("tau_log is zero for an associative unital algebra");
  }
  return report;
}

}  // namespace antirotor::inv
