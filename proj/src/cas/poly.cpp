#include "antirotor/cas/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "antirotor/errors.hpp"

namespace antirotor::cas {

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) degree_ += e;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ += other.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r(other);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
  r.degree_ -= degree_;
  return r;
}

Monomial Monomial::with_exponent(std::size_t var, std::uint32_t e) const {
  Monomial r(*this);
  r.degree_ = r.degree_ - r.exps_[var] + e;
  r.exps_[var] = e;
  return r;
}

int compare_grlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

bool term_greater(const MultiPoly::Term& a, const MultiPoly::Term& b) {
  return compare_grlex(a.first, b.first) > 0;
}

}  // namespace

MultiPoly MultiPoly::constant(std::size_t nvars, const BigRational& c) {
  MultiPoly p(nvars);
  if (c != 0) p.terms_.emplace_back(Monomial(nvars), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t var) {
  if (var >= nvars) throw UsageError("variable index out of range");
  MultiPoly p(nvars);
  p.terms_.emplace_back(Monomial(nvars).with_exponent(var, 1), BigRational(1));
  return p;
}

MultiPoly MultiPoly::monomial(const Monomial& m, const BigRational& c) {
  MultiPoly p(m.size());
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

MultiPoly MultiPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  std::unordered_map<Monomial, BigRational, MonomialHash> acc;
  for (auto& [m, c] : terms) {
    if (m.size() != nvars) throw UsageError("exponent vector length differs from variable count");
    acc[m] += c;
  }
  MultiPoly p(nvars);
  for (auto& [m, c] : acc) {
    if (c != 0) p.terms_.emplace_back(m, c);
  }
  std::sort(p.terms_.begin(), p.terms_.end(), term_greater);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree() == 0);
}

BigRational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.degree() == 0) return terms_.back().second;
  return 0;
}

BigRational MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return compare_grlex(t.first, key) > 0;
  });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().first.degree());
}

std::uint32_t MultiPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

const MultiPoly::Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw UsageError("leading term of the zero polynomial");
  return terms_.front();
}

std::vector<bool> MultiPoly::used_variables() const {
  std::vector<bool> used(nvars_, false);
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] != 0) used[i] = true;
    }
  }
  return used;
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
  if (nvars_ != other.nvars_) {
    throw UsageError("polynomial variable counts differ (" + std::to_string(nvars_) + " vs " +
                     std::to_string(other.nvars_) + ")");
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& a,
                                         const std::vector<MultiPoly::Term>& b, bool subtract) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp;
    if (i == a.size()) {
      cmp = -1;
    } else if (j == b.size()) {
      cmp = 1;
    } else {
      cmp = compare_grlex(a[i].first, b[j].first);
    }
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.emplace_back(b[j].first, subtract ? BigRational(-b[j].second) : b[j].second);
      ++j;
    } else {
      BigRational c = subtract ? BigRational(a[i].second - b[j].second) : BigRational(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_compatible(other);
  terms_ = merge_terms(terms_, other.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_compatible(other);
  terms_ = merge_terms(terms_, other.terms_, true);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly r(a.nvars_);
  if (a.is_zero() || b.is_zero()) return r;
  if (b.terms_.size() == 1 || a.terms_.size() == 1) {
    // Multiplying by a single term preserves the order.
    const MultiPoly& many = a.terms_.size() == 1 ? b : a;
    const MultiPoly::Term& t = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
    r.terms_.reserve(many.terms_.size());
    for (const auto& [m, c] : many.terms_) r.terms_.emplace_back(m * t.first, c * t.second);
    return r;
  }
  std::unordered_map<Monomial, BigRational, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  BigRational prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      acc[ma * mb] += prod;
    }
  }
  for (auto& [m, c] : acc) {
    if (c != 0) r.terms_.emplace_back(m, std::move(c));
  }
  std::sort(r.terms_.begin(), r.terms_.end(), term_greater);
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
  if (nvars_ != other.nvars_ || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].first == other.terms_[i].first) || terms_[i].second != other.terms_[i].second) return false;
  }
  return true;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(nvars_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= nvars_) throw UsageError("derivative variable index out of range");
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    out.emplace_back(m.with_exponent(var, m[var] - 1), c * m[var]);
  }
  // Lowering the same exponent in every surviving term keeps the grlex order.
  MultiPoly r(nvars_);
  r.terms_ = std::move(out);
  return r;
}

MultiPoly MultiPoly::substitute(std::size_t var, const BigRational& value) const {
  if (var >= nvars_) throw UsageError("substitution variable index out of range");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    BigRational f = c;
    if (m[var] > 0) {
      BigRational p;
      mpz_pow_ui(p.get_num_mpz_t(), value.get_num_mpz_t(), m[var]);
      mpz_pow_ui(p.get_den_mpz_t(), value.get_den_mpz_t(), m[var]);
      f *= p;
    }
    out.emplace_back(m.with_exponent(var, 0), f);
  }
  return from_terms(nvars_, std::move(out));
}

MultiPoly MultiPoly::compose(std::span<const MultiPoly> images) const {
  if (images.size() != nvars_) throw UsageError("compose needs one image per variable");
  if (images.empty()) return *this;
  std::size_t target = images[0].num_vars();
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  MultiPoly out(target);
  for (const auto& [m, c] : terms_) {
    MultiPoly t = constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target, 1));
      while (cache.size() <= m[i]) cache.push_back(cache.back() * images[i]);
      t *= cache[m[i]];
    }
    out += t;
  }
  return out;
}

BigRational MultiPoly::evaluate(std::span<const BigRational> point) const {
  if (point.size() != nvars_) throw UsageError("evaluation point has wrong length");
  BigRational sum = 0;
  BigRational term;
  for (const auto& [m, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (std::uint32_t e = 0; e < m[i]; ++e) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

double MultiPoly::evaluate(std::span<const double> point) const {
  if (point.size() != nvars_) throw UsageError("evaluation point has wrong length");
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double term = c.get_d();
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] != 0) term *= std::pow(point[i], static_cast<double>(m[i]));
    }
    sum += term;
  }
  return sum;
}

BigRational MultiPoly::content() const {
  if (terms_.empty()) return 0;
  BigInt g = 0;
  BigInt l = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  return make_rational(g, l);
}

MultiPoly MultiPoly::primitive() const {
  if (terms_.empty()) return *this;
  BigRational c = content();
  MultiPoly r(*this);
  for (auto& t : r.terms_) t.second /= c;
  return r;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    BigRational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit_coeff = mag == 1 && m.degree() > 0;
    if (!unit_coeff) out << mag.get_str();
    bool need_star = !unit_coeff;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) out << "*";
      out << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
      if (m[i] > 1) out << "^" << m[i];
      need_star = true;
    }
  }
  return out.str();
}

std::string MultiPoly::to_string() const { return to_string(default_variable_names(nvars_)); }

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add:
      return a + b;
    case PolyOp::sub:
      return a - b;
    case PolyOp::mul:
      return a * b;
  }
  throw UsageError("unknown polynomial operation");
}

MultiPoly poly_derivative(const MultiPoly& p, std::size_t var) { return p.derivative(var); }

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (a.num_vars() != b.num_vars()) throw UsageError("polynomial variable counts differ");
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<MultiPoly::Term> quotient;
  MultiPoly rem = a;
  const auto& [lm, lc] = b.leading_term();
  // If b | a then every intermediate remainder is a multiple of b, so its
  // leading monomial is divisible by lm; failing that proves non-divisibility.
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading_term();
    if (!lm.divides(rm)) return std::nullopt;
    MultiPoly::Term t(lm.quotient_of(rm), rc / lc);
    rem -= MultiPoly::monomial(t.first, t.second) * b;
    quotient.push_back(std::move(t));
  }
  return MultiPoly::from_terms(a.num_vars(), std::move(quotient));
}

std::vector<std::string> default_variable_names(std::size_t n) {
  static const char* kShort[] = {"x", "y", "z", "w", "v"};
  std::vector<std::string> names;
  if (n <= 5) {
    for (std::size_t i = 0; i < n; ++i) names.emplace_back(kShort[i]);
  } else {
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  return names;
}

std::vector<std::string> greek_parameter_names(std::size_t m) {
  static const char* kGreek[] = {"α", "β", "γ", "δ", "ε", "ζ", "η", "θ", "ι", "κ", "λ", "μ",
                                 "ν", "ξ", "ο", "π", "ρ", "σ", "τ", "υ", "φ", "χ", "ψ", "ω"};
  constexpr std::size_t kCount = sizeof(kGreek) / sizeof(kGreek[0]);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) {
    if (m <= kCount) {
      names.emplace_back(kGreek[i]);
    } else {
      names.push_back("α" + std::to_string(i + 1));
    }
  }
  return names;
}

RatFn::RatFn(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.num_vars() != den_.num_vars()) throw UsageError("rational function variable counts differ");
  BigRational c = den_.content();
  if (den_.leading_term().second < 0) c = -c;
  num_ *= BigRational(1 / c);
  den_ *= BigRational(1 / c);
}

double RatFn::evaluate(std::span<const double> point) const {
  return num_.evaluate(point) / den_.evaluate(point);
}

bool LinForm::is_zero() const {
  if (constant != 0) return false;
  for (const auto& c : coeffs) {
    if (c != 0) return false;
  }
  return true;
}

MultiPoly LinForm::to_poly() const {
  std::size_t m = coeffs.size();
  MultiPoly p = MultiPoly::constant(m, constant);
  for (std::size_t q = 0; q < m; ++q) {
    if (coeffs[q] != 0) p += MultiPoly::variable(m, q) * coeffs[q];
  }
  return p;
}

std::string LinForm::to_string(const std::vector<std::string>& names) const {
  return to_poly().to_string(names);
}

}  // namespace antirotor::cas
