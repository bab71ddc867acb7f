#include "antirotor/cas/upoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "antirotor/errors.hpp"

namespace antirotor::cas {

UPoly::UPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const BigRational& c) { return UPoly({c}); }

UPoly UPoly::x() { return UPoly({BigRational(0), BigRational(1)}); }

UPoly UPoly::from_multi(const MultiPoly& p, std::size_t var) {
  std::vector<BigRational> c(p.is_zero() ? 0 : p.degree_in(var) + 1);
  for (const auto& [m, coeff] : p.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != var && m[i] != 0) throw UsageError("polynomial depends on more than one variable");
    }
    c[m[var]] += coeff;
  }
  return UPoly(std::move(c));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational UPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[i];
}

BigRational UPoly::lead() const { return coeffs_.empty() ? BigRational(0) : coeffs_.back(); }

UPoly UPoly::operator-() const {
  UPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<BigRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const BigRational& k) {
  std::vector<BigRational> c(a.coeffs_);
  for (auto& v : c) v *= k;
  return UPoly(std::move(c));
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigRational> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UPoly(std::move(c));
}

UPoly UPoly::integral() const {
  if (coeffs_.empty()) return {};
  std::vector<BigRational> c(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + 1] = coeffs_[i] / static_cast<long>(i + 1);
  return UPoly(std::move(c));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return *this * BigRational(1 / lead());
}

UPoly UPoly::primitive() const {
  if (is_zero()) return {};
  BigInt g = 0;
  BigInt l = 1;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  BigRational scale = make_rational(l, g);
  if (lead() < 0) scale = -scale;
  return *this * scale;
}

BigRational UPoly::evaluate(const BigRational& t) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double UPoly::evaluate(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

std::complex<long double> UPoly::evaluate(std::complex<long double> t) const {
  std::complex<long double> acc = 0.0L;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + static_cast<long double>(it->get_d());
  }
  return acc;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<BigRational> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<BigRational> quot(a.degree() - db + 1);
  BigRational lb = b.lead();
  for (int k = a.degree() - db; k >= 0; --k) {
    BigRational q = rem[k + db] / lb;
    quot[k] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly exact_quotient(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw VerificationError("expected exact polynomial division");
  return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    // Keep the intermediate coefficients small.
    x = std::move(y);
    y = r.primitive();
  }
  return x.monic();
}

std::vector<UPoly> squarefree_decomposition(const UPoly& p) {
  if (p.is_zero()) throw DomainError("squarefree decomposition of zero");
  std::vector<UPoly> out;
  if (p.degree() == 0) return out;
  UPoly f = p.monic();
  UPoly fp = f.derivative();
  UPoly a = gcd(f, fp);
  UPoly b = exact_quotient(f, a);
  UPoly c = exact_quotient(fp, a);
  UPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UPoly g = gcd(b, d);
    out.push_back(g);
    b = exact_quotient(b, g);
    c = exact_quotient(d, g);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

namespace {

// Divisors of |n| for |n| below a size limit; empty when n is too large.
std::vector<BigInt> small_divisors(const BigInt& n) {
  BigInt a = abs(n);
  std::vector<BigInt> divs;
  if (a > BigInt("1000000000000")) return divs;
  unsigned long v = a.get_ui();
  std::vector<unsigned long> small;
  std::vector<unsigned long> large;
  for (unsigned long d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    small.push_back(d);
    if (d != v / d) large.push_back(v / d);
  }
  for (auto d : small) divs.emplace_back(d);
  for (auto it = large.rbegin(); it != large.rend(); ++it) divs.emplace_back(*it);
  return divs;
}

void add_root(std::vector<BigRational>& roots, const BigRational& r) {
  if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
}

// Continued-fraction convergents of x with denominators up to a bound.
std::vector<BigRational> convergents(long double x, long max_den) {
  std::vector<BigRational> out;
  long double v = x;
  BigInt h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  for (int iter = 0; iter < 40; ++iter) {
    long double a = std::floor(v);
    BigInt ai(static_cast<double>(a));
    BigInt h = ai * h0 + h1;
    BigInt k = ai * k0 + k1;
    if (k > max_den) break;
    out.push_back(make_rational(h, k));
    h1 = h0;
    h0 = h;
    k1 = k0;
    k0 = k;
    long double frac = v - a;
    if (std::fabs(frac) < 1e-18L) break;
    v = 1.0L / frac;
  }
  return out;
}

}  // namespace

std::vector<BigRational> rational_roots(const UPoly& p) {
  if (p.is_zero()) throw DomainError("rational roots of the zero polynomial");
  std::vector<BigRational> roots;
  std::vector<BigRational> c = p.primitive().coeffs();
  std::size_t shift = 0;
  while (shift < c.size() && c[shift] == 0) ++shift;
  if (shift > 0) roots.emplace_back(0);
  UPoly q(std::vector<BigRational>(c.begin() + static_cast<long>(shift), c.end()));
  if (q.degree() <= 0) return roots;
  // Squarefree part keeps the numeric fallback well conditioned.
  q = exact_quotient(q, gcd(q, q.derivative())).primitive();
  if (q.degree() == 0) return roots;
  BigInt a0 = q.coeffs().front().get_num();
  BigInt an = q.coeffs().back().get_num();
  auto dp = small_divisors(a0);
  auto dq = small_divisors(an);
  if (!dp.empty() && !dq.empty()) {
    for (const auto& num : dp) {
      for (const auto& den : dq) {
        for (int s : {1, -1}) {
          BigRational r = make_rational(BigInt(num * s), den);
          if (q.evaluate(r) == 0) add_root(roots, r);
        }
      }
    }
  } else {
    // Coefficients too large to enumerate divisors: try rational
    // reconstructions of the numeric real roots and confirm exactly.
    long max_den = an.fits_slong_p() ? std::max(1L, std::labs(an.get_si())) : 1000000000L;
    for (const auto& z : numeric_roots(q)) {
      if (std::fabs(z.imag()) > 1e-6L * (1.0L + std::abs(z))) continue;
      for (const auto& r : convergents(z.real(), max_den)) {
        if (q.evaluate(r) == 0) add_root(roots, r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int count_real_roots(const UPoly& p) {
  if (p.is_zero()) throw DomainError("real roots of the zero polynomial");
  if (p.degree() == 0) return 0;
  // Positive rescaling keeps the coefficients small without disturbing signs.
  auto rescale = [](const UPoly& q) {
    UPoly r = q.primitive();
    return sgn(r.lead()) == sgn(q.lead()) ? r : -r;
  };
  std::vector<UPoly> seq{rescale(p), rescale(p.derivative())};
  while (seq.back().degree() > 0) {
    UPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(rescale(-r));
  }
  std::vector<int> at_neg;
  std::vector<int> at_pos;
  for (const auto& s : seq) {
    int lead = sgn(s.lead());
    at_pos.push_back(lead);
    at_neg.push_back(s.degree() % 2 == 0 ? lead : -lead);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

std::vector<std::complex<long double>> numeric_roots(const UPoly& p) {
  using C = std::complex<long double>;
  int n = p.degree();
  std::vector<C> roots;
  if (n <= 0) return roots;
  UPoly m = p.monic();
  UPoly dm = m.derivative();
  long double bound = 0.0L;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::fabs(static_cast<long double>(m.coeff(i).get_d())));
  bound += 1.0L;
  for (int k = 0; k < n; ++k) {
    long double angle = 2.0L * std::numbers::pi_v<long double> * (k + 0.25L) / n;
    roots.emplace_back(0.5L * bound * std::cos(angle), 0.5L * bound * std::sin(angle));
  }
  for (int iter = 0; iter < 500; ++iter) {
    long double max_step = 0.0L;
    for (int k = 0; k < n; ++k) {
      C val = m.evaluate(roots[k]);
      C der = dm.evaluate(roots[k]);
      if (std::abs(val) == 0.0L) continue;
      C ratio = val / der;
      C sum = 0.0L;
      for (int j = 0; j < n; ++j) {
        if (j != k) sum += 1.0L / (roots[k] - roots[j]);
      }
      C step = ratio / (1.0L - ratio * sum);
      roots[k] -= step;
      max_step = std::max(max_step, std::abs(step) / (1.0L + std::abs(roots[k])));
    }
    if (max_step < 1e-19L) break;
  }
  for (auto& r : roots) {
    for (int k = 0; k < 3; ++k) {
      C der = dm.evaluate(r);
      if (std::abs(der) == 0.0L) break;
      r -= m.evaluate(r) / der;
    }
  }
  return roots;
}

namespace {

// p(t + s) by repeated synthetic division.
UPoly shift_argument(const UPoly& p, const BigRational& s) {
  std::vector<BigRational> c = p.coeffs();
  int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i) {
    for (int j = n - 2; j >= i; --j) c[j] += s * c[j + 1];
  }
  return UPoly(std::move(c));
}

bool try_quartic_split(const UPoly& quartic, std::vector<UPoly>* out) {
  UPoly f = quartic.monic();
  BigRational a = f.coeff(3);
  BigRational s = -a / 4;
  // Depressed quartic u^4 + P u^2 + Q u + R with t = u + s.
  UPoly g = shift_argument(f, s);
  BigRational P = g.coeff(2);
  BigRational Q = g.coeff(1);
  BigRational R = g.coeff(0);
  std::vector<std::pair<UPoly, UPoly>> candidates;
  auto quad = [](const BigRational& b, const BigRational& c) {
    return UPoly({c, b, BigRational(1)});
  };
  if (Q != 0) {
    UPoly resolvent({BigRational(-Q * Q), BigRational(P * P - 4 * R), BigRational(2 * P), BigRational(1)});
    for (const auto& y : rational_roots(resolvent)) {
      BigRational k;
      if (y <= 0 || !rational_sqrt(y, &k)) continue;
      BigRational m = (P + y - Q / k) / 2;
      BigRational n = (P + y + Q / k) / 2;
      candidates.emplace_back(quad(k, m), quad(-k, n));
    }
  } else {
    BigRational disc = P * P - 4 * R;
    BigRational r;
    if (rational_sqrt(disc, &r)) {
      candidates.emplace_back(quad(0, (P + r) / 2), quad(0, (P - r) / 2));
    }
    BigRational root_r;
    if (rational_sqrt(R, &root_r)) {
      for (const BigRational& m : {root_r, BigRational(-root_r)}) {
        BigRational k;
        if (rational_sqrt(BigRational(2 * m - P), &k)) candidates.emplace_back(quad(k, m), quad(-k, m));
      }
    }
  }
  for (const auto& [u1, u2] : candidates) {
    if (!(u1 * u2 == g)) continue;
    out->push_back(shift_argument(u1, -s));
    out->push_back(shift_argument(u2, -s));
    return true;
  }
  return false;
}

}  // namespace

std::vector<UPoly> split_rational_irreducible(const UPoly& p) {
  std::vector<UPoly> out;
  if (p.degree() <= 0) return out;
  if (p.degree() == 4 && try_quartic_split(p, &out)) return out;
  out.push_back(p.monic());
  return out;
}

}  // namespace antirotor::cas
