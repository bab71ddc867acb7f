#include "antirotor/cas/rational.hpp"

#include <cctype>

#include "antirotor/errors.hpp"

namespace antirotor::cas {

BigRational make_rational(long num, long den) {
  if (den == 0) throw UsageError("zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw UsageError("zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw UsageError("not an integer: '" + std::string(s) + "'");
  BigInt v(std::string(s), 10);
  return negative ? BigInt(-v) : v;
}

BigRational parse_decimal(std::string_view s) {
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    BigInt ev = parse_integer(s.substr(e + 1));
    if (!ev.fits_slong_p() || abs(ev) > 10000) throw UsageError("exponent out of range");
    exponent = ev.get_si();
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  auto dot = s.find('.');
  if (dot == std::string_view::npos) {
    digits = std::string(s);
  } else {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  }
  if (!all_digits(digits)) throw UsageError("not a number");
  BigInt mant(digits, 10);
  if (negative) mant = -mant;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? make_rational(mant, scale) : BigRational(mant * scale);
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw UsageError("empty rational literal");
  try {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      BigInt num = parse_integer(text.substr(0, slash));
      BigInt den = parse_integer(text.substr(slash + 1));
      return make_rational(num, den);
    }
    return parse_decimal(text);
  } catch (const UsageError&) {
    throw UsageError("malformed rational literal '" + std::string(text) + "'");
  }
}

std::string to_string(const BigRational& q) { return q.get_str(10); }

double to_double(const BigRational& q) { return q.get_d(); }

int sign(const BigRational& q) { return sgn(q); }

bool rational_sqrt(const BigRational& q, BigRational* root) {
  if (sgn(q) < 0) return false;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(q.get_den_mpz_t()) == 0) return false;
  BigInt n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  if (root != nullptr) *root = make_rational(n, d);
  return true;
}

}  // namespace antirotor::cas
