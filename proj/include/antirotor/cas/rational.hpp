#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace antirotor::cas {

using BigInt = mpz_class;
// mpq_class keeps every value in lowest terms with a positive denominator
// as long as it is produced by arithmetic or by make_rational below.
using BigRational = mpq_class;

BigRational make_rational(long num, long den = 1);
BigRational make_rational(const BigInt& num, const BigInt& den);

// Accepts "7", "-3/4", "0.125" and "1.5e-3".  Throws UsageError otherwise.
BigRational parse_rational(std::string_view text);

std::string to_string(const BigRational& q);
double to_double(const BigRational& q);
int sign(const BigRational& q);

// True when q is the square of a rational; the root is stored in *root.
bool rational_sqrt(const BigRational& q, BigRational* root);

}  // namespace antirotor::cas
