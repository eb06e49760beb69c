#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace padj {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);

/// Exact C(n, k); zero when k > n.
BigInt binomial(unsigned n, unsigned k);

/// Floor and ceiling of an exact rational.
BigInt floor(const Rational& q);
BigInt ceil(const Rational& q);

double to_double(const Rational& q);

/// Decimal rendering with `digits` places, rounding half to even.
std::string format_fixed(const Rational& q, unsigned digits);

/// |a - b| <= tol, evaluated exactly.
bool within(const Rational& a, const Rational& b, const Rational& tol);

/// Parses a plain decimal literal such as "4.91" or "10" into an exact rational.
Rational parse_decimal(const std::string& text);

}  // namespace padj
