#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace mombound {

/// Exact arbitrary-precision rational. Always kept in canonical form.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", an integer, or a decimal literal with optional exponent
/// ("0.375", "-1.5e-3") into the exact rational it denotes.
/// Throws InputError on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

/// Exact value of a finite double (dyadic rational).
Rational exact_from_double(double x);

double to_double(const Rational& q);

/// Best rational approximation with denominator <= max_denominator, found by
/// continued-fraction expansion of x.
Rational rationalize(double x, std::uint64_t max_denominator);

/// n! and the odd double factorial (2k-1)!! = 1*3*...*(2k-1) (1 for k = 0).
Integer factorial(unsigned n);
Integer odd_double_factorial(unsigned k);

/// base^e for e >= 0.
Rational power(const Rational& base, unsigned e);

}  // namespace mombound
