#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cycmzv {

// GMP rationals are kept canonical (lowest terms, positive denominator) by
// every arithmetic operator; only raw construction needs canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p/q", "p" or "-p/q". Throws ParseError.
Rational parse_rational(std::string_view text);

/// Serializes as "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& q);

}  // namespace cycmzv
