#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace pdbep {

// Exact rational scalar used for weights, LP arithmetic and ratio
// certificates. GMP-backed so repeated pivoting stays cheap.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Accepts "7", "-3/4" and decimal strings like "2.50"; conversion is exact.
// Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

// Shortest exact form: "p" when integral, otherwise "p/q".
std::string format_rational(const Rational& value);

}  // namespace pdbep
