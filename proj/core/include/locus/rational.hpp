#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "locus/error.hpp"

namespace locus {

// Exact arithmetic backbone.  cpp_rational is header-only and always
// normalised; swapping in a GMP-backed type would only change these aliases.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& r) { return r.sign(); }

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

double to_double(const Rational& r);

// "p/q" with the "/q" omitted for integers.
std::string rational_str(const Rational& r);

// Accepts "p", "-p/q" and plain decimals like "0.25" (read exactly).
Rational parse_rational(const std::string& text);

}  // namespace locus
