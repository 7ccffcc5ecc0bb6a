#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace psalg {

// Exact arbitrary-precision rationals. No floating point anywhere in the
// library.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "p", "-p", "p/q". Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& s);

Rational factorial(int n);
Rational binomial(int n, int k);

}  // namespace psalg
