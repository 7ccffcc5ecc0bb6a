#pragma once

#include <map>
#include <string>
#include <vector>

#include "psalg/rational.hpp"

namespace psalg {

// Sparse multivariate polynomial over Q, used as the coefficient ring when
// an H element carries unknown coefficients. Monomials map variable index to
// a positive exponent.
struct Poly {
  using Monomial = std::map<int, int>;
  std::map<Monomial, Rational> terms;

  Poly() = default;
  Poly(const Rational& c) {
    if (!is_zero(c)) terms.emplace(Monomial{}, c);
  }
  Poly(int c) : Poly(Rational(c)) {}

  static Poly var(int i) {
    Poly p;
    p.terms.emplace(Monomial{{i, 1}}, 1);
    return p;
  }

  bool is_zero_poly() const { return terms.empty(); }
  bool is_constant() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty());
  }
  Rational constant_value() const {
    return terms.empty() ? Rational(0) : terms.begin()->second;
  }
  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms) {
      int t = 0;
      for (const auto& [v, e] : m) t += e;
      d = std::max(d, t);
    }
    return d;
  }
  std::vector<int> variables() const {
    std::vector<int> vs;
    for (const auto& [m, c] : terms)
      for (const auto& [v, e] : m)
        if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    return vs;
  }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
  friend Poly operator-(const Poly& a) {
    Poly out;
    for (const auto& [m, c] : a.terms) out.terms.emplace(m, -c);
    return out;
  }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms == b.terms; }

  // substitute variable -> value/polynomial everywhere
  Poly substitute(int var, const Poly& value) const;

  std::string str(const std::vector<std::string>& names = {}) const;
};

inline bool is_zero(const Poly& p) { return p.terms.empty(); }
inline Poly scale_coeff(const Poly& p, const Rational& q) {
  Poly out;
  if (is_zero(q)) return out;
  for (const auto& [m, c] : p.terms) out.terms.emplace(m, c * q);
  return out;
}

// Rational roots of a univariate polynomial (integer content cleared,
// candidates p/q with p | constant, q | leading). Returns roots with
// multiplicity 1 and the nonconstant factor left after deflation (empty map
// if the polynomial splits over Q into linear factors and units).
struct UnivariateRoots {
  std::vector<Rational> roots;
  std::map<int, Rational> leftover;  // exponent -> coeff, {} when fully split
};
UnivariateRoots rational_roots(const std::map<int, Rational>& poly);

}  // namespace psalg
