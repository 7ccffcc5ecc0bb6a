#include <doctest.h>

#include "psalg/rank1.hpp"
#include "support.hpp"

using namespace psalg;
using namespace psalg::testing;

namespace {

Tensor w_alpha(const HopfAlgebra& H, int gen = 0) {
  HElem d = generator_elem(H, gen);
  Tensor t = tensor_of(d, unit_elem(H));
  return t - tensor_of(unit_elem(H), d);
}

bool is_constant_line(const SolutionReport& rep) {
  // exactly one component: the constant monomial free, everything else 0
  if (rep.components.size() != 1) return false;
  const SolutionComponent& c = rep.components[0];
  if (c.free_vars.size() != 1 || !c.dependent.empty() || !c.constraints.empty())
    return false;
  for (const auto& [v, val] : c.fixed)
    if (!is_zero(val)) return false;
  return rep.system.unknowns[c.free_vars[0]].exp ==
         std::vector<int>(rep.system.unknowns[c.free_vars[0]].exp.size(), 0);
}

}  // namespace

TEST_CASE("rational root extraction") {
  // (x - 1)(x + 2)(2x - 3) = 2x^3 + ... ; roots 1, -2, 3/2
  std::map<int, Rational> p;
  auto mulf = [&](std::map<int, Rational> a, Rational r0, Rational r1) {
    // multiply by (r0 x + r1)
    std::map<int, Rational> out;
    for (const auto& [e, c] : a) {
      add_term(out, e + 1, c * r0);
      add_term(out, e, c * r1);
    }
    return out;
  };
  p = {{0, Rational(1)}};
  p = mulf(p, 1, -1);
  p = mulf(p, 1, 2);
  p = mulf(p, 2, -3);
  UnivariateRoots r = rational_roots(p);
  CHECK(r.leftover.empty());
  CHECK(r.roots == std::vector<Rational>{-2, 1, Rational(3, 2)});
  // x^2 stays a double root at zero
  UnivariateRoots r2 = rational_roots({{2, Rational(1)}});
  CHECK(r2.roots == std::vector<Rational>{0});
  CHECK(r2.leftover.empty());
  // x^2 + 1 has no rational roots
  UnivariateRoots r3 = rational_roots({{2, Rational(1)}, {0, Rational(1)}});
  CHECK(r3.roots.empty());
  CHECK(!r3.leftover.empty());
}

TEST_CASE("prop 4.2 and 4.4: only constants over k[d]") {
  HopfPtr H = kd();
  Tensor alpha = w_alpha(*H);
  for (OpKind kind : {OpKind::Averaging, OpKind::Nijenhuis}) {
    SolutionReport rep = classify(kind, H, alpha, 3);
    CHECK(rep.status == SolveStatus::Solved);
    CHECK(is_constant_line(rep));
    CHECK(rep.verified);
    CHECK(rep.falsified_rest);
  }
}

TEST_CASE("prop 4.5: reynolds solutions {0, -1/lambda} and {0}") {
  HopfPtr H = kd();
  Tensor alpha = w_alpha(*H);
  Rational lam(7, 3);
  SolutionReport rep = classify(OpKind::Reynolds, H, alpha, 2, lam);
  CHECK(rep.status == SolveStatus::Solved);
  REQUIRE(rep.components.size() == 2);
  std::vector<Rational> values;
  for (const auto& c : rep.components) {
    CHECK(c.free_vars.empty());
    Rational v = 0;
    for (const auto& [var, val] : c.fixed)
      if (!is_zero(val)) {
        CHECK(rep.system.unknowns[var] == BasisKey{{0}, 0});
        v = val;
      }
    values.push_back(v);
  }
  std::sort(values.begin(), values.end());
  CHECK(values == std::vector<Rational>{-1 / lam, 0});
  CHECK(rep.verified);
  CHECK(rep.falsified_rest);

  SolutionReport rep0 = classify(OpKind::Reynolds, H, alpha, 2, 0);
  REQUIRE(rep0.components.size() == 1);
  CHECK(rep0.components[0].free_vars.empty());
  for (const auto& [var, val] : rep0.components[0].fixed) CHECK(is_zero(val));
  CHECK(rep0.verified);
}

TEST_CASE("classification over U(delta_2) with a lemma-4.1 table") {
  HopfPtr U = udelta2();
  Tensor alpha = w_alpha(*U, 0);
  for (OpKind kind : {OpKind::Averaging, OpKind::Nijenhuis}) {
    SolutionReport rep = classify(kind, U, alpha, 2);
    CHECK(rep.status == SolveStatus::Solved);
    CHECK(is_constant_line(rep));
    CHECK(rep.verified);
    CHECK(rep.falsified_rest);
  }
  SolutionReport rey = classify(OpKind::Reynolds, U, alpha, 2, Rational(2));
  CHECK(rey.status == SolveStatus::Solved);
  CHECK(rey.components.size() == 2);
  CHECK(rey.verified);
}

TEST_CASE("monotonicity in the degree cap") {
  HopfPtr H = kd();
  Tensor alpha = w_alpha(*H);
  for (int cap : {1, 2, 3, 4}) {
    SolutionReport rep = classify(OpKind::Averaging, H, alpha, cap);
    CHECK(rep.status == SolveStatus::Solved);
    CHECK(is_constant_line(rep));
  }
}

TEST_CASE("precondition failures") {
  HopfPtr H = kd();
  CHECK_THROWS_AS(residual_system(OpKind::Nijenhuis, *H, Tensor{2, {}}, 2),
                  std::invalid_argument);
  // alpha outside the Lemma 4.1 shape
  HElem d2 = monomial(BasisKey{{2}, 0});
  Tensor off = tensor_of(d2, unit_elem(*H));
  CHECK_THROWS_AS(residual_system(OpKind::Averaging, *H, off, 2),
                  std::invalid_argument);
  // group algebras are out of scope for the classifier
  HopfPtr G = kz2();
  HElem g = monomial(BasisKey{{}, 1});
  Tensor galpha = tensor_of(g, unit_elem(*G));
  CHECK_THROWS_AS(residual_system(OpKind::Averaging, *G, galpha, 2),
                  std::invalid_argument);
}

TEST_CASE("residual systems are nontrivial and quadratic-shaped") {
  HopfPtr H = kd();
  ResidualSystem sys = residual_system(OpKind::Averaging, *H, w_alpha(*H), 2);
  CHECK(sys.unknowns.size() == 3);
  CHECK(!sys.equations.empty());
  for (const Poly& e : sys.equations) CHECK(e.total_degree() <= 2);
  // reynolds picks up the cubic term
  ResidualSystem rey =
      residual_system(OpKind::Reynolds, *H, w_alpha(*H), 2, Rational(1));
  int maxdeg = 0;
  for (const Poly& e : rey.equations) maxdeg = std::max(maxdeg, e.total_degree());
  CHECK(maxdeg == 3);
}
