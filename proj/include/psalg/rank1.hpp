#pragma once

#include "psalg/operators.hpp"
#include "psalg/poly.hpp"

namespace psalg {

// Identity residual for a rank-1 operator h with unknown coefficients:
// one polynomial equation per basis monomial of H (x) H.
struct ResidualSystem {
  std::vector<BasisKey> unknowns;  // monomial of h carried by variable i
  std::vector<Poly> equations;
  OpKind kind;
  Rational weight;
  int degree_cap = 0;

  std::vector<std::string> variable_names(const HopfAlgebra& H) const;
};

// Symbolic expansion of the rank-1 identity with h = sum u_I d^I, |I| <= d:
//   averaging    (h(x)h)a = (h(x)1)a D(h) and (h(x)h)a = (1(x)h)a D(h)
//   nijenhuis    (h(x)h)a = [(h(x)1 + 1(x)h)a - a D(h)] D(h)
//   reynolds(w)  (h(x)h)a = (1(x)h + h(x)1)a D(h) + w (h(x)h)a D(h)
// alpha must be nonzero and of the Lemma-4.1 shape over an enveloping H.
ResidualSystem residual_system(OpKind kind, const HopfAlgebra& H,
                               const Tensor& alpha, int degree_cap,
                               const Rational& weight = 0);

// One component of the solution set: constant coordinates, coordinates
// depending affinely on the free parameters, and the free parameters
// themselves. `constraints` is non-empty only when a leftover univariate
// factor has no rational root; such components are reported as factored
// polynomials.
struct SolutionComponent {
  std::map<int, Rational> fixed;
  std::map<int, Poly> dependent;  // var -> polynomial in the free vars
  std::vector<int> free_vars;
  std::vector<std::pair<int, std::map<int, Rational>>> constraints;  // (var, exponent->coeff)
};

enum class SolveStatus { Solved, Undecided };

struct SolutionReport {
  SolveStatus status = SolveStatus::Solved;
  ResidualSystem system;
  std::vector<SolutionComponent> components;
  bool verified = false;       // all sampled points re-passed check_operator
  bool falsified_rest = false; // degree 1..d unit-coefficient additions all break
  std::vector<std::string> notes;

  std::string to_text(const HopfAlgebra& H) const;
};

// Solves the residual system exactly: iterated linear elimination, then
// rational-root branching on univariate leftovers. Out-of-scope shapes give
// status Undecided with the system attached, never a wrong answer. Solved
// reports carry a verification pass (every component sampled and re-checked
// with check_operator) and the falsification sweep over degree-1..d monomial
// perturbations.
SolutionReport classify(OpKind kind, HopfPtr H, const Tensor& alpha,
                        int degree_cap, const Rational& weight = 0);

}  // namespace psalg
