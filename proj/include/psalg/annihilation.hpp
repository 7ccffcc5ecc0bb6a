#pragma once

#include "psalg/dual.hpp"
#include "psalg/operators.hpp"

namespace psalg {

// Element of A_X L = X (x)_H L in the canonical form sum x (x)_H e_k: module
// H-coefficients are pushed into the dual slot through the right action,
// x (x)_H (u e_k) = (x.u) (x)_H e_k.
struct AnnihilationElem {
  int rank = 1;
  std::map<std::pair<BasisKey, int>, Rational> terms;
  int validity = kExactValidity;

  bool is_zero() const { return terms.empty(); }
};

AnnihilationElem ann_zero(const DualSpace& X, int rank);
AnnihilationElem ann_basis(const DualSpace& X, int rank, const BasisKey& dual_key,
                           int eidx);
AnnihilationElem ann_add(const AnnihilationElem& a, const AnnihilationElem& b);
AnnihilationElem ann_sub(const AnnihilationElem& a, const AnnihilationElem& b);
AnnihilationElem ann_scale(const AnnihilationElem& a, const Rational& c);
AnnihilationElem ann_of(const DualSpace& X, const DualElem& x,
                        const ModuleElem& a);
bool ann_equal_within(const DualSpace& X, const AnnihilationElem& a,
                      const AnnihilationElem& b, int degree);

// (x (x)_H a)(y (x)_H b) = sum_i (x.f_i)(y.g_i) (x)_H e_i over any
// representative a*b = sum f_i (x) g_i (x)_H e_i; table entries are used
// directly (well-definedness under representative changes is
// property-tested).
AnnihilationElem annihilation_product(const DualSpace& X,
                                      const ProductTable& table,
                                      const AnnihilationElem& u,
                                      const AnnihilationElem& v);

// xi (x)_H P acting on A_X L.
AnnihilationElem lift_apply(const DualSpace& X, const DualMap& xi,
                            const HLinearOp& P, const AnnihilationElem& u);

// Left/right H-linearity of xi on dual basis elements, checked against H
// basis elements up to hdeg.
Report check_dual_map_linear(const DualSpace& X, const DualMap& xi, int hdeg);

// Theorem 5.1 hypotheses on dual basis pairs:
//   averaging  xi(xi(x)y) = xi(x)xi(y) = xi(x xi(y))
//   nijenhuis  ... and = xi^2(xy)
//   reynolds   ... and = xi(xi(x)xi(y))
Report check_xi_hypothesis(OpKind kind, const DualSpace& X, const DualMap& xi,
                           int compare_deg);

// The plain k-algebra identity of the kind for xi (x)_H P on basis pairs of
// A_X L (dual basis x module basis).
Report check_lift(OpKind kind, const DualSpace& X, const ProductTable& table,
                  const DualMap& xi, const HLinearOp& P,
                  const Rational& weight = 0, int compare_deg = -1);

std::string to_string(const DualSpace& X, const AnnihilationElem& u);

}  // namespace psalg
