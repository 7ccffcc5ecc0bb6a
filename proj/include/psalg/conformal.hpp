#pragma once

#include "psalg/annihilation.hpp"

namespace psalg {

// Induced Lie H-conformal algebra of a Lie pseudoalgebra: x-brackets
// [a_x b] = sum <S*(x), f_i S(g_i(1))> g_i(2) c_i computed from the
// pseudobracket through eta_x.
struct ConformalAlgebra {
  Pseudoalgebra L;
  DualPtr X;

  const HopfAlgebra& H() const { return L.H(); }
  int rank() const { return L.rank(); }
  // largest slot degree in the bracket table; brackets vanish against
  // functionals supported beyond it
  int table_degree() const { return table_degree(L.H(), L.table); }

 private:
  static int table_degree(const HopfAlgebra& H, const ProductTable& t) {
    return ::psalg::table_degree(H, t);
  }
};

// eta_x(f (x) g) = <S*(x), f S(g_(1))> g_(2)
HElem eta(const DualSpace& X, const DualElem& x, const Tensor& t);

// [a_x b], independent of the chosen representative of [a*b] (Lemma 6.3(1);
// property-tested against raw representatives).
ModuleElem x_bracket(const ConformalAlgebra& C, const ModuleElem& a,
                     const ModuleElem& b, const DualElem& x);

// Locality witness, H-sesqui-linearity (6.2-6.3), skew-commutativity (6.4)
// with the dual-bases sum truncated at the table degree (terms beyond pair
// to zero against the bracket support; asserted by recomputing one degree
// higher), and the Jacobi identity (6.5) with the lazy coproduct on X.
// Dual-basis functionals x, y run up to degree N; the H coefficient h in
// 6.2/6.3 runs up to degree hdeg.
Report check_conformal_axioms(const ConformalAlgebra& C, int N, int hdeg = 2);

// Def. 6.2 identities on basis pairs and dual basis x up to degree N:
//   conformal averaging   R[R(a)_x b] = R[a_x R(b)] = [R(a)_x R(b)]
//   conformal nijenhuis   [R(a)_x R(b)] = R[[R(a)_x b] + [a_x R(b)] - R[a_x b]]
//   conformal reynolds    [R(a)_x R(b)] = R[[R(a)_x b] + [a_x R(b)] + w [R(a)_x R(b)]]
Report check_conformal_operator(OpKind kind, const HLinearOp& R,
                                const ConformalAlgebra& C, int N,
                                const Rational& weight = 0);

}  // namespace psalg
