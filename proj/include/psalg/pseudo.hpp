#pragma once

#include <string>

#include "psalg/tensor.hpp"

namespace psalg {

// Term key of an element of H^{(x)n} (x)_H M with M free of finite rank:
// `slots` holds the H tensor slots that are kept explicit, `mcoef` the
// H-monomial on the module basis vector e_{eidx}.
struct PseudoKey {
  std::vector<BasisKey> slots;
  BasisKey mcoef;
  int eidx = 0;

  auto operator<=>(const PseudoKey&) const = default;
};

// Canonical form of an element of H^{(x)n} (x)_H M: the n-th H slot is fixed
// to 1 (so `slots` has n-1 entries) and the module coefficient is expanded
// over the k-basis {h e_k}. By Lemma-1.2-style uniqueness, elements of the
// quotient are equal iff their canonical terms agree.
struct PseudoElem {
  int arity = 2;
  int rank = 1;
  std::map<PseudoKey, Rational> terms;

  bool is_zero() const { return terms.empty(); }
};

// A concrete representative: all n H slots explicit (`slots` has n entries)
// plus the module coefficient. Input form for normalize().
struct PseudoRep {
  int arity = 2;
  int rank = 1;
  std::map<PseudoKey, Rational> terms;
};

void add_term(PseudoElem& p, const PseudoKey& k, const Rational& c);
void add_term(PseudoRep& p, const PseudoKey& k, const Rational& c);

PseudoElem add(const PseudoElem& a, const PseudoElem& b);
PseudoElem sub(const PseudoElem& a, const PseudoElem& b);
PseudoElem scale(const PseudoElem& a, const Rational& c);

// Absorbs the last H slot through the quotient relation:
//   f (x) g (x)_H m        |-> sum f S(g_(1)) (x) 1 (x)_H g_(2) m
//   f (x) g (x) c (x)_H m  |-> sum f S(c_(1)) (x) g S(c_(2)) (x) 1 (x)_H c_(3) m
// Module coefficients are re-expanded over the free basis as part of the
// same pass. Arity 2 and 3 supported.
PseudoElem normalize(const HopfAlgebra& H, const PseudoRep& rep);

// Reads a canonical element back as a representative with last slot 1.
PseudoRep as_rep(const HopfAlgebra& H, const PseudoElem& p);

// Slot-wise left multiplication by an element of H^{(x)n}, then renormalize.
PseudoElem act(const HopfAlgebra& H, const Tensor& left, const PseudoElem& p);

// Applies the slot permutation (new slot i takes old slot perm[i]) to the n
// H slots of a representative of p, then renormalizes.
PseudoElem permute(const HopfAlgebra& H, const PseudoElem& p,
                   const std::vector<int>& perm);

bool equal(const PseudoElem& a, const PseudoElem& b);

std::string to_string(const HopfAlgebra& H, const PseudoElem& p);

}  // namespace psalg
