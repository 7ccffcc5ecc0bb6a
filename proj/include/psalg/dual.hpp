#pragma once

#include "psalg/tensor.hpp"

namespace psalg {

class DualSpace;
using DualPtr = std::shared_ptr<const DualSpace>;

// X = H*, spanned by the functionals dual to the monomial basis. Exact for
// group algebras (finite-dimensional); truncated at degree N for enveloping
// and smash kinds, with per-element validity tracking: an element computed
// through the pairing is trustworthy only on F^validity H. U(delta) carries
// no nonzero left integral, so the integral-driven constructions of
// Corollary 5.2 live on the group side; the truncated side still supports
// every pairing computation up to its validity degree.
class DualSpace {
 public:
  static DualPtr make(HopfPtr H, int truncation);

  const HopfAlgebra& H() const { return *hopf_; }
  HopfPtr hopf() const { return hopf_; }
  bool exact() const { return hopf_->kind() == HopfAlgebra::Kind::Group; }
  int truncation() const { return truncation_; }
  const std::vector<BasisKey>& basis() const { return basis_; }

 private:
  HopfPtr hopf_;
  int truncation_ = 0;
  std::vector<BasisKey> basis_;
};

constexpr int kExactValidity = 1 << 20;

// Functional on H in dual-basis coordinates. Coefficients on x_K are
// meaningful for deg K <= validity.
struct DualElem {
  std::map<BasisKey, Rational> terms;
  int validity = kExactValidity;

  bool is_zero() const { return terms.empty(); }
};

DualElem dual_basis_elem(const DualSpace& X, const BasisKey& k);
DualElem dual_zero(const DualSpace& X);
DualElem dual_add(const DualElem& a, const DualElem& b);
DualElem dual_sub(const DualElem& a, const DualElem& b);
DualElem dual_scale(const DualElem& a, const Rational& c);
bool dual_equal_within(const DualSpace& X, const DualElem& a, const DualElem& b,
                       int degree);

// <x, h>; throws when h has support beyond the validity degree of x.
Rational pairing(const DualSpace& X, const DualElem& x, const HElem& h);

// <xy, h> = <x, h_(1)> <y, h_(2)>
DualElem dual_product(const DualSpace& X, const DualElem& x, const DualElem& y);
// <h.x, f> = <x, f h>
DualElem dual_left_act(const DualSpace& X, const HElem& h, const DualElem& x);
// <x.h, f> = <x, h f>
DualElem dual_right_act(const DualSpace& X, const DualElem& x, const HElem& h);
// <S*(x), h> = <x, S(h)>
DualElem dual_antipode(const DualSpace& X, const DualElem& x);

// Lazy coproduct: the pairs (g, h) with deg g, deg h <= degree_cap and the
// coefficients <x, g h>, which is all of Delta(x) that a computation against
// F^degree_cap can see. (The full coproduct of an infinite dual does not
// terminate, e.g. a degree-1 functional on U(delta_2) pairs nontrivially
// with d2 d1^n for every n.)
std::map<std::pair<BasisKey, BasisKey>, Rational> dual_coproduct(
    const DualSpace& X, const DualElem& x, int degree_cap);

std::string to_string(const DualSpace& X, const DualElem& x);

// Left/right H-linear map on X. LeftMult covers xi(x) = t.x for an integral
// t (Corollary 5.2); Matrix holds explicit images of the dual basis.
struct DualMap {
  enum class Kind { Zero, Identity, LeftMult, Matrix } kind = Kind::Identity;
  HElem mult;                            // LeftMult
  std::map<BasisKey, DualElem> images;   // Matrix

  static DualMap zero() { return DualMap{Kind::Zero, {}, {}}; }
  static DualMap identity() { return DualMap{Kind::Identity, {}, {}}; }
  static DualMap left_mult(HElem t) { return DualMap{Kind::LeftMult, std::move(t), {}}; }
};

DualElem apply(const DualSpace& X, const DualMap& xi, const DualElem& x);

}  // namespace psalg
