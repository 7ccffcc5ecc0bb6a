#pragma once

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "psalg/rational.hpp"

namespace psalg {

// Basis monomial of H. The enveloping part is a divided-power PBW monomial
// d^I = d_1^{i_1}...d_N^{i_N} / (i_1!...i_N!) stored by its exponent vector;
// the group part is an index into the group's element list. Enveloping
// algebras keep grp = 0, group algebras keep exp empty, smash algebras use
// both halves.
struct BasisKey {
  std::vector<int> exp;
  int grp = 0;

  auto operator<=>(const BasisKey&) const = default;
};

template <class C>
using HElemT = std::map<BasisKey, C>;
using HElem = HElemT<Rational>;

// Key and coefficient are non-deduced so that braced keys and gmp expression
// templates convert at the call site.
template <class K, class C>
void add_term(std::map<K, C>& m, std::type_identity_t<K> key,
              std::type_identity_t<C> c) {
  if (is_zero(c)) return;
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(std::move(key), std::move(c));
  } else {
    it->second += c;
    if (is_zero(it->second)) m.erase(it);
  }
}

struct LieAlgebraSpec {
  int dim = 0;
  // brackets[{i,j}] with 0 <= i < j < dim holds [d_i, d_j] as a sparse
  // generator combination; missing pairs commute.
  std::map<std::pair<int, int>, std::map<int, Rational>> brackets;

  // [d_i, d_j] for arbitrary i, j (antisymmetry filled in).
  std::map<int, Rational> bracket_of(int i, int j) const;
};

struct GroupSpec {
  int order = 0;
  std::vector<std::vector<int>> mult;  // mult[i][j] = index of g_i g_j
  int identity = -1;                   // filled in by validation
  std::vector<int> inverse;            // filled in by validation

  static GroupSpec cyclic(int n);
};

class HopfAlgebra;
using HopfPtr = std::shared_ptr<const HopfAlgebra>;

// One of the three supported cocommutative families: U(delta), k[G], or the
// smash product U(delta) # k[G]. Immutable after construction; structure-map
// caches are guarded, so const use from several threads is safe.
class HopfAlgebra {
 public:
  enum class Kind { Enveloping, Group, Smash };

  static HopfPtr enveloping(LieAlgebraSpec lie);
  static HopfPtr group(GroupSpec grp);
  // action[g][i] = image of generator d_i under g, a k-combination of
  // generators. Must be bracket-preserving with g -> sigma_g a group
  // homomorphism; validated here.
  static HopfPtr smash(LieAlgebraSpec lie, GroupSpec grp,
                       std::vector<std::vector<HElem>> action);

  Kind kind() const { return kind_; }
  bool has_lie_part() const { return lie_.dim > 0; }
  bool has_group_part() const { return grp_.order > 0; }
  int lie_dim() const { return lie_.dim; }
  int group_order() const { return grp_.order; }
  const LieAlgebraSpec& lie() const { return lie_; }
  const GroupSpec& grp() const { return grp_; }

  BasisKey unit_key() const;
  bool valid_key(const BasisKey& k) const;
  void require_key(const BasisKey& k) const;
  int degree(const BasisKey& k) const;  // group part contributes 0

  const HElem& basis_mul(const BasisKey& a, const BasisKey& b) const;
  // Divided-power coproducts have coefficient 1 on every split, so pairs
  // suffice.
  std::vector<std::pair<BasisKey, BasisKey>> basis_coproduct(
      const BasisKey& a) const;
  const HElem& basis_antipode(const BasisKey& a) const;
  Rational basis_counit(const BasisKey& a) const;

  std::vector<BasisKey> basis_up_to(int degree_cap) const;

  // t with ht = eps(h)t. Present exactly for group algebras (t = sum of all
  // group elements); U(delta) with dim >= 1 and smash products have none
  // (the top filtration degree of d_1 t exceeds that of eps(d_1) t = 0).
  std::optional<HElem> left_integral() const;

 private:
  HopfAlgebra() = default;

  HElem enveloping_mul(const BasisKey& a, const BasisKey& b) const;
  HElem smash_mul(const BasisKey& a, const BasisKey& b) const;
  // sigma_g applied to the pure enveloping monomial with exponents I.
  HElem group_action(int g, const std::vector<int>& exps) const;
  HElem collect_word(const std::vector<int>& word, const Rational& coef) const;
  HElem straighten(std::map<std::vector<int>, Rational> words) const;

  Kind kind_ = Kind::Enveloping;
  LieAlgebraSpec lie_;
  GroupSpec grp_;
  std::vector<std::vector<HElem>> action_;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<BasisKey, BasisKey>, HElem> mul_cache_;
  mutable std::map<BasisKey, HElem> antipode_cache_;
};

// ---------------------------------------------------------------------------
// Element-level operations, generic over the coefficient ring C (exact
// rationals for ordinary computation, polynomials in unknowns for the rank-1
// classifier). C needs +=, *, is_zero, and scale-by-Rational.

inline Rational scale_coeff(const Rational& c, const Rational& q) { return c * q; }

template <class C>
HElemT<C> mul(const HopfAlgebra& H, const HElemT<C>& a, const HElemT<C>& b) {
  HElemT<C> out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      const HElem& prod = H.basis_mul(ka, kb);
      C c = ca * cb;
      for (const auto& [k, q] : prod) add_term(out, k, scale_coeff(c, q));
    }
  return out;
}

template <class C>
HElemT<C> antipode(const HopfAlgebra& H, const HElemT<C>& a) {
  HElemT<C> out;
  for (const auto& [k, c] : a)
    for (const auto& [k2, q] : H.basis_antipode(k))
      add_term(out, k2, scale_coeff(c, q));
  return out;
}

template <class C>
C counit(const HopfAlgebra& H, const HElemT<C>& a) {
  C out{};
  for (const auto& [k, c] : a) {
    Rational e = H.basis_counit(k);
    if (!is_zero(e)) out += scale_coeff(c, e);
  }
  return out;
}

template <class C>
HElemT<C> add(const HElemT<C>& a, const HElemT<C>& b) {
  HElemT<C> out = a;
  for (const auto& [k, c] : b) add_term(out, k, c);
  return out;
}

template <class C>
HElemT<C> scale(const HElemT<C>& a, std::type_identity_t<C> c) {
  HElemT<C> out;
  for (const auto& [k, q] : a) add_term(out, k, static_cast<C>(q * c));
  return out;
}

template <class C>
HElemT<C> sub(const HElemT<C>& a, const HElemT<C>& b) {
  HElemT<C> out = a;
  for (const auto& [k, c] : b) add_term(out, k, static_cast<C>(-c));
  return out;
}

// Filtration degree: max |I| over supported monomials; -1 for the zero
// element (F^n H = 0 for n < 0).
template <class C>
int filtration_degree(const HopfAlgebra& H, const HElemT<C>& a) {
  int d = -1;
  for (const auto& [k, c] : a) d = std::max(d, H.degree(k));
  return d;
}

inline HElem unit_elem(const HopfAlgebra& H, const Rational& c = 1) {
  HElem out;
  if (!is_zero(c)) out.emplace(H.unit_key(), c);
  return out;
}

inline HElem monomial(const BasisKey& k, const Rational& c = 1) {
  HElem out;
  if (!is_zero(c)) out.emplace(k, c);
  return out;
}

// Generator d_i as an element (enveloping or smash kinds).
HElem generator_elem(const HopfAlgebra& H, int i);

std::string to_string(const HopfAlgebra& H, const BasisKey& k);
std::string to_string(const HopfAlgebra& H, const HElem& a);

}  // namespace psalg
