#pragma once

#include <vector>

#include "psalg/hopf.hpp"

namespace psalg {

// Element of H^{(x) arity}: sparse rational (or polynomial) combination of
// basis-monomial tuples.
template <class C>
struct TensorT {
  int arity = 2;
  std::map<std::vector<BasisKey>, C> terms;

  bool is_zero() const { return terms.empty(); }
};

using Tensor = TensorT<Rational>;

template <class C>
TensorT<C> tensor_zero(int arity) {
  return TensorT<C>{arity, {}};
}

template <class C>
void add_term(TensorT<C>& t, const std::vector<BasisKey>& key, const C& c) {
  add_term(t.terms, key, c);
}

template <class C>
TensorT<C> add(const TensorT<C>& a, const TensorT<C>& b) {
  if (a.arity != b.arity) throw std::invalid_argument("tensor arity mismatch");
  TensorT<C> out = a;
  for (const auto& [k, c] : b) add_term(out.terms, k, c);
  return out;
}

// range-for helpers so TensorT can be iterated like its term map
template <class C>
auto begin(const TensorT<C>& t) { return t.terms.begin(); }
template <class C>
auto end(const TensorT<C>& t) { return t.terms.end(); }

template <class C>
TensorT<C> operator+(const TensorT<C>& a, const TensorT<C>& b) {
  if (a.arity != b.arity) throw std::invalid_argument("tensor arity mismatch");
  TensorT<C> out = a;
  for (const auto& [k, c] : b.terms) add_term(out.terms, k, c);
  return out;
}

template <class C>
TensorT<C> operator-(const TensorT<C>& a, const TensorT<C>& b) {
  if (a.arity != b.arity) throw std::invalid_argument("tensor arity mismatch");
  TensorT<C> out = a;
  for (const auto& [k, c] : b.terms) add_term(out.terms, k, static_cast<C>(-c));
  return out;
}

template <class C>
TensorT<C> operator-(const TensorT<C>& a) {
  TensorT<C> out{a.arity, {}};
  for (const auto& [k, c] : a.terms) out.terms.emplace(k, -c);
  return out;
}

template <class C>
TensorT<C> scale(const TensorT<C>& a, std::type_identity_t<C> s) {
  TensorT<C> out{a.arity, {}};
  for (const auto& [k, c] : a.terms) add_term(out.terms, k, static_cast<C>(c * s));
  return out;
}

// Outer product: (f1 (x) ... ) (x) (g1 (x) ...), concatenating slots.
template <class C>
TensorT<C> tensor_of(const TensorT<C>& a, const TensorT<C>& b) {
  TensorT<C> out{a.arity + b.arity, {}};
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      std::vector<BasisKey> k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      add_term(out.terms, k, static_cast<C>(ca * cb));
    }
  return out;
}

template <class C>
TensorT<C> tensor_of(const HElemT<C>& a, const HElemT<C>& b) {
  TensorT<C> out{2, {}};
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b)
      add_term(out.terms, {ka, kb}, static_cast<C>(ca * cb));
  return out;
}

// Componentwise algebra product of H^{(x)n}: (a1(x)..(x)an)(b1(x)..(x)bn)
// = a1b1 (x) .. (x) anbn.
template <class C>
TensorT<C> mul(const HopfAlgebra& H, const TensorT<C>& a, const TensorT<C>& b) {
  if (a.arity != b.arity) throw std::invalid_argument("tensor arity mismatch");
  TensorT<C> out{a.arity, {}};
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      // expand slot products one slot at a time
      std::vector<std::pair<std::vector<BasisKey>, Rational>> partial{{{}, Rational(1)}};
      for (int s = 0; s < a.arity; ++s) {
        const HElem& prod = H.basis_mul(ka[s], kb[s]);
        std::vector<std::pair<std::vector<BasisKey>, Rational>> next;
        for (const auto& [pk, pc] : partial)
          for (const auto& [mk, mc] : prod) {
            auto key = pk;
            key.push_back(mk);
            next.emplace_back(std::move(key), pc * mc);
          }
        partial = std::move(next);
      }
      C c = ca * cb;
      for (auto& [k, q] : partial) add_term(out.terms, k, scale_coeff(c, q));
    }
  return out;
}

// Places a into the given slots of an arity-n tensor, unit elsewhere:
// e.g. embed({0,2}, r, 3) = r_{13}.
template <class C>
TensorT<C> embed_slots(const HopfAlgebra& H, const TensorT<C>& a,
                       const std::vector<int>& slots, int arity) {
  if (static_cast<int>(slots.size()) != a.arity)
    throw std::invalid_argument("embed_slots: slot count must match arity");
  TensorT<C> out{arity, {}};
  for (const auto& [k, c] : a.terms) {
    std::vector<BasisKey> key(arity, H.unit_key());
    for (size_t i = 0; i < slots.size(); ++i) key[slots[i]] = k[i];
    add_term(out.terms, key, c);
  }
  return out;
}

template <class C>
TensorT<C> embed_slots(const HopfAlgebra& H, const HElemT<C>& a, int slot,
                       int arity) {
  TensorT<C> out{arity, {}};
  for (const auto& [k, c] : a) {
    std::vector<BasisKey> key(arity, H.unit_key());
    key[slot] = k;
    add_term(out.terms, key, c);
  }
  return out;
}

// Applies the coproduct to one slot, raising the arity by one (the split
// lands in slots slot, slot+1).
template <class C>
TensorT<C> coproduct_slot(const HopfAlgebra& H, const TensorT<C>& a, int slot) {
  TensorT<C> out{a.arity + 1, {}};
  for (const auto& [k, c] : a.terms)
    for (const auto& [l, r] : H.basis_coproduct(k[slot])) {
      std::vector<BasisKey> key;
      key.reserve(a.arity + 1);
      key.insert(key.end(), k.begin(), k.begin() + slot);
      key.push_back(l);
      key.push_back(r);
      key.insert(key.end(), k.begin() + slot + 1, k.end());
      add_term(out.terms, key, c);
    }
  return out;
}

template <class C>
TensorT<C> coproduct(const HopfAlgebra& H, const HElemT<C>& a) {
  TensorT<C> out{2, {}};
  for (const auto& [k, c] : a)
    for (const auto& [l, r] : H.basis_coproduct(k)) add_term(out.terms, {l, r}, c);
  return out;
}

// new_key[i] = old_key[perm[i]]  (perm maps target slot -> source slot)
template <class C>
TensorT<C> permute_slots(const TensorT<C>& a, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != a.arity)
    throw std::invalid_argument("permutation size must match arity");
  TensorT<C> out{a.arity, {}};
  for (const auto& [k, c] : a.terms) {
    std::vector<BasisKey> key(a.arity);
    for (int i = 0; i < a.arity; ++i) key[i] = k[perm[i]];
    add_term(out.terms, key, c);
  }
  return out;
}

// sigma(f (x) g) = g (x) f
template <class C>
TensorT<C> sigma(const TensorT<C>& a) {
  return permute_slots(a, {1, 0});
}

// Fourier (Galois) transform F(f (x) g) = f S(g_(1)) (x) g_(2) and its
// inverse F^{-1}(f (x) g) = f g_(1) (x) g_(2); F^{-1}F = id drives the
// canonical forms of the quotients.
Tensor fourier(const HopfAlgebra& H, const Tensor& t);
Tensor fourier_inv(const HopfAlgebra& H, const Tensor& t);

std::string to_string(const HopfAlgebra& H, const Tensor& t);

}  // namespace psalg
