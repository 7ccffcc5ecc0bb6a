#pragma once

#include <random>

#include "psalg/conformal.hpp"
#include "psalg/operators.hpp"

namespace psalg::testing {

// --- shared corpus -----------------------------------------------------

inline HopfPtr kd() {  // H = k[d1]
  return HopfAlgebra::enveloping({1, {}});
}

inline HopfPtr udelta2() {  // U(delta_2), [d1,d2] = d2
  return HopfAlgebra::enveloping({2, {{{0, 1}, {{1, Rational(1)}}}}});
}

inline HopfPtr kz2() { return HopfAlgebra::group(GroupSpec::cyclic(2)); }
inline HopfPtr kz3() { return HopfAlgebra::group(GroupSpec::cyclic(3)); }

inline HopfPtr smash_kd_z2() {  // k[d1] # k[Z/2], g.d1 = -d1
  LieAlgebraSpec lie{1, {}};
  GroupSpec grp = GroupSpec::cyclic(2);
  HopfPtr env = HopfAlgebra::enveloping(lie);
  std::vector<std::vector<HElem>> action(2, std::vector<HElem>(1));
  action[0][0] = generator_elem(*env, 0);
  action[1][0] = scale(generator_elem(*env, 0), -1);
  return HopfAlgebra::smash(lie, grp, action);
}

// W(1): [e*e] = (d (x) 1 - 1 (x) d) (x)_H e over k[d]
inline Pseudoalgebra w1() {
  HopfPtr H = kd();
  HElem d = generator_elem(*H, 0);
  return rank1_lie_algebra(H, tensor_of(d, unit_elem(*H)) -
                                  tensor_of(unit_elem(*H), d));
}

// rank-1 Lie pseudoalgebra over U(delta_2) with r = 0, s = d1
inline Pseudoalgebra w_udelta2() {
  HopfPtr H = udelta2();
  HElem d1 = generator_elem(*H, 0);
  return rank1_lie_algebra(H, tensor_of(d1, unit_elem(*H)) -
                                  tensor_of(unit_elem(*H), d1));
}

// Example 2.2 shape: rank 2, only e2 * e2 = alpha (x)_H e2
inline Pseudoalgebra example22(HopfPtr H, Tensor alpha,
                               Flavor flavor = Flavor::Unchecked) {
  Pseudoalgebra A{std::move(H), ProductTable{2, {}}, flavor};
  A.table.set(1, 1, 1, std::move(alpha));
  return A;
}

inline Pseudoalgebra example22_unit(HopfPtr H) {
  Tensor t = tensor_of(unit_elem(*H), unit_elem(*H));
  return example22(std::move(H), std::move(t), Flavor::Associative);
}

// current pseudoalgebra of k[t]/t^2 (e1 = 1, e2 = t)
inline Pseudoalgebra cur_dual_numbers(HopfPtr H) {
  std::map<std::tuple<int, int, int>, Rational> base{
      {{0, 0, 0}, 1}, {{0, 1, 1}, 1}, {{1, 0, 1}, 1}};
  return current(std::move(H), 2, base, Flavor::Associative);
}

// current pseudoalgebra of the noncommutative "path" algebra
// a^2 = a, ab = b, ba = 0, b^2 = 0 (e1 = a, e2 = b)
inline Pseudoalgebra cur_path(HopfPtr H) {
  std::map<std::tuple<int, int, int>, Rational> base{
      {{0, 0, 0}, 1}, {{0, 1, 1}, 1}};
  return current(std::move(H), 2, base, Flavor::Associative);
}

// current of the 2-dim Lie algebra [a, b] = b
inline Pseudoalgebra cur_affine_lie(HopfPtr H) {
  std::map<std::tuple<int, int, int>, Rational> base{
      {{0, 1, 1}, 1}, {{1, 0, 1}, -1}};
  return current(std::move(H), 2, base, Flavor::Lie);
}

// --- randomness --------------------------------------------------------

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}

  Rational coeff() {
    // small exact rationals, zero included
    static const Rational pool[] = {0, 1, -1, 2, -2, Rational(1, 2),
                                    Rational(-1, 3), 3, Rational(2, 5)};
    return pool[gen() % (sizeof(pool) / sizeof(pool[0]))];
  }
  Rational nonzero_coeff() {
    Rational c;
    do { c = coeff(); } while (is_zero(c));
    return c;
  }
  BasisKey key(const HopfAlgebra& H, int maxdeg) {
    BasisKey k;
    k.exp.assign(H.lie_dim(), 0);
    int budget = static_cast<int>(gen() % (maxdeg + 1));
    for (int t = 0; t < budget && H.lie_dim() > 0; ++t)
      k.exp[gen() % H.lie_dim()] += 1;
    k.grp = H.has_group_part() ? static_cast<int>(gen() % H.group_order())
                               : 0;
    return k;
  }
  HElem helem(const HopfAlgebra& H, int maxdeg, int nterms = 3) {
    HElem out;
    for (int t = 0; t < nterms; ++t) add_term(out, key(H, maxdeg), coeff());
    return out;
  }
  Tensor tensor2(const HopfAlgebra& H, int maxdeg, int nterms = 3) {
    Tensor out{2, {}};
    for (int t = 0; t < nterms; ++t)
      add_term(out.terms, {key(H, maxdeg), key(H, maxdeg)}, coeff());
    return out;
  }
  ModuleElem module_elem(const HopfAlgebra& H, int rank, int maxdeg) {
    ModuleElem a(rank);
    for (auto& c : a) c = helem(H, maxdeg, 2);
    return a;
  }
};

// --- independent straightening oracle -----------------------------------
// Multiplies plain (non-divided) generator words by recursive rewriting;
// kept deliberately separate from HopfAlgebra::straighten.

using Word = std::vector<int>;
using WordSum = std::map<Word, Rational>;

inline WordSum oracle_rewrite(const LieAlgebraSpec& lie, const Word& w) {
  for (size_t t = 0; t + 1 < w.size(); ++t) {
    if (w[t] <= w[t + 1]) continue;
    WordSum out;
    Word swapped = w;
    std::swap(swapped[t], swapped[t + 1]);
    for (const auto& [k, c] : oracle_rewrite(lie, swapped)) add_term(out, k, c);
    for (const auto& [g, c] : lie.bracket_of(w[t + 1], w[t])) {
      Word shorter(w.begin(), w.begin() + t);
      shorter.push_back(g);
      shorter.insert(shorter.end(), w.begin() + t + 2, w.end());
      for (const auto& [k, d] : oracle_rewrite(lie, shorter))
        add_term(out, k, -c * d);
    }
    return out;
  }
  return {{w, 1}};
}

inline Word word_of_key(const BasisKey& k) {
  Word w;
  for (int i = 0; i < static_cast<int>(k.exp.size()); ++i)
    for (int r = 0; r < k.exp[i]; ++r) w.push_back(i);
  return w;
}

// oracle for mul on a pure enveloping algebra, divided powers handled by
// explicit factorial bookkeeping
inline HElem oracle_env_mul(const HopfAlgebra& H, const HElem& a, const HElem& b) {
  HElem out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      Word w = word_of_key(ka);
      Word wb = word_of_key(kb);
      w.insert(w.end(), wb.begin(), wb.end());
      Rational pre = ca * cb;
      for (int e : ka.exp) pre /= factorial(e);
      for (int e : kb.exp) pre /= factorial(e);
      for (const auto& [word, c] : oracle_rewrite(H.lie(), w)) {
        BasisKey k;
        k.exp.assign(H.lie_dim(), 0);
        for (int letter : word) k.exp[letter] += 1;
        Rational post = c;
        for (int e : k.exp) post *= factorial(e);
        add_term(out, k, pre * post);
      }
    }
  return out;
}

// --- direct H^(x)3 composition oracle ------------------------------------
// Expands (a*b)*c straight from the extension formula with the *raw*
// table-derived representative of a*b (no canonicalization), exercising a
// different representative than compose_left's canonical route.

inline PseudoElem oracle_compose_left(const Pseudoalgebra& A, const ModuleElem& a,
                                      const ModuleElem& b, const ModuleElem& c) {
  const HopfAlgebra& H = A.H();
  int r = A.rank();
  PseudoRep rep{3, r, {}};
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        const Tensor* alpha = A.table.find(i, j, k);
        if (!alpha) continue;
        // beta = (a_i (x) b_j) alpha, raw; then (beta (x)_H e_k) * c
        Tensor beta = mul(H, tensor_of(HElemT<Rational>(a[i]), b[j]), *alpha);
        for (int m = 0; m < r; ++m)
          for (int n = 0; n < r; ++n) {
            const Tensor* gamma = A.table.find(k, m, n);
            if (!gamma) continue;
            // (beta (x) 1)(Delta (x) id)((1 (x) c_m) gamma) (x)_H e_n
            Tensor inner = mul(H, tensor_of(unit_elem(H), c[m]), *gamma);
            Tensor lifted = coproduct_slot(H, inner, 0);
            Tensor full = mul(H, embed_slots(H, beta, {0, 1}, 3), lifted);
            for (const auto& [tk, tc] : full.terms)
              add_term(rep.terms,
                       PseudoKey{{tk[0], tk[1], tk[2]}, H.unit_key(), n}, tc);
          }
      }
  return normalize(H, rep);
}

inline PseudoElem oracle_compose_right(const Pseudoalgebra& A, const ModuleElem& a,
                                       const ModuleElem& b, const ModuleElem& c) {
  const HopfAlgebra& H = A.H();
  int r = A.rank();
  PseudoRep rep{3, r, {}};
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k)
      for (int m = 0; m < r; ++m) {
        const Tensor* alpha = A.table.find(j, k, m);
        if (!alpha) continue;
        Tensor beta = mul(H, tensor_of(HElemT<Rational>(b[j]), c[k]), *alpha);
        for (int i = 0; i < r; ++i)
          for (int n = 0; n < r; ++n) {
            const Tensor* gamma = A.table.find(i, m, n);
            if (!gamma) continue;
            Tensor inner = mul(H, tensor_of(a[i], unit_elem(H)), *gamma);
            Tensor lifted = coproduct_slot(H, inner, 1);
            Tensor full = mul(H, embed_slots(H, beta, {1, 2}, 3), lifted);
            for (const auto& [tk, tc] : full.terms)
              add_term(rep.terms,
                       PseudoKey{{tk[0], tk[1], tk[2]}, H.unit_key(), n}, tc);
          }
      }
  return normalize(H, rep);
}

}  // namespace psalg::testing
