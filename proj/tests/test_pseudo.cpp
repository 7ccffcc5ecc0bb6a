#include <doctest.h>

#include "support.hpp"

using namespace psalg;
using namespace psalg::testing;

namespace {

PseudoElem elem_of(const HopfAlgebra& H, int rank, const Tensor& t, int eidx) {
  PseudoRep rep{t.arity, rank, {}};
  for (const auto& [k, c] : t.terms)
    add_term(rep.terms, PseudoKey{k, H.unit_key(), eidx}, c);
  return normalize(H, rep);
}

}  // namespace

TEST_CASE("normalize matches the hand-expanded absorption") {
  HopfPtr H = kd();
  HElem d = generator_elem(*H, 0), one = unit_elem(*H);
  BasisKey du{{1}, 0}, u{{0}, 0};
  // (1 (x) d) (x)_H e = -(d (x) 1) (x)_H e + (1 (x) 1) (x)_H d e
  PseudoElem p = elem_of(*H, 1, tensor_of(one, d), 0);
  PseudoElem expect{2, 1, {}};
  add_term(expect, PseudoKey{{du}, u, 0}, -1);
  add_term(expect, PseudoKey{{u}, du, 0}, 1);
  CHECK(equal(p, expect));
  // already canonical input is untouched
  PseudoElem q = elem_of(*H, 1, tensor_of(d, one), 0);
  PseudoElem q_expect{2, 1, {}};
  add_term(q_expect, PseudoKey{{du}, u, 0}, 1);
  CHECK(equal(q, q_expect));
}

TEST_CASE("arity-3 normalization") {
  HopfPtr H = kd();
  HElem d = generator_elem(*H, 0), one = unit_elem(*H);
  BasisKey du{{1}, 0}, u{{0}, 0};
  // (1 (x) 1 (x) d) (x)_H e
  //   = -(d (x) 1 (x) 1) e - (1 (x) d (x) 1) e + (1 (x) 1 (x) 1) d e
  Tensor t = tensor_of(tensor_of(one, one), Tensor{tensor_of(d, one)});
  Tensor in{3, {}};
  add_term(in.terms, {u, u, du}, Rational(1));
  PseudoElem p = elem_of(*H, 1, in, 0);
  PseudoElem expect{3, 1, {}};
  add_term(expect, PseudoKey{{du, u}, u, 0}, -1);
  add_term(expect, PseudoKey{{u, du}, u, 0}, -1);
  add_term(expect, PseudoKey{{u, u}, du, 0}, 1);
  CHECK(equal(p, expect));
}

TEST_CASE("normalize is idempotent") {
  for (HopfPtr H : {kd(), udelta2(), HopfPtr(kz3()), smash_kd_z2()}) {
    Rng rng(17);
    for (int t = 0; t < 25; ++t) {
      Tensor a = rng.tensor2(*H, 3);
      PseudoElem p = elem_of(*H, 2, a, static_cast<int>(t % 2));
      PseudoElem again = normalize(*H, as_rep(*H, p));
      CHECK(equal(p, again));
    }
  }
}

TEST_CASE("the defining relation of (x)_H") {
  // normalize(beta Delta(h) (x)_H m) = normalize(beta (x)_H h m)
  for (HopfPtr H : {kd(), udelta2(), HopfPtr(kz2())}) {
    Rng rng(29);
    for (int t = 0; t < 25; ++t) {
      Tensor beta = rng.tensor2(*H, 2);
      BasisKey h = rng.key(*H, 2);
      BasisKey m = rng.key(*H, 2);
      Tensor moved = mul(*H, beta, coproduct(*H, HElem(monomial(h))));
      PseudoRep lhs{2, 1, {}};
      for (const auto& [k, c] : moved.terms)
        add_term(lhs.terms, PseudoKey{k, m, 0}, c);
      PseudoRep rhs{2, 1, {}};
      const HElem hm = mul(*H, HElem(monomial(h)), HElem(monomial(m)));
      for (const auto& [k, c] : beta.terms)
        for (const auto& [mk, mc] : hm)
          add_term(rhs.terms, PseudoKey{k, mk, 0}, c * mc);
      CHECK(equal(normalize(*H, lhs), normalize(*H, rhs)));
    }
  }
}

TEST_CASE("act and permute") {
  HopfPtr H = kd();
  HElem d = generator_elem(*H, 0), one = unit_elem(*H);
  BasisKey du{{1}, 0}, u{{0}, 0};
  // act(d (x) 1, (1 (x) 1) e) = (d (x) 1) e
  PseudoElem base = elem_of(*H, 1, tensor_of(one, one), 0);
  PseudoElem acted = act(*H, tensor_of(d, one), base);
  PseudoElem expect{2, 1, {}};
  add_term(expect, PseudoKey{{du}, u, 0}, 1);
  CHECK(equal(acted, expect));
  // permute(sigma, (h (x) 1) e) = normalize((1 (x) h) e)
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    HElem h = rng.helem(*H, 3);
    PseudoElem p = elem_of(*H, 1, tensor_of(h, one), 0);
    PseudoElem lhs = permute(*H, p, {1, 0});
    PseudoElem rhs = elem_of(*H, 1, tensor_of(one, h), 0);
    CHECK(equal(lhs, rhs));
  }
  // group algebra: (g (x) g) ((1 (x) 1) e) = (1 (x) 1) (x)_H g e
  HopfPtr G = kz2();
  HElem g = monomial(BasisKey{{}, 1});
  PseudoElem gb = elem_of(*G, 1, tensor_of(unit_elem(*G), unit_elem(*G)), 0);
  PseudoElem moved = act(*G, tensor_of(g, g), gb);
  PseudoElem gexpect{2, 1, {}};
  add_term(gexpect, PseudoKey{{G->unit_key()}, BasisKey{{}, 1}, 0}, 1);
  CHECK(equal(moved, gexpect));
}

TEST_CASE("permutations compose as the symmetric group") {
  HopfPtr H = udelta2();
  Rng rng(37);
  for (int t = 0; t < 10; ++t) {
    Tensor a{3, {}};
    for (int i = 0; i < 3; ++i)
      add_term(a.terms, {rng.key(*H, 2), rng.key(*H, 2), rng.key(*H, 2)},
               rng.coeff());
    PseudoElem p = elem_of(*H, 1, a, 0);
    // (12) twice is the identity
    CHECK(equal(permute(*H, permute(*H, p, {1, 0, 2}), {1, 0, 2}), p));
    // (123) three times is the identity
    PseudoElem c3 = permute(*H, permute(*H, permute(*H, p, {1, 2, 0}), {1, 2, 0}),
                            {1, 2, 0});
    CHECK(equal(c3, p));
    // (12)(23) = (123) as maps: applying {1,0,2} then {0,2,1}
    PseudoElem lhs = permute(*H, permute(*H, p, {1, 0, 2}), {0, 2, 1});
    std::vector<int> composed(3);
    std::vector<int> p1{1, 0, 2}, p2{0, 2, 1};
    for (int i = 0; i < 3; ++i) composed[i] = p1[p2[i]];
    CHECK(equal(lhs, permute(*H, p, composed)));
  }
}

TEST_CASE("equality distinguishes canonical forms") {
  HopfPtr H = kd();
  HElem d = generator_elem(*H, 0), one = unit_elem(*H);
  PseudoElem a = elem_of(*H, 1, tensor_of(d, one), 0);
  PseudoElem b = elem_of(*H, 1, tensor_of(one, d), 0);
  CHECK(equal(a, a));
  CHECK(!equal(a, b));
  CHECK_THROWS_AS(normalize(*H, PseudoRep{4, 1, {}}), std::invalid_argument);
}
