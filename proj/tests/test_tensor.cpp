#include <doctest.h>

#include "support.hpp"

using namespace psalg;
using namespace psalg::testing;

TEST_CASE("fourier transform examples") {
  HopfPtr H = kd();
  HElem d = generator_elem(*H, 0), one = unit_elem(*H);
  // F(1 (x) d) = -d (x) 1 + 1 (x) d
  Tensor in = tensor_of(one, d);
  Tensor expect = tensor_of(d, one);
  expect = scale(expect, Rational(-1)) + tensor_of(one, d);
  CHECK(fourier(*H, in).terms == expect.terms);
  // F(f (x) 1) = f (x) 1
  Tensor f1 = tensor_of(monomial(BasisKey{{3}, 0}, Rational(2, 7)), one);
  CHECK(fourier(*H, f1).terms == f1.terms);
  // F(g (x) g) = 1 (x) g over k[Z/2]
  HopfPtr G = kz2();
  HElem g = monomial(BasisKey{{}, 1});
  CHECK(fourier(*G, tensor_of(g, g)).terms ==
        tensor_of(unit_elem(*G), g).terms);
}

TEST_CASE("fourier and its inverse cancel") {
  for (HopfPtr H : {kd(), udelta2(), HopfPtr(kz3()), smash_kd_z2()}) {
    Rng rng(5);
    for (int t = 0; t < 40; ++t) {
      Tensor a = rng.tensor2(*H, 3);
      CHECK(fourier_inv(*H, fourier(*H, a)).terms == a.terms);
      CHECK(fourier(*H, fourier_inv(*H, a)).terms == a.terms);
    }
  }
}

TEST_CASE("fourier recovers the identity of Lemma 1.2") {
  // f (x) g = (f S(g_(1)) (x) 1) Delta(g_(2))
  for (HopfPtr H : {kd(), udelta2()}) {
    Rng rng(9);
    for (int t = 0; t < 20; ++t) {
      Tensor a = rng.tensor2(*H, 3);
      Tensor rebuilt{2, {}};
      Tensor fa = fourier(*H, a);
      for (const auto& [k, c] : fa.terms) {
        Tensor part = mul(*H, tensor_of(HElem(monomial(k[0])), unit_elem(*H)),
                          coproduct(*H, HElem(monomial(k[1]))));
        rebuilt = rebuilt + scale(part, c);
      }
      CHECK(rebuilt.terms == a.terms);
    }
  }
}

TEST_CASE("slot permutations compose") {
  HopfPtr H = udelta2();
  Rng rng(13);
  for (int t = 0; t < 10; ++t) {
    Tensor a = rng.tensor2(*H, 2);
    CHECK(sigma(sigma(a)).terms == a.terms);
    Tensor a3 = tensor_of(a, Tensor{tensor_of(rng.helem(*H, 2), unit_elem(*H))});
    CHECK(a3.arity == 4);
  }
}
