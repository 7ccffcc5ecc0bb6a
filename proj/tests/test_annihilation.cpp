#include <doctest.h>

#include "support.hpp"

using namespace psalg;
using namespace psalg::testing;

namespace {

// (x, y) <- alpha = sum (x . f_i)(y . g_i), the pairing-action shorthand of
// the Theorem 5.1 proof
DualElem pair_action(const DualSpace& X, const DualElem& x, const DualElem& y,
                     const Tensor& alpha) {
  DualElem out = dual_zero(X);
  for (const auto& [k, c] : alpha.terms) {
    DualElem xf = dual_right_act(X, x, monomial(k[0]));
    DualElem yg = dual_right_act(X, y, monomial(k[1]));
    out = dual_add(out, dual_scale(dual_product(X, xf, yg), c));
  }
  return out;
}

}  // namespace

TEST_CASE("dual space arithmetic over group algebras") {
  HopfPtr H = kz2();
  DualPtr X = DualSpace::make(H, 0);
  DualElem x1 = dual_basis_elem(*X, BasisKey{{}, 0});
  DualElem xg = dual_basis_elem(*X, BasisKey{{}, 1});
  CHECK(dual_product(*X, x1, x1).terms == x1.terms);
  CHECK(dual_product(*X, xg, xg).terms == xg.terms);
  CHECK(dual_product(*X, x1, xg).terms.empty());
  CHECK(dual_left_act(*X, unit_elem(*H), xg).terms == xg.terms);
  // S* swaps the duals of g and g^{-1}
  HopfPtr H3 = kz3();
  DualPtr X3 = DualSpace::make(H3, 0);
  DualElem y = dual_basis_elem(*X3, BasisKey{{}, 1});
  CHECK(dual_antipode(*X3, y).terms ==
        dual_basis_elem(*X3, BasisKey{{}, 2}).terms);
}

TEST_CASE("divided-power duals multiply without binomials") {
  HopfPtr H = kd();
  DualPtr X = DualSpace::make(H, 5);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) {
      DualElem xi = dual_basis_elem(*X, BasisKey{{i}, 0});
      DualElem xj = dual_basis_elem(*X, BasisKey{{j}, 0});
      DualElem prod = dual_product(*X, xi, xj);
      CHECK(prod.terms == dual_basis_elem(*X, BasisKey{{i + j}, 0}).terms);
    }
}

TEST_CASE("validity bookkeeping on the truncated dual") {
  HopfPtr H = kd();
  DualPtr X = DualSpace::make(H, 3);
  DualElem x2 = dual_basis_elem(*X, BasisKey{{2}, 0});
  DualElem x3 = dual_basis_elem(*X, BasisKey{{3}, 0});
  // support 2 + 3 > truncation 3: the product representation is lossy
  DualElem lossy = dual_product(*X, x2, x3);
  CHECK(lossy.validity == 3);
  HElem beyond = monomial(BasisKey{{4}, 0});
  CHECK_THROWS_AS(pairing(*X, lossy, beyond), std::out_of_range);
  // basis functionals themselves pair exactly against anything
  CHECK(pairing(*X, x2, beyond) == 0);
  CHECK_THROWS_AS(dual_basis_elem(*X, BasisKey{{7}, 0}), std::out_of_range);
}

TEST_CASE("well-definedness of the annihilation pairing action") {
  // (x, y) <- (alpha Delta(h)) = [(x, y) <- alpha] . h  (Eq. 5.2 shape)
  for (HopfPtr H : {HopfPtr(kz3()), kd()}) {
    DualPtr X = DualSpace::make(H, 6);
    Rng rng(59);
    for (int t = 0; t < 100; ++t) {
      Tensor alpha = rng.tensor2(*H, 1, 2);
      BasisKey h = rng.key(*H, 1);
      DualElem x = dual_basis_elem(*X, rng.key(*H, 2));
      DualElem y = dual_basis_elem(*X, rng.key(*H, 2));
      Tensor moved = mul(*H, alpha, coproduct(*H, HElem(monomial(h))));
      DualElem lhs = pair_action(*X, x, y, moved);
      DualElem rhs = dual_right_act(*X, pair_action(*X, x, y, alpha),
                                    HElem(monomial(h)));
      int d = std::min(lhs.validity, rhs.validity);
      REQUIRE(d >= 0);
      CHECK(dual_equal_within(*X, lhs, rhs, d));
    }
  }
}

TEST_CASE("annihilation products over the single-product algebra") {
  HopfPtr H = kz2();
  DualPtr X = DualSpace::make(H, 0);
  Pseudoalgebra A = example22_unit(H);
  AnnihilationElem u = ann_basis(*X, 2, BasisKey{{}, 0}, 1);
  AnnihilationElem v = ann_basis(*X, 2, BasisKey{{}, 1}, 1);
  // (x_1 (x) e2)(x_g (x) e2) pairs to zero
  CHECK(annihilation_product(*X, A.table, u, v).is_zero());
  CHECK(!annihilation_product(*X, A.table, u, u).is_zero());
  // the zero table gives the zero product
  ProductTable zt{2, {}};
  CHECK(annihilation_product(*X, zt, u, u).is_zero());
}

TEST_CASE("associativity transfers to the annihilation algebra") {
  HopfPtr H = kz3();
  DualPtr X = DualSpace::make(H, 0);
  for (Pseudoalgebra A : {example22_unit(H), cur_path(H)}) {
    REQUIRE(check_structure(A, Flavor::Associative).pass());
    for (const BasisKey& xk : X->basis())
      for (const BasisKey& yk : X->basis())
        for (const BasisKey& zk : X->basis())
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
              for (int k = 0; k < 2; ++k) {
                AnnihilationElem u = ann_basis(*X, 2, xk, i);
                AnnihilationElem v = ann_basis(*X, 2, yk, j);
                AnnihilationElem w = ann_basis(*X, 2, zk, k);
                AnnihilationElem lhs = annihilation_product(
                    *X, A.table, annihilation_product(*X, A.table, u, v), w);
                AnnihilationElem rhs = annihilation_product(
                    *X, A.table, u, annihilation_product(*X, A.table, v, w));
                CHECK(ann_sub(lhs, rhs).is_zero());
              }
  }
}

TEST_CASE("corollary 5.2 over k[Z/2] and k[Z/3]") {
  for (HopfPtr H : {HopfPtr(kz2()), HopfPtr(kz3())}) {
    DualPtr X = DualSpace::make(H, 0);
    Pseudoalgebra A = example22_unit(H);
    HElem t = *H->left_integral();
    DualMap xi = DualMap::left_mult(t);
    CHECK(check_dual_map_linear(*X, xi, 0).pass());
    // (1) averaging lifts through any left integral
    HLinearOp T = HLinearOp::diagonal(
        *H, {add(unit_elem(*H), monomial(BasisKey{{}, 1})),
             unit_elem(*H, Rational(3))});
    REQUIRE(check_operator(OpKind::Averaging, T, A).pass());
    CHECK(check_xi_hypothesis(OpKind::Averaging, *X, xi, -1).pass());
    CHECK(check_lift(OpKind::Averaging, *X, A.table, xi, T).pass());
    // scaled integrals stay averaging-compatible
    DualMap xi2 = DualMap::left_mult(scale(t, Rational(2, 5)));
    CHECK(check_xi_hypothesis(OpKind::Averaging, *X, xi2, -1).pass());
    CHECK(check_lift(OpKind::Averaging, *X, A.table, xi2, T).pass());
    // (2) t is not group-like, so the nijenhuis hypothesis fails for xi = t.
    //     The zero map satisfies everything.
    CHECK(!check_xi_hypothesis(OpKind::Nijenhuis, *X, xi, -1).pass());
    HLinearOp N = HLinearOp::diagonal(*H, {unit_elem(*H, 2), unit_elem(*H, 2)});
    CHECK(check_xi_hypothesis(OpKind::Nijenhuis, *X, DualMap::zero(), -1).pass());
    CHECK(check_lift(OpKind::Nijenhuis, *X, A.table, DualMap::zero(), N).pass());
    // (3) the eps(h) = 1 normalization t/|G| satisfies the reynolds hypothesis
    Rational order(H->group_order());
    DualMap xin = DualMap::left_mult(scale(t, 1 / order));
    CHECK(check_xi_hypothesis(OpKind::Reynolds, *X, xin, -1).pass());
    Rational lam(4);
    HLinearOp R = HLinearOp::diagonal(
        *H, {monomial(BasisKey{{}, 1}), unit_elem(*H, -1 / lam)});
    REQUIRE(check_operator(OpKind::Reynolds, R, A, lam).pass());
    CHECK(check_lift(OpKind::Reynolds, *X, A.table, xin, R, lam).pass());
  }
}

TEST_CASE("xi = identity lifts averaging operators trivially") {
  HopfPtr H = kz2();
  DualPtr X = DualSpace::make(H, 0);
  Pseudoalgebra A = example22_unit(H);
  HLinearOp T = HLinearOp::diagonal(*H, {unit_elem(*H, 5), unit_elem(*H, 2)});
  REQUIRE(check_operator(OpKind::Averaging, T, A).pass());
  CHECK(check_xi_hypothesis(OpKind::Averaging, *X, DualMap::identity(), -1).pass());
  CHECK(check_lift(OpKind::Averaging, *X, A.table, DualMap::identity(), T).pass());
}

TEST_CASE("theorem 5.1 as a property over generated xi families") {
  HopfPtr H = kz3();
  DualPtr X = DualSpace::make(H, 0);
  Pseudoalgebra A = example22_unit(H);
  HElem t = *H->left_integral();
  std::vector<HLinearOp> ops{
      HLinearOp::diagonal(*H, {monomial(BasisKey{{}, 2}), unit_elem(*H, 7)}),
      HLinearOp::scalar(*H, 2, Rational(1, 2))};
  for (const Rational& c : {Rational(1), Rational(-2), Rational(3, 7)}) {
    DualMap xi = DualMap::left_mult(scale(t, c));
    REQUIRE(check_xi_hypothesis(OpKind::Averaging, *X, xi, -1).pass());
    for (const HLinearOp& P : ops) {
      REQUIRE(check_operator(OpKind::Averaging, P, A).pass());
      CHECK(check_lift(OpKind::Averaging, *X, A.table, xi, P).pass());
    }
  }
}
