#include "psalg/annihilation.hpp"

#include <sstream>

namespace psalg {

AnnihilationElem ann_zero(const DualSpace& X, int rank) {
  (void)X;
  AnnihilationElem u;
  u.rank = rank;
  return u;
}

AnnihilationElem ann_basis(const DualSpace& X, int rank, const BasisKey& dual_key,
                           int eidx) {
  AnnihilationElem u = ann_zero(X, rank);
  X.H().require_key(dual_key);
  if (eidx < 0 || eidx >= rank) throw std::invalid_argument("module index out of range");
  u.terms.emplace(std::make_pair(dual_key, eidx), 1);
  return u;
}

AnnihilationElem ann_add(const AnnihilationElem& a, const AnnihilationElem& b) {
  if (a.rank != b.rank) throw std::invalid_argument("rank mismatch");
  AnnihilationElem out = a;
  out.validity = std::min(a.validity, b.validity);
  for (const auto& [k, c] : b.terms) add_term(out.terms, k, c);
  return out;
}

AnnihilationElem ann_sub(const AnnihilationElem& a, const AnnihilationElem& b) {
  return ann_add(a, ann_scale(b, -1));
}

AnnihilationElem ann_scale(const AnnihilationElem& a, const Rational& c) {
  AnnihilationElem out;
  out.rank = a.rank;
  out.validity = a.validity;
  for (const auto& [k, q] : a.terms) add_term(out.terms, k, q * c);
  return out;
}

AnnihilationElem ann_of(const DualSpace& X, const DualElem& x,
                        const ModuleElem& a) {
  AnnihilationElem out = ann_zero(X, static_cast<int>(a.size()));
  out.validity = std::min(out.validity, x.validity);
  for (size_t k = 0; k < a.size(); ++k) {
    if (a[k].empty()) continue;
    // x (x)_H (u e_k) = (x.u) (x)_H e_k
    DualElem xu = dual_right_act(X, x, a[k]);
    out.validity = std::min(out.validity, xu.validity);
    for (const auto& [dk, dc] : xu.terms)
      add_term(out.terms, std::make_pair(dk, static_cast<int>(k)), dc);
  }
  return out;
}

bool ann_equal_within(const DualSpace& X, const AnnihilationElem& a,
                      const AnnihilationElem& b, int degree) {
  if (degree > a.validity || degree > b.validity)
    throw std::out_of_range("comparison beyond the validity degree");
  const HopfAlgebra& H = X.H();
  AnnihilationElem d = ann_sub(a, b);
  for (const auto& [k, c] : d.terms)
    if (H.degree(k.first) <= degree) return false;
  return true;
}

AnnihilationElem annihilation_product(const DualSpace& X,
                                      const ProductTable& table,
                                      const AnnihilationElem& u,
                                      const AnnihilationElem& v) {
  if (u.rank != table.rank || v.rank != table.rank)
    throw std::invalid_argument("rank mismatch");
  AnnihilationElem out = ann_zero(X, table.rank);
  out.validity = std::min({out.validity, u.validity, v.validity});
  for (const auto& [ukey, uc] : u.terms)
    for (const auto& [vkey, vc] : v.terms) {
      DualElem x = dual_basis_elem(X, ukey.first);
      DualElem y = dual_basis_elem(X, vkey.first);
      for (int k = 0; k < table.rank; ++k) {
        const Tensor* alpha = table.find(ukey.second, vkey.second, k);
        if (!alpha) continue;
        for (const auto& [tk, tc] : alpha->terms) {
          DualElem xf = dual_right_act(X, x, monomial(tk[0]));
          DualElem yg = dual_right_act(X, y, monomial(tk[1]));
          DualElem p = dual_product(X, xf, yg);
          out.validity = std::min(out.validity, p.validity);
          for (const auto& [dk, dc] : p.terms)
            add_term(out.terms, std::make_pair(dk, k), uc * vc * tc * dc);
        }
      }
    }
  return out;
}

AnnihilationElem lift_apply(const DualSpace& X, const DualMap& xi,
                            const HLinearOp& P, const AnnihilationElem& u) {
  if (u.rank != P.rank) throw std::invalid_argument("rank mismatch");
  AnnihilationElem out = ann_zero(X, u.rank);
  out.validity = std::min(out.validity, u.validity);
  for (const auto& [key, c] : u.terms) {
    DualElem xx = apply(X, xi, dual_basis_elem(X, key.first));
    for (int t = 0; t < P.rank; ++t) {
      const HElem& g = P.m[key.second][t];
      if (g.empty()) continue;
      DualElem xg = dual_right_act(X, xx, g);
      out.validity = std::min(out.validity, xg.validity);
      for (const auto& [dk, dc] : xg.terms)
        add_term(out.terms, std::make_pair(dk, t), c * dc);
    }
  }
  return out;
}

Report check_dual_map_linear(const DualSpace& X, const DualMap& xi, int hdeg) {
  const HopfAlgebra& H = X.H();
  Report rep;
  rep.title = "dual map H-linearity";
  std::vector<BasisKey> hbasis = H.basis_up_to(hdeg);
  for (const BasisKey& xk : X.basis())
    for (const BasisKey& hk : hbasis) {
      DualElem x = dual_basis_elem(X, xk);
      HElem h = monomial(hk);
      DualElem l1 = apply(X, xi, dual_left_act(X, h, x));
      DualElem l2 = dual_left_act(X, h, apply(X, xi, x));
      DualElem r1 = apply(X, xi, dual_right_act(X, x, h));
      DualElem r2 = dual_right_act(X, apply(X, xi, x), h);
      int dl = std::min(l1.validity, l2.validity);
      int dr = std::min(r1.validity, r2.validity);
      std::ostringstream lbl;
      lbl << "x[" << to_string(H, xk) << "], h=" << to_string(H, hk);
      bool okl = dl < 0 || dual_equal_within(X, l1, l2, dl);
      bool okr = dr < 0 || dual_equal_within(X, r1, r2, dr);
      rep.add("left  " + lbl.str(), okl);
      rep.add("right " + lbl.str(), okr);
    }
  return rep;
}

Report check_xi_hypothesis(OpKind kind, const DualSpace& X, const DualMap& xi,
                           int compare_deg) {
  Report rep;
  rep.title = "theorem 5.1 hypothesis (" + kind_name(kind) + ")";
  const HopfAlgebra& H = X.H();
  for (const BasisKey& xk : X.basis())
    for (const BasisKey& yk : X.basis()) {
      DualElem x = dual_basis_elem(X, xk), y = dual_basis_elem(X, yk);
      DualElem xix = apply(X, xi, x), xiy = apply(X, xi, y);
      DualElem a = apply(X, xi, dual_product(X, xix, y));
      DualElem b = dual_product(X, xix, xiy);
      DualElem c = apply(X, xi, dual_product(X, x, xiy));
      std::ostringstream lbl;
      lbl << "x[" << to_string(H, xk) << "], y[" << to_string(H, yk) << "]";
      int d = std::min({a.validity, b.validity, c.validity,
                        compare_deg < 0 ? kExactValidity : compare_deg});
      bool ok = d < 0 || (dual_equal_within(X, a, b, d) &&
                          dual_equal_within(X, b, c, d));
      if (kind == OpKind::Nijenhuis) {
        DualElem e = apply(X, xi, apply(X, xi, dual_product(X, x, y)));
        int dd = std::min(d, e.validity);
        ok = ok && (dd < 0 || dual_equal_within(X, b, e, dd));
      }
      if (kind == OpKind::Reynolds) {
        DualElem e = apply(X, xi, dual_product(X, xix, xiy));
        int dd = std::min(d, e.validity);
        ok = ok && (dd < 0 || dual_equal_within(X, b, e, dd));
      }
      rep.add(lbl.str(), ok);
    }
  return rep;
}

Report check_lift(OpKind kind, const DualSpace& X, const ProductTable& table,
                  const DualMap& xi, const HLinearOp& P, const Rational& weight,
                  int compare_deg) {
  Report rep;
  rep.title = "lifted " + kind_name(kind) + " identity on the annihilation algebra";
  const HopfAlgebra& H = X.H();
  auto Phi = [&](const AnnihilationElem& u) { return lift_apply(X, xi, P, u); };
  auto prod = [&](const AnnihilationElem& u, const AnnihilationElem& v) {
    return annihilation_product(X, table, u, v);
  };
  for (const BasisKey& xk : X.basis())
    for (const BasisKey& yk : X.basis())
      for (int i = 0; i < table.rank; ++i)
        for (int j = 0; j < table.rank; ++j) {
          AnnihilationElem u = ann_basis(X, table.rank, xk, i);
          AnnihilationElem v = ann_basis(X, table.rank, yk, j);
          AnnihilationElem pu = Phi(u), pv = Phi(v);
          AnnihilationElem lhs = prod(pu, pv);
          std::ostringstream lbl;
          lbl << "x[" << to_string(H, xk) << "](x)e" << (i + 1) << ", x["
              << to_string(H, yk) << "](x)e" << (j + 1);
          auto report_eq = [&](const std::string& tag,
                               const AnnihilationElem& rhs) {
            int d = std::min({lhs.validity, rhs.validity,
                              compare_deg < 0 ? kExactValidity : compare_deg});
            bool ok = d < 0 || ann_equal_within(X, lhs, rhs, d);
            rep.add(tag + " " + lbl.str(), ok,
                    ok ? "" : to_string(X, ann_sub(lhs, rhs)));
          };
          switch (kind) {
            case OpKind::Averaging:
              report_eq("left", Phi(prod(pu, v)));
              report_eq("right", Phi(prod(u, pv)));
              break;
            case OpKind::Nijenhuis:
              report_eq("", Phi(ann_sub(ann_add(prod(pu, v), prod(u, pv)),
                                        Phi(prod(u, v)))));
              break;
            case OpKind::Reynolds:
              report_eq("", Phi(ann_add(ann_add(prod(pu, v), prod(u, pv)),
                                        ann_scale(lhs, weight))));
              break;
            case OpKind::RotaBaxter:
              report_eq("", Phi(ann_add(ann_add(prod(pu, v), prod(u, pv)),
                                        ann_scale(prod(u, v), weight))));
              break;
          }
        }
  return rep;
}

std::string to_string(const DualSpace& X, const AnnihilationElem& u) {
  if (u.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : u.terms) {
    Rational q = c;
    if (first) {
      if (sgn(q) < 0) { os << '-'; q = -q; }
    } else {
      os << (sgn(q) < 0 ? " - " : " + ");
      if (sgn(q) < 0) q = -q;
    }
    if (q != 1) os << to_string(q) << '*';
    os << "x[" << to_string(X.H(), k.first) << "] (x) e" << (k.second + 1);
    first = false;
  }
  return os.str();
}

}  // namespace psalg
