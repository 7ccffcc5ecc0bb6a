#include "psalg/pseudoalgebra.hpp"

#include <sstream>

#include "psalg/parallel.hpp"

namespace psalg {

std::string Report::to_text(bool verbose) const {
  std::ostringstream os;
  os << title << ": " << (pass() ? "PASS" : "FAIL") << " (" << items.size()
     << " checks, " << failures() << " failures)\n";
  for (const auto& it : items) {
    if (it.pass && !verbose) continue;
    os << "  [" << (it.pass ? "ok" : "FAIL") << "] " << it.label;
    if (!it.pass && !it.residual.empty()) os << "\n        residual: " << it.residual;
    os << "\n";
  }
  return os.str();
}

ModuleElem module_zero(int rank) { return ModuleElem(rank); }

ModuleElem basis_vector(const HopfAlgebra& H, int rank, int i) {
  ModuleElem a(rank);
  a.at(i) = unit_elem(H);
  return a;
}

ModuleElem module_add(const ModuleElem& a, const ModuleElem& b) {
  if (a.size() != b.size()) throw std::invalid_argument("module rank mismatch");
  ModuleElem out = a;
  for (size_t i = 0; i < b.size(); ++i) out[i] = add(out[i], b[i]);
  return out;
}

ModuleElem module_sub(const ModuleElem& a, const ModuleElem& b) {
  if (a.size() != b.size()) throw std::invalid_argument("module rank mismatch");
  ModuleElem out = a;
  for (size_t i = 0; i < b.size(); ++i) out[i] = sub(out[i], b[i]);
  return out;
}

ModuleElem module_scale(const HopfAlgebra& H, const HElem& h, const ModuleElem& a) {
  ModuleElem out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = mul(H, h, a[i]);
  return out;
}

bool module_is_zero(const ModuleElem& a) {
  for (const auto& c : a)
    if (!c.empty()) return false;
  return true;
}

ProductTable table_add(const ProductTable& a, const ProductTable& b) {
  if (a.rank != b.rank) throw std::invalid_argument("table rank mismatch");
  ProductTable out = a;
  for (const auto& [key, t] : b.entries) {
    auto it = out.entries.find(key);
    if (it == out.entries.end()) {
      out.entries.emplace(key, t);
    } else {
      it->second = it->second + t;
      if (it->second.terms.empty()) out.entries.erase(it);
    }
  }
  return out;
}

ProductTable table_scale(const ProductTable& a, const Rational& c) {
  ProductTable out{a.rank, {}};
  if (is_zero(c)) return out;
  for (const auto& [key, t] : a.entries) out.entries.emplace(key, scale(t, c));
  return out;
}

ProductTable table_neg(const ProductTable& a) { return table_scale(a, -1); }

int table_degree(const HopfAlgebra& H, const ProductTable& t) {
  int d = 0;
  for (const auto& [key, tensor] : t.entries)
    for (const auto& [k, c] : tensor.terms)
      for (const auto& slot : k) d = std::max(d, H.degree(slot));
  return d;
}

PseudoElem pseudoproduct(const HopfAlgebra& H, const ProductTable& table,
                         const ModuleElem& a, const ModuleElem& b) {
  int rank = table.rank;
  if (static_cast<int>(a.size()) != rank || static_cast<int>(b.size()) != rank)
    throw std::invalid_argument("module element rank does not match the table");
  PseudoRep rep{2, rank, {}};
  for (int i = 0; i < rank; ++i) {
    if (a[i].empty()) continue;
    for (int j = 0; j < rank; ++j) {
      if (b[j].empty()) continue;
      for (int k = 0; k < rank; ++k) {
        const Tensor* alpha = table.find(i, j, k);
        if (!alpha) continue;
        // (a_i (x) b_j) . alpha, slot by slot
        for (const auto& [tk, tc] : alpha->terms) {
          HElemT<Rational> left = mul(H, a[i], monomial(tk[0]));
          HElemT<Rational> right = mul(H, b[j], monomial(tk[1]));
          for (const auto& [lk, lc] : left)
            for (const auto& [rk, rc] : right)
              add_term(rep.terms, PseudoKey{{lk, rk}, H.unit_key(), k},
                       tc * lc * rc);
        }
      }
    }
  }
  return normalize(H, rep);
}

PseudoElem pseudoproduct(const Pseudoalgebra& A, const ModuleElem& a,
                         const ModuleElem& b) {
  return pseudoproduct(A.H(), A.table, a, b);
}

PseudoElem compose_left(const HopfAlgebra& H, const ProductTable& outer,
                        const ProductTable& inner, const ModuleElem& a,
                        const ModuleElem& b, const ModuleElem& c) {
  // a*b = sum (h (x) 1) (x)_H u e_d, then
  // (h (x) 1 (x)_H u e_d) * c = sum (h h'_(1) (x) h'_(2) (x) 1) (x)_H u' e_k
  // where (u e_d) * c = sum (h' (x) 1) (x)_H u' e_k.
  PseudoElem ab = pseudoproduct(H, inner, a, b);
  PseudoElem out{3, outer.rank, {}};
  std::map<std::pair<BasisKey, int>, PseudoElem> cache;
  for (const auto& [key, coef] : ab.terms) {
    auto cit = cache.find({key.mcoef, key.eidx});
    if (cit == cache.end()) {
      ModuleElem d(outer.rank);
      d.at(key.eidx) = monomial(key.mcoef);
      cit = cache.emplace(std::make_pair(key.mcoef, key.eidx),
                          pseudoproduct(H, outer, d, c)).first;
    }
    const BasisKey& h = key.slots[0];
    for (const auto& [key2, coef2] : cit->second.terms) {
      const BasisKey& hp = key2.slots[0];
      for (const auto& [h1, h2] : H.basis_coproduct(hp)) {
        const HElem& prod = H.basis_mul(h, h1);
        for (const auto& [pk, pc] : prod)
          add_term(out.terms, PseudoKey{{pk, h2}, key2.mcoef, key2.eidx},
                   coef * coef2 * pc);
      }
    }
  }
  return out;
}

PseudoElem compose_right(const HopfAlgebra& H, const ProductTable& outer,
                         const ProductTable& inner, const ModuleElem& a,
                         const ModuleElem& b, const ModuleElem& c) {
  // b*c = sum (g (x) 1) (x)_H v e_d, then
  // a * (g (x) 1 (x)_H v e_d) = sum (h' (x) g (x) 1) (x)_H u' e_k
  // where a * (v e_d) = sum (h' (x) 1) (x)_H u' e_k.
  PseudoElem bc = pseudoproduct(H, inner, b, c);
  PseudoElem out{3, outer.rank, {}};
  std::map<std::pair<BasisKey, int>, PseudoElem> cache;
  for (const auto& [key, coef] : bc.terms) {
    auto cit = cache.find({key.mcoef, key.eidx});
    if (cit == cache.end()) {
      ModuleElem d(outer.rank);
      d.at(key.eidx) = monomial(key.mcoef);
      cit = cache.emplace(std::make_pair(key.mcoef, key.eidx),
                          pseudoproduct(H, outer, a, d)).first;
    }
    const BasisKey& g = key.slots[0];
    for (const auto& [key2, coef2] : cit->second.terms)
      add_term(out.terms, PseudoKey{{key2.slots[0], g}, key2.mcoef, key2.eidx},
               coef * coef2);
  }
  return out;
}

namespace {

std::string triple_label(int i, int j, int k) {
  std::ostringstream os;
  os << "(e" << (i + 1) << ", e" << (j + 1) << ", e" << (k + 1) << ")";
  return os.str();
}

}  // namespace

Report check_structure(const Pseudoalgebra& A, Flavor flavor, int threads) {
  const HopfAlgebra& H = A.H();
  int r = A.rank();
  Report rep;
  rep.title = flavor == Flavor::Associative ? "associativity" : "lie axioms";
  if (flavor == Flavor::Unchecked) {
    rep.title = "structure (unchecked)";
    return rep;
  }
  if (flavor == Flavor::Associative) {
    std::vector<std::tuple<int, int, int>> triples;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) triples.emplace_back(i, j, k);
    auto items = parallel_map<CheckItem>(triples.size(), threads, [&](size_t t) {
      auto [i, j, k] = triples[t];
      ModuleElem ei = basis_vector(H, r, i), ej = basis_vector(H, r, j),
                 ek = basis_vector(H, r, k);
      PseudoElem res = sub(compose_left(A, ei, ej, ek), compose_right(A, ei, ej, ek));
      CheckItem item;
      item.label = "assoc " + triple_label(i, j, k);
      item.pass = res.is_zero();
      if (!item.pass) item.residual = to_string(H, res);
      return item;
    });
    rep.items = std::move(items);
    return rep;
  }
  // Lie: skew-commutativity on pairs
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      ModuleElem ei = basis_vector(H, r, i), ej = basis_vector(H, r, j);
      PseudoElem lhs = pseudoproduct(A, ej, ei);
      PseudoElem rhs = scale(permute(H, pseudoproduct(A, ei, ej), {1, 0}), -1);
      PseudoElem res = sub(lhs, rhs);
      std::ostringstream lbl;
      lbl << "skew (e" << (i + 1) << ", e" << (j + 1) << ")";
      rep.add(lbl.str(), res.is_zero(), res.is_zero() ? "" : to_string(H, res));
    }
  // Jacobi on triples
  std::vector<std::tuple<int, int, int>> triples;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) triples.emplace_back(i, j, k);
  auto items = parallel_map<CheckItem>(triples.size(), threads, [&](size_t t) {
    auto [i, j, k] = triples[t];
    ModuleElem ei = basis_vector(H, r, i), ej = basis_vector(H, r, j),
               ek = basis_vector(H, r, k);
    PseudoElem lhs = compose_right(A, ei, ej, ek);           // [a*[b*c]]
    PseudoElem rhs1 = compose_left(A, ei, ej, ek);           // [[a*b]*c]
    PseudoElem rhs2 = permute(A.H(), compose_right(A, ej, ei, ek), {1, 0, 2});
    PseudoElem res = sub(lhs, add(rhs1, rhs2));
    CheckItem item;
    item.label = "jacobi " + triple_label(i, j, k);
    item.pass = res.is_zero();
    if (!item.pass) item.residual = to_string(H, res);
    return item;
  });
  for (auto& it : items) rep.items.push_back(std::move(it));
  return rep;
}

Pseudoalgebra current(HopfPtr H, int base_dim,
                      const std::map<std::tuple<int, int, int>, Rational>& base_table,
                      Flavor flavor) {
  Pseudoalgebra A;
  A.hopf = H;
  A.table.rank = base_dim;
  BasisKey one = H->unit_key();
  for (const auto& [key, c] : base_table) {
    if (is_zero(c)) continue;
    Tensor t{2, {}};
    t.terms.emplace(std::vector<BasisKey>{one, one}, c);
    auto [i, j, k] = key;
    A.table.set(i, j, k, std::move(t));
  }
  A.flavor = flavor;
  return A;
}

Tensor rank1_alpha(const HopfAlgebra& H, const Tensor& r, const HElem& s) {
  Tensor alpha = r;
  if (alpha.terms.empty()) alpha.arity = 2;
  HElem one = unit_elem(H);
  alpha = alpha + tensor_of(s, one) - tensor_of(one, s);
  return alpha;
}

namespace {

bool is_generator_combination(const HopfAlgebra& H, const HElem& s) {
  for (const auto& [k, c] : s)
    if (H.degree(k) != 1 || (H.has_group_part() && k.grp != H.grp().identity))
      return false;
  return true;
}

}  // namespace

Report rank1_lie_conditions(const HopfAlgebra& H, const Tensor& r, const HElem& s) {
  if (r.arity != 2) throw std::invalid_argument("r must have arity 2");
  for (const auto& [k, c] : r.terms)
    if (H.degree(k[0]) != 1 || H.degree(k[1]) != 1)
      throw std::invalid_argument("r must be a degree-(1,1) tensor");
  if (!(r + sigma(r)).terms.empty())
    throw std::invalid_argument("r must be antisymmetric");
  if (!is_generator_combination(H, s))
    throw std::invalid_argument("s must be a generator combination with eps(s)=0");

  Report rep;
  rep.title = "rank-1 lie conditions";
  // [r, Delta(s)] = 0 in H (x) H
  Tensor ds = coproduct(H, s);
  Tensor c1 = mul(H, r, ds) - mul(H, ds, r);
  rep.add("[r, Delta(s)] = 0", c1.terms.empty(),
          c1.terms.empty() ? "" : to_string(H, c1));
  // six-term identity in H (x) H (x) H
  Tensor r12 = embed_slots(H, r, {0, 1}, 3);
  Tensor r13 = embed_slots(H, r, {0, 2}, 3);
  Tensor r23 = embed_slots(H, r, {1, 2}, 3);
  Tensor s1 = embed_slots(H, HElemT<Rational>(s), 0, 3);
  Tensor s2 = embed_slots(H, HElemT<Rational>(s), 1, 3);
  Tensor s3 = embed_slots(H, HElemT<Rational>(s), 2, 3);
  auto brk = [&](const Tensor& x, const Tensor& y) {
    return mul(H, x, y) - mul(H, y, x);
  };
  Tensor c2 = brk(r12, r13) + mul(H, r12, s3) + brk(r12, r23) +
              mul(H, r23, s1) + brk(r13, r23) - mul(H, r13, s2);
  rep.add("six-term identity", c2.terms.empty(),
          c2.terms.empty() ? "" : to_string(H, c2));
  return rep;
}

bool split_rank1_alpha(const HopfAlgebra& H, const Tensor& alpha, Tensor& r,
                       HElem& s) {
  if (alpha.arity != 2) return false;
  r = Tensor{2, {}};
  HElem s_left, s_right;
  BasisKey one = H.unit_key();
  for (const auto& [k, c] : alpha.terms) {
    int d0 = H.degree(k[0]), d1 = H.degree(k[1]);
    bool unit0 = (k[0] == one), unit1 = (k[1] == one);
    if (d0 == 1 && d1 == 1)
      r.terms.emplace(k, c);
    else if (d0 == 1 && unit1)
      add_term(s_left, k[0], c);
    else if (unit0 && d1 == 1)
      add_term(s_right, k[1], -c);
    else
      return false;
  }
  if (s_left != s_right) return false;
  if (!(r + sigma(r)).terms.empty()) return false;
  if (!is_generator_combination(H, s_left)) return false;
  s = s_left;
  return true;
}

Pseudoalgebra rank1_lie_algebra(HopfPtr H, const Tensor& alpha) {
  Pseudoalgebra A;
  A.hopf = H;
  A.table.rank = 1;
  A.table.set(0, 0, 0, alpha);
  A.flavor = Flavor::Lie;
  return A;
}

std::vector<Tensor> coefficients_of(const HopfAlgebra& H, const PseudoElem& p) {
  if (p.arity != 2)
    throw std::invalid_argument("coefficients_of expects an arity-2 element");
  std::vector<Tensor> out(p.rank, Tensor{2, {}});
  for (const auto& [key, c] : p.terms) {
    // (h (x) 1) (x)_H u e_k = (h u_(1) (x) u_(2)) (x)_H e_k
    for (const auto& [u1, u2] : H.basis_coproduct(key.mcoef)) {
      const HElem& prod = H.basis_mul(key.slots[0], u1);
      for (const auto& [pk, pc] : prod)
        add_term(out[key.eidx].terms, {pk, u2}, c * pc);
    }
  }
  return out;
}

}  // namespace psalg
