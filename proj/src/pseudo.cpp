#include "psalg/pseudo.hpp"

#include <sstream>

namespace psalg {

Tensor fourier(const HopfAlgebra& H, const Tensor& t) {
  if (t.arity != 2) throw std::invalid_argument("fourier needs arity 2");
  Tensor out{2, {}};
  for (const auto& [k, c] : t.terms)
    for (const auto& [g1, g2] : H.basis_coproduct(k[1])) {
      const HElem& s = H.basis_antipode(g1);
      for (const auto& [sk, sc] : s) {
        const HElem& f = H.basis_mul(k[0], sk);
        for (const auto& [fk, fc] : f) add_term(out.terms, {fk, g2}, c * sc * fc);
      }
    }
  return out;
}

Tensor fourier_inv(const HopfAlgebra& H, const Tensor& t) {
  if (t.arity != 2) throw std::invalid_argument("fourier_inv needs arity 2");
  Tensor out{2, {}};
  for (const auto& [k, c] : t.terms)
    for (const auto& [g1, g2] : H.basis_coproduct(k[1])) {
      const HElem& f = H.basis_mul(k[0], g1);
      for (const auto& [fk, fc] : f) add_term(out.terms, {fk, g2}, c * fc);
    }
  return out;
}

std::string to_string(const HopfAlgebra& H, const Tensor& t) {
  if (t.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t.terms) {
    Rational q = c;
    if (first) {
      if (sgn(q) < 0) { os << '-'; q = -q; }
    } else {
      os << (sgn(q) < 0 ? " - " : " + ");
      if (sgn(q) < 0) q = -q;
    }
    if (q != 1) os << to_string(q) << '*';
    for (size_t s = 0; s < k.size(); ++s) {
      if (s) os << " (x) ";
      os << to_string(H, k[s]);
    }
    first = false;
  }
  return os.str();
}

void add_term(PseudoElem& p, const PseudoKey& k, const Rational& c) {
  add_term(p.terms, k, c);
}
void add_term(PseudoRep& p, const PseudoKey& k, const Rational& c) {
  add_term(p.terms, k, c);
}

PseudoElem add(const PseudoElem& a, const PseudoElem& b) {
  if (a.arity != b.arity || a.rank != b.rank)
    throw std::invalid_argument("pseudo element arity/rank mismatch");
  PseudoElem out = a;
  for (const auto& [k, c] : b.terms) add_term(out.terms, k, c);
  return out;
}

PseudoElem sub(const PseudoElem& a, const PseudoElem& b) {
  if (a.arity != b.arity || a.rank != b.rank)
    throw std::invalid_argument("pseudo element arity/rank mismatch");
  PseudoElem out = a;
  for (const auto& [k, c] : b.terms) add_term(out.terms, k, -c);
  return out;
}

PseudoElem scale(const PseudoElem& a, const Rational& c) {
  PseudoElem out{a.arity, a.rank, {}};
  for (const auto& [k, q] : a.terms) add_term(out.terms, k, q * c);
  return out;
}

PseudoElem normalize(const HopfAlgebra& H, const PseudoRep& rep) {
  if (rep.arity < 2 || rep.arity > 3)
    throw std::invalid_argument("quotient elements supported for arity 2 and 3");
  PseudoElem out{rep.arity, rep.rank, {}};
  for (const auto& [key, c] : rep.terms) {
    if (static_cast<int>(key.slots.size()) != rep.arity)
      throw std::invalid_argument("representative term has wrong slot count");
    if (key.eidx < 0 || key.eidx >= rep.rank)
      throw std::invalid_argument("module index out of range");
    const BasisKey& last = key.slots.back();
    if (rep.arity == 2) {
      for (const auto& [g1, g2] : H.basis_coproduct(last)) {
        const HElem& s = H.basis_antipode(g1);
        for (const auto& [sk, sc] : s) {
          const HElem& h = H.basis_mul(key.slots[0], sk);
          const HElem& u = H.basis_mul(g2, key.mcoef);
          for (const auto& [hk, hc] : h)
            for (const auto& [uk, uc] : u)
              add_term(out.terms, PseudoKey{{hk}, uk, key.eidx}, c * sc * hc * uc);
        }
      }
    } else {
      for (const auto& [c1, c23] : H.basis_coproduct(last))
        for (const auto& [c2, c3] : H.basis_coproduct(c23)) {
          const HElem& s1 = H.basis_antipode(c1);
          const HElem& s2 = H.basis_antipode(c2);
          const HElem& u = H.basis_mul(c3, key.mcoef);
          for (const auto& [s1k, s1c] : s1)
            for (const auto& [hk, hc] : H.basis_mul(key.slots[0], s1k))
              for (const auto& [s2k, s2c] : s2)
                for (const auto& [gk, gc] : H.basis_mul(key.slots[1], s2k))
                  for (const auto& [uk, uc] : u)
                    add_term(out.terms, PseudoKey{{hk, gk}, uk, key.eidx},
                             c * s1c * hc * s2c * gc * uc);
        }
    }
  }
  return out;
}

PseudoRep as_rep(const HopfAlgebra& H, const PseudoElem& p) {
  PseudoRep rep{p.arity, p.rank, {}};
  for (const auto& [key, c] : p.terms) {
    PseudoKey k = key;
    k.slots.push_back(H.unit_key());
    rep.terms.emplace(std::move(k), c);
  }
  return rep;
}

PseudoElem act(const HopfAlgebra& H, const Tensor& left, const PseudoElem& p) {
  if (left.arity != p.arity)
    throw std::invalid_argument("acting tensor arity must match");
  PseudoRep rep{p.arity, p.rank, {}};
  PseudoRep base = as_rep(H, p);
  for (const auto& [lk, lc] : left.terms)
    for (const auto& [pk, pc] : base.terms) {
      // per-slot products, expanded incrementally
      std::vector<std::pair<std::vector<BasisKey>, Rational>> partial{{{}, lc * pc}};
      for (int s = 0; s < p.arity; ++s) {
        const HElem& prod = H.basis_mul(lk[s], pk.slots[s]);
        std::vector<std::pair<std::vector<BasisKey>, Rational>> next;
        for (const auto& [qk, qc] : partial)
          for (const auto& [mk, mc] : prod) {
            auto slots = qk;
            slots.push_back(mk);
            next.emplace_back(std::move(slots), qc * mc);
          }
        partial = std::move(next);
      }
      for (auto& [slots, q] : partial)
        add_term(rep.terms, PseudoKey{slots, pk.mcoef, pk.eidx}, q);
    }
  return normalize(H, rep);
}

PseudoElem permute(const HopfAlgebra& H, const PseudoElem& p,
                   const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != p.arity)
    throw std::invalid_argument("permutation size must match arity");
  PseudoRep base = as_rep(H, p);
  PseudoRep rep{p.arity, p.rank, {}};
  for (const auto& [key, c] : base.terms) {
    PseudoKey k = key;
    for (int i = 0; i < p.arity; ++i) k.slots[i] = key.slots[perm[i]];
    add_term(rep.terms, k, c);
  }
  return normalize(H, rep);
}

bool equal(const PseudoElem& a, const PseudoElem& b) {
  if (a.arity != b.arity || a.rank != b.rank)
    throw std::invalid_argument("pseudo element arity/rank mismatch");
  return a.terms == b.terms;
}

std::string to_string(const HopfAlgebra& H, const PseudoElem& p) {
  if (p.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : p.terms) {
    Rational q = c;
    if (first) {
      if (sgn(q) < 0) { os << '-'; q = -q; }
    } else {
      os << (sgn(q) < 0 ? " - " : " + ");
      if (sgn(q) < 0) q = -q;
    }
    if (q != 1) os << to_string(q) << '*';
    os << '(';
    for (const auto& s : k.slots) os << to_string(H, s) << " (x) ";
    os << "1) (x)_H ";
    std::string mono = to_string(H, k.mcoef);
    if (mono != "1") os << mono << '*';
    os << 'e' << (k.eidx + 1);
    first = false;
  }
  return os.str();
}

}  // namespace psalg
