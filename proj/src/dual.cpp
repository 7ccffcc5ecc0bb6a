#include "psalg/dual.hpp"

#include <sstream>

namespace psalg {

DualPtr DualSpace::make(HopfPtr H, int truncation) {
  auto X = std::make_shared<DualSpace>();
  X->hopf_ = std::move(H);
  X->truncation_ = X->exact() ? 0 : truncation;
  X->basis_ = X->hopf_->basis_up_to(X->truncation_);
  return X;
}

DualElem dual_basis_elem(const DualSpace& X, const BasisKey& k) {
  X.H().require_key(k);
  if (!X.exact() && X.H().degree(k) > X.truncation())
    throw std::out_of_range("dual basis functional beyond the truncation");
  DualElem x;
  x.terms.emplace(k, 1);
  return x;
}

DualElem dual_zero(const DualSpace& X) {
  (void)X;
  return DualElem{};
}

// largest degree carried by a term (0 for the zero functional)
static int support_degree(const HopfAlgebra& H, const DualElem& x) {
  int d = 0;
  for (const auto& [k, c] : x.terms) d = std::max(d, H.degree(k));
  return d;
}

DualElem dual_add(const DualElem& a, const DualElem& b) {
  DualElem out = a;
  out.validity = std::min(a.validity, b.validity);
  for (const auto& [k, c] : b.terms) add_term(out.terms, k, c);
  return out;
}

DualElem dual_sub(const DualElem& a, const DualElem& b) {
  DualElem out = a;
  out.validity = std::min(a.validity, b.validity);
  for (const auto& [k, c] : b.terms) add_term(out.terms, k, -c);
  return out;
}

DualElem dual_scale(const DualElem& a, const Rational& c) {
  DualElem out;
  out.validity = a.validity;
  for (const auto& [k, q] : a.terms) add_term(out.terms, k, q * c);
  return out;
}

bool dual_equal_within(const DualSpace& X, const DualElem& a, const DualElem& b,
                       int degree) {
  if (degree > a.validity || degree > b.validity)
    throw std::out_of_range("comparison beyond the validity degree");
  const HopfAlgebra& H = X.H();
  DualElem d = dual_sub(a, b);
  for (const auto& [k, c] : d.terms)
    if (H.degree(k) <= degree) return false;
  return true;
}

Rational pairing(const DualSpace& X, const DualElem& x, const HElem& h) {
  const HopfAlgebra& H = X.H();
  int hdeg = filtration_degree(H, h);
  if (hdeg > x.validity)
    throw std::out_of_range("pairing requested beyond the validity degree");
  Rational acc = 0;
  for (const auto& [k, c] : h) {
    auto it = x.terms.find(k);
    if (it != x.terms.end()) acc += it->second * c;
  }
  return acc;
}

DualElem dual_product(const DualSpace& X, const DualElem& x, const DualElem& y) {
  const HopfAlgebra& H = X.H();
  DualElem out;
  // The product pairs against graded coproduct splits, so its support sits
  // in degree <= supp(x) + supp(y); when that fits inside the truncation the
  // stored coordinates are complete and exactness survives.
  if (!X.exact()) {
    bool complete = support_degree(H, x) + support_degree(H, y) <= X.truncation();
    out.validity = std::min({x.validity, y.validity,
                             complete ? kExactValidity : X.truncation()});
  } else {
    out.validity = std::min(x.validity, y.validity);
  }
  for (const BasisKey& f : X.basis()) {
    if (H.degree(f) > out.validity) continue;
    Rational acc = 0;
    for (const auto& [f1, f2] : H.basis_coproduct(f)) {
      auto i1 = x.terms.find(f1);
      if (i1 == x.terms.end()) continue;
      auto i2 = y.terms.find(f2);
      if (i2 == y.terms.end()) continue;
      acc += i1->second * i2->second;
    }
    add_term(out.terms, f, acc);
  }
  return out;
}

DualElem dual_left_act(const DualSpace& X, const HElem& h, const DualElem& x) {
  const HopfAlgebra& H = X.H();
  int hdeg = std::max(0, filtration_degree(H, h));
  DualElem out;
  // deg(fh) = deg f + deg h in the graded cases, so acting shifts the
  // trustworthy range down by deg h; exact inputs stay exact (the support
  // shrinks by deg h and remains stored).
  out.validity = x.validity >= kExactValidity ? kExactValidity : x.validity - hdeg;
  int bound = std::min(out.validity, X.exact() ? kExactValidity : X.truncation());
  for (const BasisKey& f : X.basis()) {
    if (H.degree(f) > bound) continue;
    // <h.x, f> = <x, f h>
    HElem fh = mul(H, monomial(f), h);
    add_term(out.terms, f, pairing(X, x, fh));
  }
  return out;
}

DualElem dual_right_act(const DualSpace& X, const DualElem& x, const HElem& h) {
  const HopfAlgebra& H = X.H();
  int hdeg = std::max(0, filtration_degree(H, h));
  DualElem out;
  out.validity = x.validity >= kExactValidity ? kExactValidity : x.validity - hdeg;
  int bound = std::min(out.validity, X.exact() ? kExactValidity : X.truncation());
  for (const BasisKey& f : X.basis()) {
    if (H.degree(f) > bound) continue;
    HElem hf = mul(H, h, monomial(f));
    add_term(out.terms, f, pairing(X, x, hf));
  }
  return out;
}

DualElem dual_antipode(const DualSpace& X, const DualElem& x) {
  const HopfAlgebra& H = X.H();
  DualElem out;
  out.validity = x.validity;
  int bound = std::min(out.validity, X.exact() ? kExactValidity : X.truncation());
  for (const BasisKey& f : X.basis()) {
    if (H.degree(f) > bound) continue;
    add_term(out.terms, f, pairing(X, x, H.basis_antipode(f)));
  }
  return out;
}

std::map<std::pair<BasisKey, BasisKey>, Rational> dual_coproduct(
    const DualSpace& X, const DualElem& x, int degree_cap) {
  const HopfAlgebra& H = X.H();
  std::map<std::pair<BasisKey, BasisKey>, Rational> out;
  std::vector<BasisKey> keys = H.basis_up_to(degree_cap);
  for (const BasisKey& g : keys)
    for (const BasisKey& h : keys) {
      const HElem& gh = H.basis_mul(g, h);
      Rational c = pairing(X, x, gh);
      if (!is_zero(c)) out.emplace(std::make_pair(g, h), c);
    }
  return out;
}

std::string to_string(const DualSpace& X, const DualElem& x) {
  if (x.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : x.terms) {
    Rational q = c;
    if (first) {
      if (sgn(q) < 0) { os << '-'; q = -q; }
    } else {
      os << (sgn(q) < 0 ? " - " : " + ");
      if (sgn(q) < 0) q = -q;
    }
    if (q != 1) os << to_string(q) << '*';
    os << "x[" << to_string(X.H(), k) << "]";
    first = false;
  }
  return os.str();
}

DualElem apply(const DualSpace& X, const DualMap& xi, const DualElem& x) {
  switch (xi.kind) {
    case DualMap::Kind::Zero:
      return dual_zero(X);
    case DualMap::Kind::Identity:
      return x;
    case DualMap::Kind::LeftMult:
      return dual_left_act(X, xi.mult, x);
    case DualMap::Kind::Matrix: {
      DualElem out;
      out.validity = x.validity;
      for (const auto& [k, c] : x.terms) {
        auto it = xi.images.find(k);
        if (it == xi.images.end())
          throw std::invalid_argument("dual map matrix is missing a basis image");
        out.validity = std::min(out.validity, it->second.validity);
        for (const auto& [ik, ic] : it->second.terms)
          add_term(out.terms, ik, ic * c);
      }
      return out;
    }
  }
  return dual_zero(X);
}

}  // namespace psalg
