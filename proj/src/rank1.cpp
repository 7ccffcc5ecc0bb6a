#include "psalg/rank1.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace psalg {

// ---------------------------------------------------------------------------
// Poly

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms) add_term(terms, m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms) add_term(terms, m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      Poly::Monomial m = ma;
      for (const auto& [v, e] : mb) m[v] += e;
      add_term(out.terms, m, ca * cb);
    }
  return out;
}

Poly Poly::substitute(int var, const Poly& value) const {
  Poly out;
  std::vector<Poly> powers{Poly(1)};
  for (const auto& [m, c] : terms) {
    auto it = m.find(var);
    if (it == m.end()) {
      add_term(out.terms, m, c);
      continue;
    }
    int e = it->second;
    while (static_cast<int>(powers.size()) <= e)
      powers.push_back(powers.back() * value);
    Monomial rest = m;
    rest.erase(var);
    Poly part;
    part.terms.emplace(rest, c);
    out += part * powers[e];
  }
  return out;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational q = c;
    if (first) {
      if (sgn(q) < 0) { os << '-'; q = -q; }
    } else {
      os << (sgn(q) < 0 ? " - " : " + ");
      if (sgn(q) < 0) q = -q;
    }
    if (q != 1 || m.empty()) os << to_string(q);
    bool star = (q != 1);
    for (const auto& [v, e] : m) {
      if (star) os << '*';
      if (v < static_cast<int>(names.size()))
        os << names[v];
      else
        os << "u" << v;
      if (e > 1) os << '^' << e;
      star = true;
    }
    first = false;
  }
  return os.str();
}

namespace {

std::vector<mpz_class> divisors_of(const mpz_class& n0) {
  mpz_class n = abs(n0);
  std::vector<mpz_class> out;
  if (n == 0) return out;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

Rational eval_univariate(const std::map<int, Rational>& p, const Rational& x) {
  Rational acc = 0;
  int prev = -1;
  // Horner over the sparse exponents, highest first
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (prev >= 0)
      for (int k = it->first; k < prev; ++k) acc *= x;
    acc += it->second;
    prev = it->first;
  }
  for (int k = 0; k < prev; ++k) acc *= x;
  return acc;
}

// divide p by (x - r), assuming r is a root
std::map<int, Rational> deflate(const std::map<int, Rational>& p, const Rational& r) {
  int deg = p.rbegin()->first;
  std::vector<Rational> dense(deg + 1, 0);
  for (const auto& [e, c] : p) dense[e] = c;
  std::vector<Rational> q(deg, 0);
  Rational carry = 0;
  for (int e = deg; e >= 1; --e) {
    carry = dense[e] + carry;
    q[e - 1] = carry;
    carry *= r;
  }
  std::map<int, Rational> out;
  for (int e = 0; e < deg; ++e)
    if (sgn(q[e]) != 0) out.emplace(e, q[e]);
  return out;
}

}  // namespace

UnivariateRoots rational_roots(const std::map<int, Rational>& poly0) {
  UnivariateRoots out;
  std::map<int, Rational> p = poly0;
  for (auto it = p.begin(); it != p.end();)
    it = sgn(it->second) == 0 ? p.erase(it) : std::next(it);
  if (p.empty()) return out;  // identically zero
  // x^k factor
  if (p.begin()->first > 0) {
    out.roots.push_back(0);
    int shift = p.begin()->first;
    std::map<int, Rational> q;
    for (const auto& [e, c] : p) q.emplace(e - shift, c);
    p = std::move(q);
  }
  while (!p.empty() && p.rbegin()->first >= 1) {
    // integer coefficients: clear denominators
    mpz_class den_lcm = 1;
    for (const auto& [e, c] : p)
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
              c.get_den().get_mpz_t());
    mpz_class lead = p.rbegin()->second.get_num() * den_lcm /
                     p.rbegin()->second.get_den();
    mpz_class cnst = p.begin()->first == 0
                         ? mpz_class(p.begin()->second.get_num() * den_lcm /
                                     p.begin()->second.get_den())
                         : mpz_class(0);
    bool found = false;
    if (cnst != 0) {
      for (const mpz_class& num : divisors_of(cnst)) {
        for (const mpz_class& den : divisors_of(lead)) {
          for (int sign : {1, -1}) {
            Rational cand{sign * num, den};
            cand.canonicalize();
            if (sgn(eval_univariate(p, cand)) == 0) {
              if (std::find(out.roots.begin(), out.roots.end(), cand) ==
                  out.roots.end())
                out.roots.push_back(cand);
              p = deflate(p, cand);
              found = true;
              break;
            }
          }
          if (found) break;
        }
        if (found) break;
      }
    }
    if (!found) break;
    // deflation can re-expose an x^k factor
    if (!p.empty() && p.begin()->first > 0) {
      if (std::find(out.roots.begin(), out.roots.end(), Rational(0)) ==
          out.roots.end())
        out.roots.push_back(0);
      int shift = p.begin()->first;
      std::map<int, Rational> q;
      for (const auto& [e, c] : p) q.emplace(e - shift, c);
      p = std::move(q);
    }
  }
  if (!p.empty() && p.rbegin()->first >= 1) out.leftover = std::move(p);
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

// ---------------------------------------------------------------------------
// Residual systems

std::vector<std::string> ResidualSystem::variable_names(
    const HopfAlgebra& H) const {
  std::vector<std::string> names;
  names.reserve(unknowns.size());
  for (const auto& k : unknowns) names.push_back("c[" + to_string(H, k) + "]");
  return names;
}

ResidualSystem residual_system(OpKind kind, const HopfAlgebra& H,
                               const Tensor& alpha, int degree_cap,
                               const Rational& weight) {
  if (alpha.terms.empty())
    throw std::invalid_argument("rank-1 classification needs a nonzero alpha");
  if (H.kind() != HopfAlgebra::Kind::Enveloping)
    throw std::invalid_argument("rank-1 classification runs over enveloping algebras");
  Tensor r;
  HElem s;
  if (!split_rank1_alpha(H, alpha, r, s))
    throw std::invalid_argument("alpha is not of the form r + s(x)1 - 1(x)s");
  if (!rank1_lie_conditions(H, r, s).pass())
    throw std::invalid_argument("alpha does not define a Lie pseudoalgebra");

  ResidualSystem sys;
  sys.kind = kind;
  sys.weight = weight;
  sys.degree_cap = degree_cap;
  sys.unknowns = H.basis_up_to(degree_cap);

  HElemT<Poly> h;
  for (size_t i = 0; i < sys.unknowns.size(); ++i)
    h.emplace(sys.unknowns[i], Poly::var(static_cast<int>(i)));
  HElemT<Poly> one;
  one.emplace(H.unit_key(), Poly(1));

  TensorT<Poly> alphaP{2, {}};
  for (const auto& [k, c] : alpha.terms) alphaP.terms.emplace(k, Poly(c));

  TensorT<Poly> hh = tensor_of(h, h);
  TensorT<Poly> h1 = tensor_of(h, one);
  TensorT<Poly> oneh = tensor_of(one, h);
  TensorT<Poly> dh = coproduct(H, h);
  TensorT<Poly> lhs = mul(H, hh, alphaP);

  std::vector<TensorT<Poly>> residuals;
  switch (kind) {
    case OpKind::Averaging:
      residuals.push_back(lhs - mul(H, mul(H, h1, alphaP), dh));
      residuals.push_back(lhs - mul(H, mul(H, oneh, alphaP), dh));
      break;
    case OpKind::Nijenhuis: {
      TensorT<Poly> inner = mul(H, h1 + oneh, alphaP) - mul(H, alphaP, dh);
      residuals.push_back(lhs - mul(H, inner, dh));
      break;
    }
    case OpKind::Reynolds: {
      TensorT<Poly> res = lhs - mul(H, mul(H, h1 + oneh, alphaP), dh) -
                          scale(mul(H, mul(H, hh, alphaP), dh), Poly(weight));
      residuals.push_back(res);
      break;
    }
    case OpKind::RotaBaxter: {
      // weight-0 Rota-Baxter coincides with weight-0 Reynolds
      TensorT<Poly> res = lhs - mul(H, mul(H, h1 + oneh, alphaP), dh) -
                          scale(mul(H, alphaP, dh), Poly(weight));
      residuals.push_back(res);
      break;
    }
  }
  for (const auto& t : residuals)
    for (const auto& [k, p] : t.terms) sys.equations.push_back(p);
  return sys;
}

// ---------------------------------------------------------------------------
// Solver

namespace {

struct Branch {
  std::map<int, Poly> assign;
  std::vector<Poly> eqs;
};

void substitute_branch(Branch& br, int var, const Poly& value) {
  for (auto& [v, p] : br.assign) p = p.substitute(var, value);
  for (auto& e : br.eqs) e = e.substitute(var, value);
  br.assign[var] = value;
}

// linear in its variables: total degree <= 1 and not constant
bool is_linear(const Poly& p) {
  return !p.is_constant() && p.total_degree() == 1;
}

std::map<int, Rational> as_univariate(const Poly& p, int var) {
  std::map<int, Rational> out;
  for (const auto& [m, c] : p.terms) {
    int e = m.empty() ? 0 : m.begin()->second;
    out.emplace(e, c);
    (void)var;
  }
  return out;
}

}  // namespace

SolutionReport classify(OpKind kind, HopfPtr H, const Tensor& alpha,
                        int degree_cap, const Rational& weight) {
  SolutionReport rep;
  rep.system = residual_system(kind, *H, alpha, degree_cap, weight);
  size_t nvars = rep.system.unknowns.size();

  std::deque<Branch> work;
  work.push_back({{}, rep.system.equations});
  std::vector<SolutionComponent> components;
  bool undecided = false;
  int steps = 0;
  const int step_limit = 10000;

  while (!work.empty()) {
    if (++steps > step_limit) { undecided = true; break; }
    Branch br = std::move(work.front());
    work.pop_front();
    bool dead = false, progressed = true;
    while (progressed && !dead) {
      progressed = false;
      std::vector<Poly> kept;
      for (auto& e : br.eqs) {
        if (e.is_zero_poly()) continue;
        if (e.is_constant()) { dead = true; break; }
        kept.push_back(std::move(e));
      }
      if (dead) break;
      br.eqs = std::move(kept);
      // linear elimination
      for (size_t i = 0; i < br.eqs.size(); ++i) {
        if (!is_linear(br.eqs[i])) continue;
        const Poly eq = br.eqs[i];
        // pick the highest variable with nonzero coefficient
        int var = -1;
        Rational coef;
        for (const auto& [m, c] : eq.terms)
          if (!m.empty() && m.begin()->first >= var) {
            var = m.begin()->first;
            coef = c;
          }
        Poly rest;
        for (const auto& [m, c] : eq.terms)
          if (m.empty() || m.begin()->first != var) add_term(rest.terms, m, c);
        Poly value = scale_coeff(-rest, 1 / coef);
        br.eqs.erase(br.eqs.begin() + i);
        substitute_branch(br, var, value);
        progressed = true;
        break;
      }
    }
    if (dead) continue;
    if (br.eqs.empty()) {
      SolutionComponent comp;
      std::vector<bool> assigned(nvars, false);
      for (const auto& [v, p] : br.assign) {
        assigned[v] = true;
        if (p.is_constant())
          comp.fixed[v] = p.constant_value();
        else
          comp.dependent[v] = p;
      }
      for (size_t v = 0; v < nvars; ++v)
        if (!assigned[v]) comp.free_vars.push_back(static_cast<int>(v));
      components.push_back(std::move(comp));
      continue;
    }
    // univariate branching
    int chosen = -1, chosen_var = -1;
    for (size_t i = 0; i < br.eqs.size(); ++i) {
      auto vars = br.eqs[i].variables();
      if (vars.size() == 1) { chosen = static_cast<int>(i); chosen_var = vars[0]; break; }
    }
    if (chosen < 0) {
      // single-monomial equation c u_a^e u_b^f ... = 0: branch on each
      // variable being zero
      int mono = -1;
      for (size_t i = 0; i < br.eqs.size(); ++i)
        if (br.eqs[i].terms.size() == 1 && !br.eqs[i].is_constant()) {
          mono = static_cast<int>(i);
          break;
        }
      if (mono >= 0) {
        Poly eq = br.eqs[mono];
        br.eqs.erase(br.eqs.begin() + mono);
        for (const auto& [v, e] : eq.terms.begin()->first) {
          Branch next = br;
          substitute_branch(next, v, Poly(0));
          work.push_back(std::move(next));
        }
        continue;
      }
    }
    if (chosen < 0) { undecided = true; break; }
    Poly eq = br.eqs[chosen];
    br.eqs.erase(br.eqs.begin() + chosen);
    UnivariateRoots roots = rational_roots(as_univariate(eq, chosen_var));
    if (!roots.leftover.empty()) {
      if (br.eqs.empty() && br.assign.empty() && roots.roots.empty()) {
        // pure irrational component: report the factored polynomial
        SolutionComponent comp;
        comp.constraints.emplace_back(chosen_var, roots.leftover);
        for (size_t v = 0; v < nvars; ++v)
          if (static_cast<int>(v) != chosen_var)
            comp.free_vars.push_back(static_cast<int>(v));
        components.push_back(std::move(comp));
        rep.notes.push_back(
            "component with no rational points reported as a factored polynomial");
        continue;
      }
      undecided = true;
      rep.notes.push_back("univariate leftover without rational roots");
      break;
    }
    for (const Rational& r : roots.roots) {
      Branch next = br;
      substitute_branch(next, chosen_var, Poly(r));
      work.push_back(std::move(next));
    }
  }

  if (undecided) {
    rep.status = SolveStatus::Undecided;
    return rep;
  }
  // dedupe identical components
  std::sort(components.begin(), components.end(),
            [](const SolutionComponent& a, const SolutionComponent& b) {
              if (a.fixed != b.fixed) return a.fixed < b.fixed;
              if (a.free_vars != b.free_vars) return a.free_vars < b.free_vars;
              auto key = [](const SolutionComponent& c) {
                std::ostringstream os;
                for (const auto& [v, p] : c.dependent) os << v << ':' << p.str() << ';';
                return os.str();
              };
              return key(a) < key(b);
            });
  components.erase(
      std::unique(components.begin(), components.end(),
                  [](const SolutionComponent& a, const SolutionComponent& b) {
                    return a.fixed == b.fixed && a.free_vars == b.free_vars &&
                           a.dependent.size() == b.dependent.size() &&
                           std::equal(a.dependent.begin(), a.dependent.end(),
                                      b.dependent.begin());
                  }),
      components.end());
  rep.components = std::move(components);
  rep.status = SolveStatus::Solved;

  // Verification pass: sample every component and re-check exactly.
  Pseudoalgebra L = rank1_lie_algebra(H, alpha);
  std::vector<Rational> samples{1, -1, Rational(2, 3)};
  auto op_from = [&](const HElem& h) {
    return HLinearOp::diagonal(*H, {h});
  };
  auto point_of = [&](const SolutionComponent& comp,
                      const Rational& t) {
    std::map<int, Rational> values;
    for (int v : comp.free_vars) values[v] = t;
    for (const auto& [v, c] : comp.fixed) values[v] = c;
    for (const auto& [v, p] : comp.dependent) {
      Poly ev = p;
      for (int fv : comp.free_vars) ev = ev.substitute(fv, Poly(t));
      if (!ev.is_constant())
        throw std::logic_error("dependent coordinate failed to evaluate");
      values[v] = ev.constant_value();
    }
    HElem h;
    for (const auto& [v, c] : values) add_term(h, rep.system.unknowns[v], c);
    return h;
  };
  bool verified = true;
  std::vector<HElem> representatives;
  for (const auto& comp : rep.components) {
    if (!comp.constraints.empty()) {
      verified = false;  // irrational points cannot be sampled exactly
      continue;
    }
    bool has_freedom = !comp.free_vars.empty();
    std::vector<Rational> use = has_freedom ? samples : std::vector<Rational>{0};
    bool first = true;
    for (const Rational& t : use) {
      HElem h = point_of(comp, t);
      if (first) { representatives.push_back(h); first = false; }
      if (!check_operator(kind, op_from(h), L, weight).pass()) verified = false;
    }
  }
  rep.verified = verified;

  // Falsification sweep: adding any degree-1..d monomial with a unit
  // coefficient to a solution must break the identity.
  bool falsified = true;
  for (const HElem& h0 : representatives) {
    for (const BasisKey& k : rep.system.unknowns) {
      if (H->degree(k) < 1) continue;
      HElem h = h0;
      add_term(h, k, Rational(1));
      if (check_operator(kind, op_from(h), L, weight).pass()) {
        falsified = false;
        rep.notes.push_back("perturbation by " + to_string(*H, k) +
                            " unexpectedly still satisfies the identity");
      }
    }
  }
  rep.falsified_rest = falsified;
  return rep;
}

std::string SolutionReport::to_text(const HopfAlgebra& H) const {
  std::ostringstream os;
  os << "classification (" << kind_name(system.kind);
  if (system.kind == OpKind::Reynolds || system.kind == OpKind::RotaBaxter)
    os << ", weight " << to_string(system.weight);
  os << ", cap " << system.degree_cap << ")\n";
  if (status == SolveStatus::Undecided) {
    os << "  verdict: undecided (solver scope exceeded)\n";
    os << "  residual system: " << system.equations.size() << " equations in "
       << system.unknowns.size() << " unknowns\n";
    auto names = system.variable_names(H);
    for (const auto& e : system.equations) os << "    0 = " << e.str(names) << "\n";
    return os.str();
  }
  auto names = system.variable_names(H);
  os << "  solution set: " << components.size() << " component(s)\n";
  for (const auto& comp : components) {
    os << "    { P(e) = h e with h = ";
    bool any = false;
    for (const auto& [v, c] : comp.fixed) {
      if (is_zero(c)) continue;
      if (any) os << " + ";
      os << to_string(c) << "*" << to_string(H, system.unknowns[v]);
      any = true;
    }
    for (const auto& [v, p] : comp.dependent) {
      if (any) os << " + ";
      os << "(" << p.str(names) << ")*" << to_string(H, system.unknowns[v]);
      any = true;
    }
    for (int v : comp.free_vars) {
      if (any) os << " + ";
      os << names[v] << "*" << to_string(H, system.unknowns[v]);
      any = true;
    }
    if (!any) os << "0";
    if (!comp.free_vars.empty()) {
      os << " ; free: ";
      for (size_t i = 0; i < comp.free_vars.size(); ++i)
        os << (i ? ", " : "") << names[comp.free_vars[i]];
    }
    for (const auto& [v, factor] : comp.constraints) {
      os << " ; constraint on " << names[v] << ": 0 =";
      for (auto it = factor.rbegin(); it != factor.rend(); ++it)
        os << " + " << to_string(it->second) << "*" << names[v] << "^"
           << it->first;
    }
    os << " }\n";
  }
  os << "  verified: " << (verified ? "yes" : "NO") << "\n";
  os << "  falsification sweep: " << (falsified_rest ? "clean" : "FOUND GAP")
     << "\n";
  for (const auto& n : notes) os << "  note: " << n << "\n";
  return os.str();
}

}  // namespace psalg
