#include "psalg/hopf.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace psalg {

std::optional<Rational> parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  auto digits = [](const std::string& t, bool sign_ok) {
    if (t.empty()) return false;
    size_t i = 0;
    if (sign_ok && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (!digits(num, true) || !digits(den, false)) return std::nullopt;
  Rational q{mpz_class(num), mpz_class(den)};
  if (sgn(q.get_den()) == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rational(b);
}

std::map<int, Rational> LieAlgebraSpec::bracket_of(int i, int j) const {
  if (i == j) return {};
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = brackets.find({i, j});
  if (it == brackets.end()) return {};
  std::map<int, Rational> out = it->second;
  if (flip)
    for (auto& [k, c] : out) c = -c;
  return out;
}

GroupSpec GroupSpec::cyclic(int n) {
  GroupSpec g;
  g.order = n;
  g.mult.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.mult[i][j] = (i + j) % n;
  return g;
}

namespace {

void validate_lie(const LieAlgebraSpec& lie) {
  if (lie.dim <= 0) throw std::invalid_argument("Lie algebra dimension must be positive");
  for (const auto& [ij, rhs] : lie.brackets) {
    auto [i, j] = ij;
    if (!(0 <= i && i < j && j < lie.dim))
      throw std::invalid_argument("bracket indices must satisfy 0 <= i < j < dim");
    for (const auto& [k, c] : rhs)
      if (k < 0 || k >= lie.dim)
        throw std::invalid_argument("bracket target generator out of range");
  }
  // Jacobi: [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 on generator triples.
  auto brk = [&](const std::map<int, Rational>& x, int z) {
    std::map<int, Rational> out;
    for (const auto& [g, c] : x)
      for (const auto& [k, d] : lie.bracket_of(g, z)) add_term(out, k, c * d);
    return out;
  };
  for (int i = 0; i < lie.dim; ++i)
    for (int j = i + 1; j < lie.dim; ++j)
      for (int k = j + 1; k < lie.dim; ++k) {
        std::map<int, Rational> acc;
        for (const auto& [g, c] : brk(lie.bracket_of(i, j), k)) add_term(acc, g, c);
        for (const auto& [g, c] : brk(lie.bracket_of(j, k), i)) add_term(acc, g, c);
        for (const auto& [g, c] : brk(lie.bracket_of(k, i), j)) add_term(acc, g, c);
        if (!acc.empty())
          throw std::invalid_argument("structure constants violate the Jacobi identity");
      }
}

void validate_group(GroupSpec& grp) {
  int n = grp.order;
  if (n <= 0) throw std::invalid_argument("group order must be positive");
  if (static_cast<int>(grp.mult.size()) != n)
    throw std::invalid_argument("group table has wrong number of rows");
  for (const auto& row : grp.mult) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("group table has wrong row length");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("group table entry out of range");
  }
  grp.identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int i = 0; i < n; ++i)
      if (grp.mult[e][i] != i || grp.mult[i][e] != i) { ok = false; break; }
    if (ok) { grp.identity = e; break; }
  }
  if (grp.identity < 0) throw std::invalid_argument("group table has no identity");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (grp.mult[grp.mult[i][j]][k] != grp.mult[i][grp.mult[j][k]])
          throw std::invalid_argument("group table is not associative");
  grp.inverse.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (grp.mult[i][j] == grp.identity && grp.mult[j][i] == grp.identity) {
        grp.inverse[i] = j;
        break;
      }
    if (grp.inverse[i] < 0) throw std::invalid_argument("group element has no inverse");
  }
}

// Degree-1 generator combination (no constant term, nothing of higher degree).
std::map<int, Rational> as_primitive(const HElem& a, int dim) {
  std::map<int, Rational> out;
  for (const auto& [k, c] : a) {
    int total = 0, where = -1;
    for (int i = 0; i < static_cast<int>(k.exp.size()); ++i) {
      total += k.exp[i];
      if (k.exp[i] == 1) where = i;
    }
    if (total != 1 || k.grp != 0 || static_cast<int>(k.exp.size()) != dim)
      throw std::invalid_argument("smash action image must be a combination of generators");
    out[where] = c;
  }
  return out;
}

}  // namespace

HopfPtr HopfAlgebra::enveloping(LieAlgebraSpec lie) {
  validate_lie(lie);
  auto H = std::shared_ptr<HopfAlgebra>(new HopfAlgebra());
  H->kind_ = Kind::Enveloping;
  H->lie_ = std::move(lie);
  return H;
}

HopfPtr HopfAlgebra::group(GroupSpec grp) {
  validate_group(grp);
  auto H = std::shared_ptr<HopfAlgebra>(new HopfAlgebra());
  H->kind_ = Kind::Group;
  H->grp_ = std::move(grp);
  return H;
}

HopfPtr HopfAlgebra::smash(LieAlgebraSpec lie, GroupSpec grp,
                           std::vector<std::vector<HElem>> action) {
  validate_lie(lie);
  validate_group(grp);
  if (static_cast<int>(action.size()) != grp.order)
    throw std::invalid_argument("smash action needs one row per group element");
  // sigma_g on generators, as dim x dim rational matrices.
  std::vector<std::vector<std::map<int, Rational>>> sigma(grp.order);
  for (int g = 0; g < grp.order; ++g) {
    if (static_cast<int>(action[g].size()) != lie.dim)
      throw std::invalid_argument("smash action row needs one image per generator");
    sigma[g].resize(lie.dim);
    for (int i = 0; i < lie.dim; ++i) sigma[g][i] = as_primitive(action[g][i], lie.dim);
  }
  auto apply = [&](int g, const std::map<int, Rational>& v) {
    std::map<int, Rational> out;
    for (const auto& [i, c] : v)
      for (const auto& [j, d] : sigma[g][i]) add_term(out, j, c * d);
    return out;
  };
  for (int i = 0; i < lie.dim; ++i) {
    if (apply(grp.identity, {{i, Rational(1)}}) !=
        std::map<int, Rational>{{i, Rational(1)}})
      throw std::invalid_argument("smash action of the identity must be trivial");
  }
  for (int g = 0; g < grp.order; ++g)
    for (int h = 0; h < grp.order; ++h)
      for (int i = 0; i < lie.dim; ++i)
        if (apply(g, sigma[h][i]) != sigma[grp.mult[g][h]][i])
          throw std::invalid_argument("smash action is not a group homomorphism");
  // Bracket preservation: sigma_g([d_i,d_j]) = [sigma_g d_i, sigma_g d_j].
  auto brk = [&](const std::map<int, Rational>& x, const std::map<int, Rational>& y) {
    std::map<int, Rational> out;
    for (const auto& [i, c] : x)
      for (const auto& [j, d] : y)
        for (const auto& [k, e] : lie.bracket_of(i, j)) add_term(out, k, c * d * e);
    return out;
  };
  for (int g = 0; g < grp.order; ++g)
    for (int i = 0; i < lie.dim; ++i)
      for (int j = i + 1; j < lie.dim; ++j)
        if (apply(g, lie.bracket_of(i, j)) != brk(sigma[g][i], sigma[g][j]))
          throw std::invalid_argument("smash action does not preserve brackets");

  auto H = std::shared_ptr<HopfAlgebra>(new HopfAlgebra());
  H->kind_ = Kind::Smash;
  H->lie_ = std::move(lie);
  H->grp_ = std::move(grp);
  H->action_ = std::move(action);
  return H;
}

BasisKey HopfAlgebra::unit_key() const {
  BasisKey k;
  k.exp.assign(lie_.dim, 0);
  k.grp = has_group_part() ? grp_.identity : 0;
  return k;
}

bool HopfAlgebra::valid_key(const BasisKey& k) const {
  if (static_cast<int>(k.exp.size()) != lie_.dim) return false;
  for (int e : k.exp)
    if (e < 0) return false;
  if (has_group_part()) return k.grp >= 0 && k.grp < grp_.order;
  return k.grp == 0;
}

void HopfAlgebra::require_key(const BasisKey& k) const {
  if (!valid_key(k))
    throw std::invalid_argument("basis key does not belong to this Hopf algebra");
}

int HopfAlgebra::degree(const BasisKey& k) const {
  int d = 0;
  for (int e : k.exp) d += e;
  return d;
}

// Straighten a word rewriting d_j d_i = d_i d_j - [d_i, d_j] (j > i) until all
// words are weakly increasing; terminates since every step lowers the word
// length or the inversion count at fixed length.
HElem HopfAlgebra::straighten(std::map<std::vector<int>, Rational> words) const {
  HElem out;
  while (!words.empty()) {
    auto node = words.extract(words.begin());
    std::vector<int> w = node.key();
    Rational c = node.mapped();
    size_t pos = 0;
    bool sorted = true;
    for (size_t t = 0; t + 1 < w.size(); ++t)
      if (w[t] > w[t + 1]) { pos = t; sorted = false; break; }
    if (sorted) {
      for (const auto& [k, q] : collect_word(w, c)) add_term(out, k, q);
      continue;
    }
    int hi = w[pos], lo = w[pos + 1];
    std::vector<int> swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    add_term(words, swapped, c);
    for (const auto& [k, d] : lie_.bracket_of(lo, hi)) {
      std::vector<int> shorter;
      shorter.reserve(w.size() - 1);
      shorter.insert(shorter.end(), w.begin(), w.begin() + pos);
      shorter.push_back(k);
      shorter.insert(shorter.end(), w.begin() + pos + 2, w.end());
      add_term(words, shorter, -c * d);
    }
  }
  return out;
}

// Weakly increasing word -> divided-power monomial, picking up I!.
HElem HopfAlgebra::collect_word(const std::vector<int>& word,
                                const Rational& coef) const {
  BasisKey k;
  k.exp.assign(lie_.dim, 0);
  for (int letter : word) k.exp[letter] += 1;
  Rational c = coef;
  for (int e : k.exp) c *= factorial(e);
  return monomial(k, c);
}

namespace {
std::vector<int> word_of(const std::vector<int>& exps) {
  std::vector<int> w;
  for (int i = 0; i < static_cast<int>(exps.size()); ++i)
    for (int r = 0; r < exps[i]; ++r) w.push_back(i);
  return w;
}

Rational multi_factorial(const std::vector<int>& exps) {
  Rational f = 1;
  for (int e : exps) f *= factorial(e);
  return f;
}
}  // namespace

HElem HopfAlgebra::enveloping_mul(const BasisKey& a, const BasisKey& b) const {
  std::vector<int> w = word_of(a.exp);
  std::vector<int> wb = word_of(b.exp);
  w.insert(w.end(), wb.begin(), wb.end());
  Rational c = 1 / (multi_factorial(a.exp) * multi_factorial(b.exp));
  return straighten({{std::move(w), c}});
}

HElem HopfAlgebra::group_action(int g, const std::vector<int>& exps) const {
  // sigma_g(d^I) = prod_i sigma_g(d_i)^{i_k} / i_k!, computed in U(delta).
  BasisKey unit;
  unit.exp.assign(lie_.dim, 0);
  HElem acc = monomial(unit, 1);
  for (int i = 0; i < lie_.dim; ++i) {
    const HElem& img = action_[g][i];
    for (int r = 0; r < exps[i]; ++r) {
      HElem next;
      for (const auto& [ka, ca] : acc)
        for (const auto& [kb, cb] : img) {
          std::vector<int> w = word_of(ka.exp);
          std::vector<int> wb = word_of(kb.exp);
          w.insert(w.end(), wb.begin(), wb.end());
          for (const auto& [k, q] :
               straighten({{std::move(w), ca * cb / multi_factorial(ka.exp)}}))
            add_term(next, k, q);
        }
      acc = std::move(next);
    }
    if (exps[i] > 1) acc = scale(acc, 1 / factorial(exps[i]));
  }
  return acc;
}

HElem HopfAlgebra::smash_mul(const BasisKey& a, const BasisKey& b) const {
  // (d^I # g)(d^J # h) = d^I (g . d^J) # gh
  HElem moved = group_action(a.grp, b.exp);
  int gh = grp_.mult[a.grp][b.grp];
  HElem out;
  BasisKey left;
  left.exp = a.exp;
  for (const auto& [k, c] : moved) {
    std::vector<int> w = word_of(a.exp);
    std::vector<int> wk = word_of(k.exp);
    w.insert(w.end(), wk.begin(), wk.end());
    Rational coef = c / (multi_factorial(a.exp) * multi_factorial(k.exp));
    for (const auto& [mk0, mc] : straighten({{std::move(w), coef}})) {
      BasisKey mk = mk0;
      mk.grp = gh;
      add_term(out, mk, mc);
    }
  }
  return out;
}

const HElem& HopfAlgebra::basis_mul(const BasisKey& a, const BasisKey& b) const {
  require_key(a);
  require_key(b);
  std::scoped_lock lock(cache_mutex_);
  auto it = mul_cache_.find({a, b});
  if (it != mul_cache_.end()) return it->second;
  HElem out;
  switch (kind_) {
    case Kind::Enveloping:
      out = enveloping_mul(a, b);
      break;
    case Kind::Group: {
      BasisKey k;
      k.grp = grp_.mult[a.grp][b.grp];
      out = monomial(k, 1);
      break;
    }
    case Kind::Smash:
      out = smash_mul(a, b);
      break;
  }
  return mul_cache_.emplace(std::make_pair(a, b), std::move(out)).first->second;
}

std::vector<std::pair<BasisKey, BasisKey>> HopfAlgebra::basis_coproduct(
    const BasisKey& a) const {
  require_key(a);
  // Delta(d^I # g) = sum_{J+K=I} (d^J # g) (x) (d^K # g); every split has
  // coefficient 1 in the divided-power basis.
  std::vector<std::pair<BasisKey, BasisKey>> out;
  std::vector<int> j(a.exp.size(), 0);
  while (true) {
    BasisKey l, r;
    l.exp = j;
    l.grp = a.grp;
    r.exp.resize(a.exp.size());
    for (size_t i = 0; i < a.exp.size(); ++i) r.exp[i] = a.exp[i] - j[i];
    r.grp = a.grp;
    out.emplace_back(std::move(l), std::move(r));
    size_t i = 0;
    for (; i < j.size(); ++i) {
      if (j[i] < a.exp[i]) {
        ++j[i];
        break;
      }
      j[i] = 0;
    }
    if (i == j.size()) break;
  }
  return out;
}

const HElem& HopfAlgebra::basis_antipode(const BasisKey& a) const {
  require_key(a);
  std::scoped_lock lock(cache_mutex_);
  auto it = antipode_cache_.find(a);
  if (it != antipode_cache_.end()) return it->second;
  HElem out;
  switch (kind_) {
    case Kind::Group: {
      BasisKey k;
      k.grp = grp_.inverse[a.grp];
      out = monomial(k, 1);
      break;
    }
    case Kind::Enveloping: {
      // S reverses the word and negates each letter.
      std::vector<int> w = word_of(a.exp);
      std::reverse(w.begin(), w.end());
      Rational c = (w.size() % 2 == 0 ? 1 : -1) / multi_factorial(a.exp);
      out = straighten({{std::move(w), c}});
      break;
    }
    case Kind::Smash: {
      // S(d^I # g) = (1 # g^{-1})(S(d^I) # 1) = sigma_{g^{-1}}(S(d^I)) # g^{-1}
      std::vector<int> w = word_of(a.exp);
      std::reverse(w.begin(), w.end());
      Rational c = (w.size() % 2 == 0 ? 1 : -1) / multi_factorial(a.exp);
      HElem senv = straighten({{std::move(w), c}});
      int ginv = grp_.inverse[a.grp];
      for (const auto& [k, q] : senv)
        for (const auto& [mk0, mc] : group_action(ginv, k.exp)) {
          BasisKey mk = mk0;
          mk.grp = ginv;
          add_term(out, mk, q * mc);
        }
      break;
    }
  }
  return antipode_cache_.emplace(a, std::move(out)).first->second;
}

Rational HopfAlgebra::basis_counit(const BasisKey& a) const {
  require_key(a);
  for (int e : a.exp)
    if (e != 0) return 0;
  return 1;  // every group element is group-like, eps(g) = 1
}

std::vector<BasisKey> HopfAlgebra::basis_up_to(int degree_cap) const {
  std::vector<BasisKey> out;
  std::vector<std::vector<int>> exps;
  std::vector<int> cur(lie_.dim, 0);
  // multi-indices with |I| <= degree_cap, in graded order
  for (int total = 0; total <= (lie_.dim > 0 ? degree_cap : 0); ++total) {
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == lie_.dim) {
        if (left == 0) exps.push_back(cur);
        return;
      }
      for (int e = 0; e <= left; ++e) {
        cur[pos] = e;
        rec(pos + 1, left - e);
      }
      cur[pos] = 0;
    };
    if (lie_.dim > 0)
      rec(0, total);
    else if (total == 0)
      exps.push_back({});
  }
  int gn = has_group_part() ? grp_.order : 1;
  for (const auto& e : exps)
    for (int g = 0; g < gn; ++g) {
      BasisKey k;
      k.exp = e;
      k.grp = has_group_part() ? g : 0;
      out.push_back(std::move(k));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<HElem> HopfAlgebra::left_integral() const {
  if (kind_ != Kind::Group) return std::nullopt;
  HElem t;
  for (int g = 0; g < grp_.order; ++g) {
    BasisKey k;
    k.grp = g;
    t.emplace(std::move(k), 1);
  }
  for (int g = 0; g < grp_.order; ++g) {
    BasisKey k;
    k.grp = g;
    HElem ht = mul(*this, monomial(k, 1), t);
    if (ht != scale(t, basis_counit(k)))
      throw std::logic_error("group integral failed its defining identity");
  }
  return t;
}

HElem generator_elem(const HopfAlgebra& H, int i) {
  if (i < 0 || i >= H.lie_dim())
    throw std::invalid_argument("generator index out of range");
  BasisKey k;
  k.exp.assign(H.lie_dim(), 0);
  k.exp[i] = 1;
  k.grp = H.has_group_part() ? H.grp().identity : 0;
  return monomial(k, 1);
}

std::string to_string(const HopfAlgebra& H, const BasisKey& k) {
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < static_cast<int>(k.exp.size()); ++i) {
    if (k.exp[i] == 0) continue;
    if (any) os << ' ';
    os << 'd' << (i + 1);
    if (k.exp[i] > 1) os << '^' << k.exp[i];
    any = true;
  }
  if (H.has_group_part() && k.grp != H.grp().identity) {
    if (any) os << ' ';
    os << "g:g" << k.grp;
    any = true;
  }
  if (!any) os << '1';
  return os.str();
}

std::string to_string(const HopfAlgebra& H, const HElem& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : a) {
    Rational q = c;
    if (first) {
      if (sgn(q) < 0) { os << '-'; q = -q; }
    } else {
      os << (sgn(q) < 0 ? " - " : " + ");
      if (sgn(q) < 0) q = -q;
    }
    std::string mono = to_string(H, k);
    if (q != 1 || mono == "1") {
      os << to_string(q);
      if (mono != "1") os << '*';
    }
    if (mono != "1") os << mono;
    first = false;
  }
  return os.str();
}

}  // namespace psalg
