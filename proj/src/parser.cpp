#include "psalg/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace psalg {

namespace {

struct Token {
  enum class Type { Ident, Int, Rat, Sym, Arrow, TensorSep, End } type;
  std::string text;
  int col = 0;
};

// One line of the definition format, tokenized. Rationals must be written
// without spaces ("2/3"); "(x)" is the tensor-slot separator.
std::vector<Token> lex_line(const std::string& line, int lineno,
                            std::vector<ParseError>& errors) {
  std::vector<Token> out;
  size_t i = 0;
  auto fail = [&](const std::string& msg, size_t col) {
    errors.push_back({lineno, static_cast<int>(col + 1), msg});
  };
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    int col = static_cast<int>(i + 1);
    if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Token::Type::Arrow, "->", col});
      i += 2;
      continue;
    }
    if (c == '(' && i + 2 < line.size() && line[i + 1] == 'x' && line[i + 2] == ')') {
      out.push_back({Token::Type::TensorSep, "(x)", col});
      i += 3;
      continue;
    }
    if (isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < line.size() && isdigit(static_cast<unsigned char>(line[j]))) ++j;
      if (j < line.size() && line[j] == '/' && j + 1 < line.size() &&
          isdigit(static_cast<unsigned char>(line[j + 1]))) {
        ++j;
        while (j < line.size() && isdigit(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back({Token::Type::Rat, line.substr(i, j - i), col});
      } else {
        out.push_back({Token::Type::Int, line.substr(i, j - i), col});
      }
      i = j;
      continue;
    }
    if (isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '@') {
      size_t j = i + 1;
      while (j < line.size() &&
             (isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
        ++j;
      out.push_back({Token::Type::Ident, line.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (std::string("{}()^+-*:=,").find(c) != std::string::npos) {
      out.push_back({Token::Type::Sym, std::string(1, c), col});
      ++i;
      continue;
    }
    fail(std::string("unexpected character '") + c + "'", i);
    ++i;
  }
  out.push_back({Token::Type::End, "", static_cast<int>(line.size() + 1)});
  return out;
}

struct Cursor {
  const std::vector<Token>* toks;
  size_t pos = 0;
  int line = 0;

  const Token& peek() const { return (*toks)[pos]; }
  const Token& next() { return (*toks)[pos++]; }
  bool at_end() const { return peek().type == Token::Type::End; }
  bool accept_sym(const std::string& s) {
    if (peek().type == Token::Type::Sym && peek().text == s) { ++pos; return true; }
    return false;
  }
  bool accept_ident(const std::string& s) {
    if (peek().type == Token::Type::Ident && peek().text == s) { ++pos; return true; }
    return false;
  }
};

struct LineError {
  std::string message;
  int col;
};

[[noreturn]] void bail(const Cursor& cur, const std::string& msg) {
  throw LineError{msg, cur.peek().col};
}

Rational expect_rational(Cursor& cur) {
  bool neg = cur.accept_sym("-");
  const Token& t = cur.peek();
  if (t.type != Token::Type::Int && t.type != Token::Type::Rat)
    bail(cur, "expected a rational literal");
  auto q = parse_rational(cur.next().text);
  if (!q) bail(cur, "malformed rational literal");
  return neg ? Rational(-*q) : *q;
}

int expect_int(Cursor& cur) {
  bool neg = cur.accept_sym("-");
  if (cur.peek().type != Token::Type::Int) bail(cur, "expected an integer");
  int v = std::stoi(cur.next().text);
  return neg ? -v : v;
}

std::string expect_ident(Cursor& cur, const std::string& what) {
  if (cur.peek().type != Token::Type::Ident) bail(cur, "expected " + what);
  return cur.next().text;
}

// dK / eK index helpers; returns -1 when the identifier is not of the form
std::optional<int> indexed_ident(const std::string& s, char prefix) {
  if (s.size() < 2 || s[0] != prefix) return std::nullopt;
  for (size_t i = 1; i < s.size(); ++i)
    if (!isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
  return std::stoi(s.substr(1));
}

// H-element grammar: sum of terms; a term is a juxtaposed product of
// rationals, dK(^n), g:<name>, and parenthesized sub-sums; '*' is an
// optional multiplication sign.
HElem parse_helem(Cursor& cur, const HopfAlgebra& H);

std::optional<HElem> parse_hfactor(Cursor& cur, const HopfAlgebra& H) {
  const Token& t = cur.peek();
  if (t.type == Token::Type::Int || t.type == Token::Type::Rat) {
    auto q = parse_rational(cur.next().text);
    if (!q) bail(cur, "malformed rational literal");
    return unit_elem(H, *q);
  }
  if (t.type == Token::Type::Sym && t.text == "(") {
    cur.next();
    HElem inner = parse_helem(cur, H);
    if (!cur.accept_sym(")")) bail(cur, "expected ')'");
    return inner;
  }
  if (t.type == Token::Type::Ident) {
    if (t.text == "g") {
      size_t save = cur.pos;
      cur.next();
      if (!cur.accept_sym(":")) { cur.pos = save; return std::nullopt; }
      std::string name = expect_ident(cur, "a group element name g:<gK>");
      auto idx = indexed_ident(name, 'g');
      if (!idx || !H.has_group_part() || *idx < 0 || *idx >= H.group_order())
        bail(cur, "unknown group element '" + name + "'");
      BasisKey k;
      k.exp.assign(H.lie_dim(), 0);
      k.grp = *idx;
      return monomial(k);
    }
    if (auto d = indexed_ident(t.text, 'd')) {
      if (*d < 1 || *d > H.lie_dim())
        bail(cur, "unknown generator '" + t.text + "'");
      cur.next();
      int e = 1;
      if (cur.accept_sym("^")) e = expect_int(cur);
      if (e < 0) bail(cur, "negative exponents are not allowed");
      BasisKey k;
      k.exp.assign(H.lie_dim(), 0);
      k.exp[*d - 1] = e;
      k.grp = H.has_group_part() ? H.grp().identity : 0;
      return monomial(k);
    }
  }
  return std::nullopt;
}

HElem parse_hterm(Cursor& cur, const HopfAlgebra& H) {
  std::optional<HElem> acc;
  while (true) {
    if (cur.accept_sym("*")) continue;
    auto f = parse_hfactor(cur, H);
    if (!f) break;
    acc = acc ? mul(H, *acc, *f) : *f;
  }
  if (!acc) bail(cur, "expected an H-element term");
  return *acc;
}

HElem parse_helem(Cursor& cur, const HopfAlgebra& H) {
  bool neg = cur.accept_sym("-");
  if (!neg) cur.accept_sym("+");
  HElem acc = parse_hterm(cur, H);
  if (neg) acc = scale(acc, -1);
  while (true) {
    if (cur.accept_sym("+")) {
      acc = add(acc, parse_hterm(cur, H));
    } else if (cur.accept_sym("-")) {
      acc = sub(acc, parse_hterm(cur, H));
    } else {
      break;
    }
  }
  return acc;
}

// Tensor literal: sum of `hterm (x) hterm`; a term without a separator is a
// scalar multiple of 1 (x) 1.
Tensor parse_tensor(Cursor& cur, const HopfAlgebra& H) {
  Tensor acc{2, {}};
  bool first = true;
  while (true) {
    bool neg = false;
    if (cur.accept_sym("-")) neg = true;
    else if (cur.accept_sym("+")) { }
    else if (!first) break;
    HElem left = parse_hterm(cur, H);
    Tensor term{2, {}};
    if (cur.peek().type == Token::Type::TensorSep) {
      cur.next();
      HElem right = parse_hterm(cur, H);
      term = tensor_of(left, right);
    } else {
      term = tensor_of(left, unit_elem(H));
    }
    if (neg) term = scale(term, Rational(-1));
    acc = acc + term;
    first = false;
    if (cur.at_end() || (cur.peek().type == Token::Type::Sym &&
                         cur.peek().text != "+" && cur.peek().text != "-"))
      break;
  }
  return acc;
}

// Operator row: sum of `<hterm> eK` entries, or 0.
std::vector<HElem> parse_op_row(Cursor& cur, const HopfAlgebra& H, int rank) {
  std::vector<HElem> row(rank);
  if (cur.peek().type == Token::Type::Int && cur.peek().text == "0" &&
      (*cur.toks)[cur.pos + 1].type == Token::Type::End) {
    cur.next();
    return row;
  }
  bool first = true;
  while (true) {
    bool neg = false;
    if (cur.accept_sym("-")) neg = true;
    else if (cur.accept_sym("+")) { }
    else if (!first) break;
    // collect h-factors until the eK token
    std::optional<HElem> coef;
    std::optional<int> target;
    while (true) {
      if (cur.accept_sym("*")) continue;
      if (cur.peek().type == Token::Type::Ident) {
        if (auto e = indexed_ident(cur.peek().text, 'e')) {
          cur.next();
          target = *e;
          break;
        }
      }
      auto f = parse_hfactor(cur, H);
      if (!f) break;
      coef = coef ? mul(H, *coef, *f) : *f;
    }
    if (!target) bail(cur, "expected a basis vector eK");
    if (*target < 1 || *target > rank)
      bail(cur, "basis vector e" + std::to_string(*target) +
                    " out of range for rank " + std::to_string(rank));
    HElem c = coef ? *coef : unit_elem(H);
    if (neg) c = scale(c, -1);
    row[*target - 1] = add(row[*target - 1], c);
    first = false;
  }
  return row;
}

struct HopfDraft {
  std::string kind;
  int dim = 0;
  int order = 0;
  std::map<std::pair<int, int>, std::map<int, Rational>> brackets;
  std::vector<int> table_flat;
  bool cyclic = false;
  // action rows parsed as raw token vectors, resolved once H's lie part exists
  std::vector<std::tuple<int, int, std::vector<Token>, int>> actions;
};

}  // namespace

const OperatorDef* DefinitionFile::find_operator(const std::string& name) const {
  for (const auto& op : operators)
    if (op.name == name) return &op;
  return nullptr;
}

DualMap DefinitionFile::make_xi() const {
  if (xi_spec == "zero") return DualMap::zero();
  if (xi_spec == "identity") return DualMap::identity();
  if (xi_spec == "leftmult") return DualMap::left_mult(xi_elem);
  // integral
  auto t = hopf->left_integral();
  if (!t)
    throw std::invalid_argument(
        "xi integral: this Hopf algebra has no nonzero left integral");
  return DualMap::left_mult(*t);
}

std::string ParseResult::error_text() const {
  std::ostringstream os;
  for (const auto& e : errors)
    os << "line " << e.line << ", col " << e.col << ": " << e.message << "\n";
  return os.str();
}

std::optional<OpKind> kind_from_name(const std::string& name) {
  if (name == "averaging") return OpKind::Averaging;
  if (name == "nijenhuis") return OpKind::Nijenhuis;
  if (name == "reynolds") return OpKind::Reynolds;
  if (name == "rota_baxter" || name == "rota-baxter") return OpKind::RotaBaxter;
  return std::nullopt;
}

ParseResult parse_definition(const std::string& text) {
  ParseResult result;
  std::vector<std::string> lines;
  {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
  }

  DefinitionFile def;
  HopfDraft hopf_draft;
  bool have_hopf_block = false;

  struct PendingProduct {
    int i, j, k, line;
    std::vector<Token> toks;
  };
  struct PendingOp {
    std::string name;
    int line = 0;
    std::vector<std::pair<OpKind, Rational>> kinds;
    std::vector<std::pair<int, std::vector<Token>>> rows;  // (target, tokens)
  };
  int alg_rank = 0;
  Flavor alg_flavor = Flavor::Unchecked;
  bool have_alg = false;
  std::vector<PendingProduct> products;
  std::vector<PendingOp> ops;
  std::vector<std::pair<int, std::vector<Token>>> xi_tokens;  // deferred leftmult

  std::string block;       // current block name, "" at top level
  std::string block_name;  // operator name
  auto err = [&](int line, int col, const std::string& msg) {
    result.errors.push_back({line, col, msg});
  };

  for (size_t li = 0; li < lines.size(); ++li) {
    int lineno = static_cast<int>(li + 1);
    std::vector<Token> toks = lex_line(lines[li], lineno, result.errors);
    if (toks.size() == 1) continue;  // blank/comment
    Cursor cur{&toks, 0, lineno};
    try {
      if (block.empty()) {
        std::string head = expect_ident(cur, "a section name");
        if (head == "hopf" || head == "pseudoalgebra" || head == "dual" ||
            head == "tasks") {
          if (!cur.accept_sym("{")) bail(cur, "expected '{' after section name");
          block = head;
          if (head == "hopf") have_hopf_block = true;
          if (head == "pseudoalgebra") have_alg = true;
        } else if (head == "operator") {
          block_name = expect_ident(cur, "an operator name");
          if (!cur.accept_sym("{")) bail(cur, "expected '{' after operator name");
          block = "operator";
          ops.push_back({block_name, lineno, {}, {}});
        } else {
          bail(cur, "unknown section '" + head + "'");
        }
        continue;
      }
      if (cur.accept_sym("}")) { block.clear(); continue; }

      if (block == "hopf") {
        std::string key = expect_ident(cur, "a hopf directive");
        if (key == "kind") {
          hopf_draft.kind = expect_ident(cur, "enveloping|group|smash");
        } else if (key == "dim") {
          hopf_draft.dim = expect_int(cur);
        } else if (key == "order") {
          hopf_draft.order = expect_int(cur);
        } else if (key == "cyclic") {
          hopf_draft.order = expect_int(cur);
          hopf_draft.cyclic = true;
        } else if (key == "bracket") {
          int i = expect_int(cur), j = expect_int(cur);
          if (!cur.accept_sym("=")) bail(cur, "expected '='");
          if (i < 1 || j < 1 || i >= j)
            bail(cur, "bracket indices must satisfy 1 <= i < j");
          std::map<int, Rational> rhs;
          // degree-1 combination c1 dK1 + c2 dK2 ...
          bool first = true;
          while (!cur.at_end()) {
            bool neg = cur.accept_sym("-");
            if (!neg && !cur.accept_sym("+") && !first) bail(cur, "expected '+' or '-'");
            Rational c = 1;
            if (cur.peek().type == Token::Type::Int ||
                cur.peek().type == Token::Type::Rat) {
              auto q = parse_rational(cur.next().text);
              if (!q) bail(cur, "malformed rational");
              c = *q;
              cur.accept_sym("*");
            }
            auto d = indexed_ident(expect_ident(cur, "a generator dK"), 'd');
            if (!d) bail(cur, "expected a generator dK");
            add_term(rhs, *d - 1, neg ? Rational(-c) : c);
            first = false;
          }
          hopf_draft.brackets[{i - 1, j - 1}] = rhs;
        } else if (key == "table") {
          while (!cur.at_end()) hopf_draft.table_flat.push_back(expect_int(cur));
        } else if (key == "action") {
          std::string g = expect_ident(cur, "a group element gK");
          auto gi = indexed_ident(g, 'g');
          std::string d = expect_ident(cur, "a generator dK");
          auto di = indexed_ident(d, 'd');
          if (!gi || !di) bail(cur, "expected 'action gK dK = <element>'");
          if (!cur.accept_sym("=")) bail(cur, "expected '='");
          std::vector<Token> rest(toks.begin() + cur.pos, toks.end());
          hopf_draft.actions.emplace_back(*gi, *di - 1, rest, lineno);
          cur.pos = toks.size() - 1;
        } else {
          bail(cur, "unknown hopf directive '" + key + "'");
        }
      } else if (block == "pseudoalgebra") {
        std::string key = expect_ident(cur, "a pseudoalgebra directive");
        if (key == "rank") {
          alg_rank = expect_int(cur);
          if (alg_rank < 1) bail(cur, "rank must be positive");
        } else if (key == "flavor") {
          std::string f = expect_ident(cur, "lie|associative|unchecked");
          if (f == "lie") alg_flavor = Flavor::Lie;
          else if (f == "associative") alg_flavor = Flavor::Associative;
          else if (f == "unchecked") alg_flavor = Flavor::Unchecked;
          else bail(cur, "unknown flavor '" + f + "'");
        } else if (key == "product") {
          auto ei = indexed_ident(expect_ident(cur, "eI"), 'e');
          auto ej = indexed_ident(expect_ident(cur, "eJ"), 'e');
          if (!cur.peek().text.empty() && cur.peek().type == Token::Type::Arrow)
            cur.next();
          else
            bail(cur, "expected '->'");
          auto ek = indexed_ident(expect_ident(cur, "eK"), 'e');
          if (!ei || !ej || !ek) bail(cur, "expected 'product eI eJ -> eK : <tensor>'");
          if (!cur.accept_sym(":")) bail(cur, "expected ':'");
          std::vector<Token> rest(toks.begin() + cur.pos, toks.end());
          products.push_back({*ei, *ej, *ek, lineno, rest});
          cur.pos = toks.size() - 1;
        } else {
          bail(cur, "unknown pseudoalgebra directive '" + key + "'");
        }
      } else if (block == "operator") {
        std::string key = expect_ident(cur, "an operator directive");
        if (key == "kind") {
          std::string k = expect_ident(cur, "an operator kind");
          auto kind = kind_from_name(k);
          if (!kind) bail(cur, "unknown operator kind '" + k + "'");
          Rational w = 0;
          if (cur.accept_ident("weight")) w = expect_rational(cur);
          ops.back().kinds.emplace_back(*kind, w);
        } else if (key == "map") {
          auto e = indexed_ident(expect_ident(cur, "eK"), 'e');
          if (!e) bail(cur, "expected 'map eK -> <row>'");
          if (cur.peek().type != Token::Type::Arrow) bail(cur, "expected '->'");
          cur.next();
          std::vector<Token> rest(toks.begin() + cur.pos, toks.end());
          ops.back().rows.emplace_back(*e, rest);
          cur.pos = toks.size() - 1;
        } else {
          bail(cur, "unknown operator directive '" + key + "'");
        }
      } else if (block == "dual") {
        std::string key = expect_ident(cur, "a dual directive");
        if (key == "truncation") {
          def.dual_truncation = expect_int(cur);
        } else if (key == "xi") {
          std::string spec = expect_ident(cur, "integral|zero|identity|leftmult");
          if (spec == "leftmult") {
            std::vector<Token> rest(toks.begin() + cur.pos, toks.end());
            xi_tokens.emplace_back(lineno, rest);
            cur.pos = toks.size() - 1;
          } else if (spec != "integral" && spec != "zero" && spec != "identity") {
            bail(cur, "unknown xi spec '" + spec + "'");
          }
          def.xi_spec = spec;
        } else {
          bail(cur, "unknown dual directive '" + key + "'");
        }
      } else if (block == "tasks") {
        TaskDef t;
        t.line = lineno;
        t.verb = expect_ident(cur, "a task verb");
        while (!cur.at_end()) {
          const Token& tok = cur.next();
          t.args.push_back(tok.text);
        }
        def.tasks.push_back(std::move(t));
      }
      if (!cur.at_end() && !(cur.peek().type == Token::Type::End))
        bail(cur, "trailing tokens");
    } catch (const LineError& e) {
      err(lineno, e.col, (block.empty() ? "" : block + ": ") + e.message);
    }
  }
  if (!block.empty())
    err(static_cast<int>(lines.size()), 1, "unterminated section '" + block + "'");

  if (!have_hopf_block) {
    err(1, 1, "missing hopf section");
    return result;
  }
  if (!result.errors.empty()) return result;

  // Build the Hopf algebra.
  try {
    auto build_group = [&]() {
      if (hopf_draft.cyclic) return GroupSpec::cyclic(hopf_draft.order);
      GroupSpec g;
      g.order = hopf_draft.order;
      if (static_cast<int>(hopf_draft.table_flat.size()) !=
          hopf_draft.order * hopf_draft.order)
        throw std::invalid_argument("group table needs order^2 entries");
      g.mult.assign(g.order, std::vector<int>(g.order));
      for (int i = 0; i < g.order; ++i)
        for (int j = 0; j < g.order; ++j)
          g.mult[i][j] = hopf_draft.table_flat[i * g.order + j];
      return g;
    };
    if (hopf_draft.kind == "enveloping") {
      def.hopf = HopfAlgebra::enveloping({hopf_draft.dim, hopf_draft.brackets});
    } else if (hopf_draft.kind == "group") {
      def.hopf = HopfAlgebra::group(build_group());
    } else if (hopf_draft.kind == "smash") {
      LieAlgebraSpec lie{hopf_draft.dim, hopf_draft.brackets};
      GroupSpec grp = build_group();
      // a scratch enveloping algebra to parse action images against
      HopfPtr env = HopfAlgebra::enveloping(lie);
      std::vector<std::vector<HElem>> action(
          grp.order, std::vector<HElem>(lie.dim));
      // default to the trivial action; explicit lines override
      for (int g = 0; g < grp.order; ++g)
        for (int i = 0; i < lie.dim; ++i) action[g][i] = generator_elem(*env, i);
      for (const auto& [g, d, rest, lineno] : hopf_draft.actions) {
        Cursor cur{&rest, 0, lineno};
        try {
          action.at(g).at(d) = parse_helem(cur, *env);
        } catch (const LineError& e) {
          err(lineno, e.col, "hopf action: " + e.message);
        }
      }
      if (!result.errors.empty()) return result;
      def.hopf = HopfAlgebra::smash(lie, grp, action);
    } else {
      err(1, 1, "hopf: kind must be enveloping, group or smash");
      return result;
    }
  } catch (const std::exception& e) {
    err(1, 1, std::string("hopf: ") + e.what());
    return result;
  }
  const HopfAlgebra& H = *def.hopf;

  if (have_alg) {
    if (alg_rank < 1) {
      err(1, 1, "pseudoalgebra: missing rank");
      return result;
    }
    Pseudoalgebra A;
    A.hopf = def.hopf;
    A.table.rank = alg_rank;
    A.flavor = alg_flavor;
    for (const auto& p : products) {
      if (p.i < 1 || p.i > alg_rank || p.j < 1 || p.j > alg_rank || p.k < 1 ||
          p.k > alg_rank) {
        err(p.line, 1, "pseudoalgebra: basis index out of range for rank " +
                           std::to_string(alg_rank));
        continue;
      }
      Cursor cur{&p.toks, 0, p.line};
      try {
        Tensor t = parse_tensor(cur, H);
        if (!cur.at_end()) bail(cur, "trailing tokens in tensor literal");
        A.table.set(p.i - 1, p.j - 1, p.k - 1,
                    A.table.find(p.i - 1, p.j - 1, p.k - 1)
                        ? *A.table.find(p.i - 1, p.j - 1, p.k - 1) + t
                        : t);
      } catch (const LineError& e) {
        err(p.line, e.col, "pseudoalgebra: " + e.message);
      }
    }
    def.algebra = std::move(A);
  }

  for (const auto& pop : ops) {
    if (!def.algebra) {
      err(pop.line, 1, "operator " + pop.name + ": needs a pseudoalgebra section");
      continue;
    }
    OperatorDef od;
    od.name = pop.name;
    od.kinds = pop.kinds;
    od.op = HLinearOp::zero(alg_rank);
    for (const auto& [target, rest] : pop.rows) {
      if (target < 1 || target > alg_rank) {
        err(pop.line, 1, "operator " + pop.name + ": basis index e" +
                             std::to_string(target) + " out of range");
        continue;
      }
      Cursor cur{&rest, 0, pop.line};
      try {
        od.op.m[target - 1] = parse_op_row(cur, H, alg_rank);
        if (!cur.at_end()) bail(cur, "trailing tokens in operator row");
      } catch (const LineError& e) {
        err(pop.line, e.col, "operator " + pop.name + ": " + e.message);
      }
    }
    def.operators.push_back(std::move(od));
  }

  for (const auto& [lineno, rest] : xi_tokens) {
    Cursor cur{&rest, 0, lineno};
    try {
      def.xi_elem = parse_helem(cur, H);
    } catch (const LineError& e) {
      err(lineno, e.col, std::string("dual: ") + e.message);
    }
  }

  // Task validation: verbs and operator references must resolve.
  for (const auto& t : def.tasks) {
    if (t.verb != "check" && t.verb != "derive" && t.verb != "classify" &&
        t.verb != "annihilate" && t.verb != "conformal") {
      err(t.line, 1, "tasks: unknown verb '" + t.verb + "'");
      continue;
    }
    for (const auto& a : t.args)
      if (!a.empty() && a[0] == '@' && !def.find_operator(a.substr(1)))
        err(t.line, 1, "tasks: unknown operator '" + a.substr(1) + "'");
  }

  if (!result.errors.empty()) return result;
  result.file = std::move(def);
  return result;
}

ParseResult parse_definition_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    ParseResult r;
    r.errors.push_back({0, 0, "cannot open '" + path + "'"});
    return r;
  }
  std::ostringstream os;
  os << in.rdbuf();
  return parse_definition(os.str());
}

namespace {

std::string tensor_literal(const HopfAlgebra& H, const Tensor& t) {
  if (t.terms.empty()) return "0 (x) 0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t.terms) {
    Rational q = c;
    if (first) {
      if (sgn(q) < 0) { os << "- "; q = -q; }
    } else {
      os << (sgn(q) < 0 ? " - " : " + ");
      if (sgn(q) < 0) q = -q;
    }
    if (q != 1) os << to_string(q) << " * ";
    os << to_string(H, k[0]) << " (x) " << to_string(H, k[1]);
    first = false;
  }
  return os.str();
}

}  // namespace

std::string emit_definition(const DefinitionFile& def) {
  const HopfAlgebra& H = *def.hopf;
  std::ostringstream os;
  os << "hopf {\n";
  switch (H.kind()) {
    case HopfAlgebra::Kind::Enveloping: os << "  kind enveloping\n"; break;
    case HopfAlgebra::Kind::Group: os << "  kind group\n"; break;
    case HopfAlgebra::Kind::Smash: os << "  kind smash\n"; break;
  }
  if (H.has_lie_part()) {
    os << "  dim " << H.lie_dim() << "\n";
    for (const auto& [ij, rhs] : H.lie().brackets) {
      os << "  bracket " << (ij.first + 1) << " " << (ij.second + 1) << " =";
      bool first = true;
      for (const auto& [k, c] : rhs) {
        Rational q = c;
        os << (first ? (sgn(q) < 0 ? " -" : " ") : (sgn(q) < 0 ? " - " : " + "));
        if (sgn(q) < 0) q = -q;
        if (q != 1) os << to_string(q) << "*";
        os << "d" << (k + 1);
        first = false;
      }
      os << "\n";
    }
  }
  if (H.has_group_part()) {
    os << "  order " << H.group_order() << "\n  table";
    for (const auto& row : H.grp().mult)
      for (int v : row) os << " " << v;
    os << "\n";
  }
  if (H.kind() == HopfAlgebra::Kind::Smash) {
    for (int g = 0; g < H.group_order(); ++g)
      for (int i = 0; i < H.lie_dim(); ++i) {
        HElem img = mul(H, monomial(BasisKey{std::vector<int>(H.lie_dim(), 0), g}),
                        generator_elem(H, i));
        // strip the group part back off for the action image
        HElem plain;
        for (const auto& [k, c] : img) {
          BasisKey kk = k;
          kk.grp = H.grp().identity;
          add_term(plain, kk, c);
        }
        os << "  action g" << g << " d" << (i + 1) << " = " << to_string(H, plain)
           << "\n";
      }
  }
  os << "}\n";
  if (def.algebra) {
    const Pseudoalgebra& A = *def.algebra;
    os << "\npseudoalgebra {\n  rank " << A.rank() << "\n  flavor "
       << (A.flavor == Flavor::Lie
               ? "lie"
               : A.flavor == Flavor::Associative ? "associative" : "unchecked")
       << "\n";
    for (const auto& [key, t] : A.table.entries) {
      auto [i, j, k] = key;
      os << "  product e" << (i + 1) << " e" << (j + 1) << " -> e" << (k + 1)
         << " : " << tensor_literal(H, t) << "\n";
    }
    os << "}\n";
  }
  for (const auto& op : def.operators) {
    os << "\noperator " << op.name << " {\n";
    for (const auto& [kind, w] : op.kinds) {
      os << "  kind " << (kind == OpKind::RotaBaxter ? "rota_baxter" : kind_name(kind));
      if (kind == OpKind::Reynolds || kind == OpKind::RotaBaxter)
        os << " weight " << to_string(w);
      os << "\n";
    }
    for (int i = 0; i < op.op.rank; ++i) {
      os << "  map e" << (i + 1) << " -> ";
      bool any = false;
      for (int t = 0; t < op.op.rank; ++t) {
        if (op.op.m[i][t].empty()) continue;
        if (any) os << " + ";
        os << "(" << to_string(H, op.op.m[i][t]) << ") e" << (t + 1);
        any = true;
      }
      if (!any) os << "0";
      os << "\n";
    }
    os << "}\n";
  }
  os << "\ndual {\n  truncation " << def.dual_truncation << "\n  xi "
     << def.xi_spec;
  if (def.xi_spec == "leftmult") os << " " << to_string(H, def.xi_elem);
  os << "\n}\n";
  if (!def.tasks.empty()) {
    os << "\ntasks {\n";
    for (const auto& t : def.tasks) {
      os << "  " << t.verb;
      for (const auto& a : t.args) os << " " << a;
      os << "\n";
    }
    os << "}\n";
  }
  return os.str();
}

namespace {

bool hopf_equal(const HopfAlgebra& a, const HopfAlgebra& b) {
  if (a.kind() != b.kind() || a.lie_dim() != b.lie_dim() ||
      a.group_order() != b.group_order())
    return false;
  if (a.has_lie_part() && a.lie().brackets != b.lie().brackets) return false;
  if (a.has_group_part() && a.grp().mult != b.grp().mult) return false;
  if (a.kind() == HopfAlgebra::Kind::Smash) {
    for (int g = 0; g < a.group_order(); ++g)
      for (int i = 0; i < a.lie_dim(); ++i) {
        BasisKey gk{std::vector<int>(a.lie_dim(), 0), g};
        if (mul(a, monomial(gk), generator_elem(a, i)) !=
            mul(b, monomial(gk), generator_elem(b, i)))
          return false;
      }
  }
  return true;
}

}  // namespace

bool model_equal(const DefinitionFile& a, const DefinitionFile& b) {
  if (!hopf_equal(*a.hopf, *b.hopf)) return false;
  if (a.algebra.has_value() != b.algebra.has_value()) return false;
  if (a.algebra) {
    if (a.algebra->rank() != b.algebra->rank()) return false;
    if (a.algebra->flavor != b.algebra->flavor) return false;
    const auto& ea = a.algebra->table.entries;
    const auto& eb = b.algebra->table.entries;
    if (ea.size() != eb.size()) return false;
    for (const auto& [k, t] : ea) {
      auto it = eb.find(k);
      if (it == eb.end() || it->second.terms != t.terms) return false;
    }
  }
  if (a.operators.size() != b.operators.size()) return false;
  for (size_t i = 0; i < a.operators.size(); ++i) {
    if (a.operators[i].name != b.operators[i].name) return false;
    if (a.operators[i].kinds != b.operators[i].kinds) return false;
    if (!op_equal(a.operators[i].op, b.operators[i].op)) return false;
  }
  if (a.dual_truncation != b.dual_truncation || a.xi_spec != b.xi_spec)
    return false;
  if (a.xi_spec == "leftmult" && a.xi_elem != b.xi_elem) return false;
  if (a.tasks.size() != b.tasks.size()) return false;
  for (size_t i = 0; i < a.tasks.size(); ++i)
    if (a.tasks[i].verb != b.tasks[i].verb || a.tasks[i].args != b.tasks[i].args)
      return false;
  return true;
}

}  // namespace psalg
