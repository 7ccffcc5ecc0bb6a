#include "psalg/runner.hpp"

#include <fstream>
#include <sstream>

namespace psalg {

namespace {

std::optional<Derived> construction_from_name(const std::string& name) {
  if (name == "lie_from_averaging") return Derived::LieFromAveraging;
  if (name == "assoc_twist_right") return Derived::AssocTwistRight;
  if (name == "assoc_twist_left") return Derived::AssocTwistLeft;
  if (name == "ns_from_nijenhuis") return Derived::NSFromNijenhuis;
  if (name == "lie_deform_nijenhuis") return Derived::LieDeformNijenhuis;
  if (name == "reynolds_double") return Derived::ReynoldsDouble;
  return std::nullopt;
}

// Weight for an operator's claimed kind, command line taking precedence.
Rational weight_for(const OperatorDef& op, OpKind kind, const RunOptions& opts) {
  if (opts.weight) return *opts.weight;
  for (const auto& [k, w] : op.kinds)
    if (k == kind) return w;
  return 0;
}

int run_check(const DefinitionFile& def, const RunOptions& opts,
              std::ostream& out) {
  bool all = true;
  if (def.algebra) {
    const Pseudoalgebra& A = *def.algebra;
    if (A.flavor != Flavor::Unchecked) {
      Report r = check_structure(A, A.flavor, opts.parallel);
      out << r.to_text(opts.verbose);
      all = all && r.pass();
    } else {
      out << "pseudoalgebra: flavor unchecked, structure not verified\n";
    }
    for (const OperatorDef& op : def.operators)
      for (const auto& [kind, w] : op.kinds) {
        Report r = check_operator(kind, op.op, A,
                                  opts.weight ? *opts.weight : w, opts.parallel);
        out << "operator " << op.name << ": " << r.to_text(opts.verbose);
        all = all && r.pass();
      }
  } else {
    out << "no pseudoalgebra section; nothing to check beyond parsing\n";
  }
  return all ? kExitPass : kExitFail;
}

int run_derive(const DefinitionFile& def, const RunOptions& opts,
               std::ostream& out) {
  if (!def.algebra) {
    out << "derive: no pseudoalgebra section\n";
    return kExitUsage;
  }
  auto cons = construction_from_name(opts.construction);
  if (!cons) {
    out << "derive: unknown construction '" << opts.construction << "'\n";
    return kExitUsage;
  }
  const OperatorDef* op = def.find_operator(opts.operator_name);
  if (!op) {
    out << "derive: unknown operator '" << opts.operator_name << "'\n";
    return kExitUsage;
  }
  Rational w = 0;
  if (*cons == Derived::ReynoldsDouble) w = weight_for(*op, OpKind::Reynolds, opts);
  DerivedStructure d = derive(*cons, op->op, *def.algebra, w);
  out << "precondition: " << d.precondition.to_text(opts.verbose);
  if (!d.precondition.pass()) return kExitFail;
  out << "postcondition: " << d.postcondition.to_text(opts.verbose);
  const HopfAlgebra& H = *def.hopf;
  auto print_table = [&](const ProductTable& t, const std::string& name) {
    out << "derived table " << name << ":\n";
    for (const auto& [key, tensor] : t.entries) {
      auto [i, j, k] = key;
      out << "  e" << (i + 1) << " e" << (j + 1) << " -> e" << (k + 1) << " : "
          << to_string(H, tensor) << "\n";
    }
    if (t.entries.empty()) out << "  (zero)\n";
  };
  if (d.algebra) print_table(d.algebra->table, "product");
  if (d.ns) {
    print_table(d.ns->right, "|>");
    print_table(d.ns->left, "<|");
    print_table(d.ns->dot, "<>");
  }
  return d.postcondition.pass() ? kExitPass : kExitFail;
}

int run_classify(const DefinitionFile& def, const RunOptions& opts,
                 std::ostream& out) {
  if (!def.algebra || def.algebra->rank() != 1) {
    out << "classify: needs a rank-1 pseudoalgebra section\n";
    return kExitUsage;
  }
  auto kind = kind_from_name(opts.kind);
  if (!kind) {
    out << "classify: unknown kind '" << opts.kind << "'\n";
    return kExitUsage;
  }
  const Tensor* alpha = def.algebra->table.find(0, 0, 0);
  if (!alpha) {
    out << "classify: the pseudoproduct table is zero\n";
    return kExitUsage;
  }
  try {
    SolutionReport rep =
        classify(*kind, def.hopf, *alpha, opts.cap,
                 opts.weight ? *opts.weight : Rational(0));
    out << rep.to_text(*def.hopf);
    if (rep.status == SolveStatus::Undecided) return kExitUndecided;
    return (rep.verified && rep.falsified_rest) ? kExitPass : kExitFail;
  } catch (const std::invalid_argument& e) {
    out << "classify: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_annihilate(const DefinitionFile& def, const RunOptions& opts,
                   std::ostream& out) {
  if (!def.algebra) {
    out << "annihilate: no pseudoalgebra section\n";
    return kExitUsage;
  }
  const OperatorDef* op = def.find_operator(opts.operator_name);
  if (!op) {
    out << "annihilate: unknown operator '" << opts.operator_name << "'\n";
    return kExitUsage;
  }
  int trunc = opts.truncation > 0 ? opts.truncation : def.dual_truncation;
  DualPtr X = DualSpace::make(def.hopf, trunc);
  DualMap xi;
  try {
    xi = def.make_xi();
  } catch (const std::exception& e) {
    out << "annihilate: " << e.what() << "\n";
    return kExitUsage;
  }
  bool all = true;
  Report lin = check_dual_map_linear(*X, xi, std::min(2, trunc));
  out << lin.to_text(opts.verbose);
  all = all && lin.pass();
  std::vector<std::pair<OpKind, Rational>> kinds = op->kinds;
  if (!opts.kind.empty()) {
    auto k = kind_from_name(opts.kind);
    if (!k) {
      out << "annihilate: unknown kind '" << opts.kind << "'\n";
      return kExitUsage;
    }
    kinds = {{*k, opts.weight ? *opts.weight : Rational(0)}};
  }
  for (const auto& [kind, w0] : kinds) {
    Rational w = opts.weight ? *opts.weight : w0;
    Report base = check_operator(kind, op->op, *def.algebra, w, opts.parallel);
    out << "operator " << op->name << " on the pseudoalgebra: "
        << base.to_text(opts.verbose);
    all = all && base.pass();
    Report hyp = check_xi_hypothesis(kind, *X, xi, -1);
    out << hyp.to_text(opts.verbose);
    all = all && hyp.pass();
    Report lift = check_lift(kind, *X, def.algebra->table, xi, op->op, w);
    out << lift.to_text(opts.verbose);
    all = all && lift.pass();
  }
  return all ? kExitPass : kExitFail;
}

int run_conformal(const DefinitionFile& def, const RunOptions& opts,
                  std::ostream& out) {
  if (!def.algebra) {
    out << "conformal: no pseudoalgebra section\n";
    return kExitUsage;
  }
  if (def.algebra->flavor != Flavor::Lie) {
    out << "conformal: the pseudoalgebra must be declared lie\n";
    return kExitUsage;
  }
  int needed = opts.cap + 2;
  int trunc = opts.truncation > 0 ? opts.truncation
                                  : std::max(def.dual_truncation, needed);
  DualPtr X = DualSpace::make(def.hopf, trunc);
  ConformalAlgebra C{*def.algebra, X};
  bool all = true;
  try {
    Report ax = check_conformal_axioms(C, opts.cap);
    out << ax.to_text(opts.verbose);
    all = all && ax.pass();
    for (const OperatorDef& op : def.operators)
      for (const auto& [kind, w0] : op.kinds) {
        Rational w = opts.weight ? *opts.weight : w0;
        Report r = check_conformal_operator(kind, op.op, C, opts.cap, w);
        out << "operator " << op.name << ": " << r.to_text(opts.verbose);
        all = all && r.pass();
      }
  } catch (const std::invalid_argument& e) {
    out << "conformal: " << e.what() << "\n";
    return kExitUsage;
  }
  return all ? kExitPass : kExitFail;
}

}  // namespace

int run_subcommand(const DefinitionFile& def, const std::string& sub,
                   const RunOptions& opts, std::ostream& out) {
  std::ostringstream buf;
  int code;
  if (sub == "check")
    code = run_check(def, opts, buf);
  else if (sub == "derive")
    code = run_derive(def, opts, buf);
  else if (sub == "classify")
    code = run_classify(def, opts, buf);
  else if (sub == "annihilate")
    code = run_annihilate(def, opts, buf);
  else if (sub == "conformal")
    code = run_conformal(def, opts, buf);
  else {
    buf << "unknown subcommand '" << sub << "'\n";
    code = kExitUsage;
  }
  std::string text = buf.str();
  out << text;
  if (!opts.report_path.empty()) {
    std::ofstream f(opts.report_path, std::ios::binary);
    f << text;
  }
  return code;
}

}  // namespace psalg
