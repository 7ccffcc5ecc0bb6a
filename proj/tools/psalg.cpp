#include <CLI11.hpp>
#include <iostream>

#include "psalg/runner.hpp"

using namespace psalg;

int main(int argc, char** argv) {
  CLI::App app{
      "psalg - exact computation with cocommutative Hopf algebras,\n"
      "H-pseudoalgebras and Rota-Baxter type H-operators"};
  app.require_subcommand(1);

  std::string file;
  RunOptions opts;
  std::string weight_str;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", file, "definition file")->required();
    sub->add_option("--cap", opts.cap, "degree cap (classification/conformal)");
    sub->add_option("--truncation", opts.truncation, "dual truncation");
    sub->add_option("--weight", weight_str, "operator weight, rational p/q");
    sub->add_option("--parallel", opts.parallel, "worker threads for checks");
    sub->add_option("--report", opts.report_path, "also write the report here");
    sub->add_flag("--verbose", opts.verbose, "list passing checks too");
    return sub;
  };

  CLI::App* check = add_common(app.add_subcommand(
      "check", "verify structure axioms and every claimed operator identity"));
  CLI::App* derive = add_common(app.add_subcommand(
      "derive", "build a derived structure and verify its axioms"));
  derive->add_option("--construction", opts.construction,
                     "lie_from_averaging | assoc_twist_right | assoc_twist_left |"
                     " ns_from_nijenhuis | lie_deform_nijenhuis | reynolds_double")
      ->required();
  derive->add_option("--operator", opts.operator_name, "operator name")->required();
  CLI::App* classify = add_common(app.add_subcommand(
      "classify", "classify rank-1 operators up to the degree cap"));
  classify->add_option("--kind", opts.kind, "averaging | nijenhuis | reynolds")
      ->required();
  CLI::App* annihilate = add_common(app.add_subcommand(
      "annihilate", "lift an operator to the annihilation algebra and check it"));
  annihilate->add_option("--operator", opts.operator_name, "operator name")
      ->required();
  annihilate->add_option("--kind", opts.kind, "restrict to one identity kind");
  CLI::App* conformal = add_common(app.add_subcommand(
      "conformal", "check the induced conformal algebra and conformal operators"));
  (void)check;
  (void)conformal;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (!weight_str.empty()) {
    bool neg = weight_str[0] == '-';
    auto w = parse_rational(neg ? weight_str.substr(1) : weight_str);
    if (!w) {
      std::cerr << "malformed --weight '" << weight_str << "'\n";
      return kExitUsage;
    }
    opts.weight = neg ? Rational(-*w) : *w;
  }

  ParseResult parsed = parse_definition_path(file);
  if (!parsed.ok()) {
    std::cerr << parsed.error_text();
    return kExitUsage;
  }

  const std::string sub = app.get_subcommands().front()->get_name();
  try {
    return run_subcommand(*parsed.file, sub, opts, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
