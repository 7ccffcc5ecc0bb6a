#pragma once

#include "psalg/parser.hpp"
#include "psalg/rank1.hpp"

namespace psalg {

// Exit codes of the CLI: 0 all checks pass, 1 a check failed (residuals in
// the report), 2 usage/parse error, 3 classifier verdict undecided.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUndecided = 3;

struct RunOptions {
  int cap = 3;                       // --cap: classification / conformal degree
  int truncation = -1;               // --truncation: dual truncation override
  std::optional<Rational> weight;    // --weight
  int parallel = 1;                  // --parallel
  std::string report_path;           // --report
  std::string operator_name;         // --operator
  std::string construction;          // --construction (derive)
  std::string kind;                  // --kind (classify / annihilate)
  bool verbose = false;              // --verbose: list passing checks too
};

int run_subcommand(const DefinitionFile& def, const std::string& sub,
                   const RunOptions& opts, std::ostream& out);

}  // namespace psalg
