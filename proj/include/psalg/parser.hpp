#pragma once

#include <iosfwd>
#include <optional>

#include "psalg/conformal.hpp"

namespace psalg {

// One operator block: a named matrix plus the identity kinds it claims
// (each with its weight, meaningful for reynolds/rota-baxter).
struct OperatorDef {
  std::string name;
  HLinearOp op;
  std::vector<std::pair<OpKind, Rational>> kinds;
};

struct TaskDef {
  std::string verb;  // check | derive | classify | annihilate | conformal
  std::vector<std::string> args;
  int line = 0;
};

struct DefinitionFile {
  HopfPtr hopf;
  std::optional<Pseudoalgebra> algebra;
  std::vector<OperatorDef> operators;
  int dual_truncation = 6;
  std::string xi_spec = "integral";  // integral | zero | identity | leftmult <helem>
  HElem xi_elem;                     // for leftmult
  std::vector<TaskDef> tasks;

  const OperatorDef* find_operator(const std::string& name) const;
  DualMap make_xi() const;
};

struct ParseError {
  int line = 0;
  int col = 0;
  std::string message;
};

struct ParseResult {
  std::optional<DefinitionFile> file;
  std::vector<ParseError> errors;

  bool ok() const { return errors.empty() && file.has_value(); }
  std::string error_text() const;
};

ParseResult parse_definition(const std::string& text);
ParseResult parse_definition_path(const std::string& path);

// Canonical text for the model; parse(emit(m)) reproduces m.
std::string emit_definition(const DefinitionFile& def);

// Structural model equality (used by the round-trip property).
bool model_equal(const DefinitionFile& a, const DefinitionFile& b);

std::optional<OpKind> kind_from_name(const std::string& name);

}  // namespace psalg
