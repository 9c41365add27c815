#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "rolelogic/fo_formula.hpp"
#include "rolelogic/role_formula.hpp"
#include "rolelogic/signature.hpp"

namespace rolelogic {

enum class Dialect { Role, Fo };

// A formula of either dialect.
using AnyFormula = std::variant<role::Formula, fo::Formula>;

// Strict parsing: every predicate must be declared in `sig`.
role::Formula parse_role(std::string_view text, const Signature& sig);
fo::Formula parse_fo(std::string_view text, const Signature& sig);

// Lenient parsing: undeclared predicates are added to `sig` using
// conventional_kind (role dialect) or their arity (fo dialect).
role::Formula parse_role_infer(std::string_view text, Signature& sig);
fo::Formula parse_fo_infer(std::string_view text, Signature& sig);

std::string print(const role::Formula& f);
std::string print(const fo::Formula& f);
std::string print(const AnyFormula& f);

// Contents of a formula file:
//   sig { unary A, B; binary f, g; nonsplit f; }   (optional)
//   let NAME = F;                                    (any number)
//   formula F;
struct FormulaFile {
  Signature sig;
  bool declared_sig = false;
  std::vector<std::pair<std::string, AnyFormula>> bindings;
  AnyFormula formula;
};

// Without a header the signature is inferred; `base` (if non-null) seeds it.
FormulaFile parse_formula_file(std::string_view text, Dialect dialect,
                               const Signature* base = nullptr);

// Parses just a `sig { ... }` block (also used by model and role files).
Signature parse_signature(std::string_view text);
std::string print_signature(const Signature& sig);

}  // namespace rolelogic
