#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rolelogic/role_formula.hpp"
#include "rolelogic/signature.hpp"

namespace rolelogic {

// Replaces fc, edges and record atoms by their definitions. Derived card
// forms and boxes are kept, so the result prints close to the source.
role::Formula expand_records(const role::Formula& f, const Signature& sig);

// expand_records followed by reduction of card<=, card= and [F] to card>=.
// The result is core.
role::Formula desugar(const role::Formula& f, const Signature& sig);

// A role declaration. `header` is used by the simultaneous translation only.
struct RoleDecl {
  std::string name;
  bool simultaneous = false;
  std::vector<std::string> header;
  std::vector<std::pair<std::string, role::Formula>> fields;  // f : S
  std::vector<std::pair<role::Formula, std::string>> slots;   // S . f
  std::vector<std::pair<std::string, std::string>> identities;
  std::vector<std::string> acyclic;
};

role::Formula translate_role(const RoleDecl& d, const Signature& sig);
role::Formula translate_simultaneous(const RoleDecl& d, const Signature& sig);
// Dispatches on d.simultaneous.
role::Formula translate(const RoleDecl& d, const Signature& sig);

struct RoleFile {
  Signature sig;
  std::vector<RoleDecl> roles;
};

// Optional `sig { ... }` header followed by `role` / `simultaneous role`
// blocks. Without a header, names are classified by capitalization.
RoleFile parse_role_file(std::string_view text);

}  // namespace rolelogic
