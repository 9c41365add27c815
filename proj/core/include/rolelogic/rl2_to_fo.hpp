#pragma once

#include <string>

#include "rolelogic/fo_formula.hpp"
#include "rolelogic/role_formula.hpp"
#include "rolelogic/signature.hpp"

namespace rolelogic {

// Reads the role semantics clause by clause as a first-order formula whose
// free variables stand for the two environment components. Counting
// quantifiers alternate between the names x and y. `emp` becomes a closed
// formula over the splittable predicates of `sig`.
fo::Formula rl2_to_fo(const role::Formula& f, const std::string& c1, const std::string& c2,
                      const Signature& sig);

struct Metrics {
  int depth = 0;
  int degree = 0;
};

// Quantifier depth and counting degree. Spatial, lfp, acyclic and relation
// quantifiers are rejected.
Metrics metrics(const fo::Formula& f);

}  // namespace rolelogic
