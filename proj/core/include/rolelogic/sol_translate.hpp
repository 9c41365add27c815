#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rolelogic/fo_formula.hpp"
#include "rolelogic/signature.hpp"

namespace rolelogic {

struct PrimedCopy {
  std::string base;
  std::string left;   // single-primed copy
  std::string right;  // double-primed copy
};

// Base signature plus the fresh copies introduced for each spatial conjunction.
struct ExtendedSignature {
  Signature base;
  std::vector<PrimedCopy> copies;

  Signature extended() const;
};

// Spatial conjunction and least fixpoints expressed with relation quantifiers.
fo::Formula to_sol(const fo::Formula& f, const Signature& sig);

// For formulas built from first-order leaves with spatial conjunction and
// disjunction: a first-order formula over the extended signature that is
// satisfiable on a domain iff `f` is.
std::pair<fo::Formula, ExtendedSignature> btr_reduce(const fo::Formula& f, const Signature& sig);

// True for formulas btr_reduce accepts.
bool is_interesting(const fo::Formula& f);

}  // namespace rolelogic
