#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "rolelogic/fo_formula.hpp"
#include "rolelogic/model.hpp"
#include "rolelogic/role_formula.hpp"
#include "rolelogic/semantics.hpp"
#include "rolelogic/syntax.hpp"

namespace rolelogic {

struct Verdict {
  enum class Kind { Equivalent, Counterexample, Satisfiable, Unsat };
  Kind kind;
  int size = 0;                // domain bound checked, or size of the witness
  std::optional<Model> model;  // counterexample or witness
  Valuation valuation;
  bool left = false, right = false;  // truth values at a counterexample

  bool holds() const { return kind == Kind::Equivalent || kind == Kind::Satisfiable; }
  std::string describe() const;
};

// Calls `fn` on every model of the given size in canonical order; stops early
// when fn returns false. Returns the number of models visited.
std::uint64_t enumerate_models(const Signature& sig, int size,
                               const std::function<bool(const Model&)>& fn);
std::uint64_t model_count(const Signature& sig, int size);

struct OracleOptions {
  int min_size = 1;
  // Enumerate only the tuples the formulas can observe under each valuation.
  bool project = true;
};

// Role formulas are evaluated at c1 = x, c2 = y.
Verdict bounded_equiv(const AnyFormula& f, const AnyFormula& g, int max_size, const Signature& sig,
                      const OracleOptions& opts = {});
Verdict bounded_sat(const AnyFormula& f, int max_size, const Signature& sig,
                    const OracleOptions& opts = {});

// Truth of either kind of formula under a valuation (x, y for roles).
bool eval_any(const AnyFormula& f, const Model& m, const Valuation& v);
std::vector<std::string> free_vars_any(const AnyFormula& f);

enum class Profile { RoleCore, FoDepth1, StarFreeEligible };

// Deterministic for a fixed seed. RoleCore and StarFreeEligible give role
// formulas; FoDepth1 gives a first-order formula in x1 of quantifier depth <= 1.
AnyFormula random_formula(const Signature& sig, int depth, std::uint64_t seed, Profile profile);
role::Formula random_role(const Signature& sig, int depth, std::mt19937_64& rng, Profile profile);
fo::Formula random_fo_depth1(const Signature& sig, int depth, std::mt19937_64& rng,
                             const std::vector<std::string>& vars = {"x1"});

}  // namespace rolelogic
