#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rolelogic/fo_formula.hpp"
#include "rolelogic/model.hpp"
#include "rolelogic/role_formula.hpp"

namespace rolelogic {

// The two environment components of a role formula.
struct Pair {
  int c1 = 0;
  int c2 = 0;
};

using Valuation = std::map<std::string, int>;

// Truth of a role formula at every pair at once: bit c1*n + c2.
std::uint64_t eval_role_mask(const role::Formula& f, const Model& m);
bool eval_role(const role::Formula& f, const Model& m, Pair p);

// First-order evaluation (counting quantifiers, lfp, acyclic, spatial).
// Relation quantifiers are rejected; use eval_sol.
bool eval_fo(const fo::Formula& f, const Model& m, const Valuation& v);
// Also evaluates exists2/forall2 by enumerating relations (|D|^arity <= 9).
bool eval_sol(const fo::Formula& f, const Model& m, const Valuation& v);

// Evaluators keep a memo table for spatial subformulas keyed by the
// (sub)model contents. Reuse one instance across many models of the same
// signature to share work. Every formula evaluated is retained until the
// evaluator is destroyed.
class RoleEvaluator {
 public:
  RoleEvaluator();
  ~RoleEvaluator();
  RoleEvaluator(RoleEvaluator&&) noexcept;
  RoleEvaluator& operator=(RoleEvaluator&&) noexcept;

  std::uint64_t mask(const role::Formula& f, const Model& m);
  bool eval(const role::Formula& f, const Model& m, Pair p) {
    return (mask(f, m) >> (p.c1 * m.size() + p.c2)) & 1u;
  }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

class FoEvaluator {
 public:
  explicit FoEvaluator(bool allow_second_order = false);
  ~FoEvaluator();
  FoEvaluator(FoEvaluator&&) noexcept;
  FoEvaluator& operator=(FoEvaluator&&) noexcept;

  bool eval(const fo::Formula& f, const Model& m, const Valuation& v);
  // Valuation given positionally for `vars`.
  bool eval(const fo::Formula& f, const Model& m, const std::vector<std::string>& vars,
            const std::vector<int>& values);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Streams every way of distributing the true tuples of splittable predicates
// over `parts` models. Nonsplittable predicates are copied into every part.
class Splits {
 public:
  Splits(const Model& m, int parts);

  // Advances to the next split; false when exhausted. Must be called before
  // the first parts() access.
  bool next();
  const std::vector<Model>& parts() const { return parts_; }
  // Total number of splits: parts^(true splittable tuples).
  std::uint64_t count() const { return total_; }

 private:
  std::vector<Model> parts_;
  std::vector<std::pair<int, int>> tuples_;  // (word, bit)
  std::vector<int> digits_;
  std::uint64_t total_ = 1;
  bool started_ = false;
  int nparts_;
};

}  // namespace rolelogic
