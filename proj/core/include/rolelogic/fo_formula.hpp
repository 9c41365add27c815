#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace rolelogic::fo {

// First-order logic with counting, extended with spatial conjunction, least
// fixpoints and acyclicity. ExistsRel/ForallRel make it second-order.
enum class Kind {
  Pred,       // name(vars...) - signature predicate or bound relation variable
  Eq,         // vars[0] = vars[1]
  True,
  False,
  Not,
  And,
  Or,
  Implies,
  Iff,
  ExistsGeq,  // exists>=k vars[0]. lhs
  ExistsEq,
  ExistsLeq,
  Forall,
  Spatial,
  Lfp,        // (lfp name(vars). lhs)(args)
  Acyclic,    // acyclic(vars...) over binary relation names
  ExistsRel,  // exists2 name/k. lhs
  ForallRel,  // forall2 name/k. lhs
};

struct Node;

class Formula {
 public:
  Formula() = default;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  const Node& node() const { return *node_; }
  const Node* get() const { return node_.get(); }
  explicit operator bool() const { return node_ != nullptr; }

  Kind kind() const;
  const std::string& name() const;
  const std::vector<std::string>& vars() const;
  const std::vector<std::string>& args() const;
  int k() const;
  const Formula& lhs() const;
  const Formula& rhs() const;
  const Formula& body() const { return lhs(); }
  // Bound variable of a first-order quantifier.
  const std::string& var() const;

 private:
  std::shared_ptr<const Node> node_;
};

struct Node {
  Kind kind;
  std::string name;
  std::vector<std::string> vars;
  std::vector<std::string> args;
  int k = 0;
  Formula lhs;
  Formula rhs;
};

bool operator==(const Formula& a, const Formula& b);
inline bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

Formula pred(std::string name, std::vector<std::string> args);
Formula pred(std::string name, std::string x);
Formula pred(std::string name, std::string x, std::string y);
Formula eq(std::string x, std::string y);
Formula top();
Formula bottom();
Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula exists_geq(int k, std::string var, Formula body);
Formula exists_eq(int k, std::string var, Formula body);
Formula exists_leq(int k, std::string var, Formula body);
Formula forall(std::string var, Formula body);
Formula spatial(Formula a, Formula b);
Formula lfp(std::string rel, std::vector<std::string> formals, Formula body,
            std::vector<std::string> actuals);
Formula acyclic(std::vector<std::string> relations);
Formula exists_rel(std::string rel, int arity, Formula body);
Formula forall_rel(std::string rel, int arity, Formula body);

Formula conj_all(const std::vector<Formula>& parts);
Formula disj_all(const std::vector<Formula>& parts);

bool is_quantifier(Kind k);
bool is_relation_quantifier(Kind k);
bool contains(const Formula& f, Kind k);
// True when no ExistsRel/ForallRel occurs.
bool is_first_order(const Formula& f);

std::set<std::string> free_vars(const Formula& f);
// Predicate names used in atoms that are not bound by lfp or relation quantifiers.
std::set<std::string> free_predicates(const Formula& f);

// Capture-avoiding renaming of free first-order variables.
Formula rename_free(const Formula& f, const std::string& from, const std::string& to);
// Renames predicate symbols in atoms and acyclic nodes (free occurrences only).
Formula rename_predicates(const Formula& f, const std::vector<std::pair<std::string, std::string>>& map);

// Checks that every lfp relation variable occurs only positively in its body.
bool lfp_positive(const Formula& f);

std::size_t size(const Formula& f);

}  // namespace rolelogic::fo
