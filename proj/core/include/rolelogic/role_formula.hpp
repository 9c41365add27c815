#pragma once

#include <memory>
#include <string>
#include <vector>

namespace rolelogic::role {

// Node kinds of role formulas. Everything from FieldComplement on is record
// sugar that `desugar` removes; CardLeq, CardEq and Box are derived forms.
enum class Kind {
  Unary,
  Binary,
  Id,
  True,
  False,
  Emp,
  Not,
  And,
  Or,
  Implies,
  Spatial,
  Inv,
  Shift,
  CardGeq,
  CardLeq,
  CardEq,
  Box,
  Acyclic,
  FieldComplement,
  Edges,
  Field,
  Multifield,
  Slot,
  Multislot,
};

enum class BoundOp { Eq, Le, Ge };

// Multiplicity annotation of a field or slot: =k, <=k or >=k.
struct Bound {
  BoundOp op = BoundOp::Eq;
  int k = 1;
  friend bool operator==(const Bound&, const Bound&) = default;
};

struct Node;

// Immutable role formula. Copies share structure.
class Formula {
 public:
  Formula() = default;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  const Node& node() const { return *node_; }
  const Node* get() const { return node_.get(); }
  explicit operator bool() const { return node_ != nullptr; }

  Kind kind() const;
  const std::string& name() const;
  int k() const;
  Bound bound() const;
  const std::vector<std::string>& names() const;
  const Formula& lhs() const;
  const Formula& rhs() const;
  // Sole child of unary connectives, card nodes and records.
  const Formula& body() const { return lhs(); }

 private:
  std::shared_ptr<const Node> node_;
};

struct Node {
  Kind kind;
  std::string name;                // predicate name, field name of records
  int k = 0;                       // card bound
  Bound bound;                     // record multiplicity
  std::vector<std::string> names;  // acyclic relation names
  Formula lhs;
  Formula rhs;
};

bool operator==(const Formula& a, const Formula& b);
inline bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

Formula unary(std::string name);
Formula binary(std::string name);
Formula id();
Formula top();
Formula bottom();
Formula emp();
Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula spatial(Formula a, Formula b);
Formula inv(Formula f);
Formula shift(Formula f);
Formula card_geq(int k, Formula f);
Formula card_leq(int k, Formula f);
Formula card_eq(int k, Formula f);
Formula box(Formula f);
Formula acyclic(std::vector<std::string> names);
Formula field_complement(std::string f);
Formula edges();
Formula field(std::string f, Bound bound, Formula target);
Formula multifield(std::string f, Formula target);
Formula slot(Formula source, Bound bound, std::string f);
Formula multislot(Formula source, std::string f);

// Left-nested folds; the empty conjunction is `true`, the empty disjunction
// `false`, and the empty spatial chain `emp`.
Formula conj_all(const std::vector<Formula>& parts);
Formula disj_all(const std::vector<Formula>& parts);
Formula spatial_all(const std::vector<Formula>& parts);

bool is_sugar(Kind k);
bool is_card(Kind k);
// No sugar nodes and no CardLeq/CardEq/Box.
bool is_core(const Formula& f);
// No card node below another card node.
bool is_star_free_eligible(const Formula& f);
bool contains(const Formula& f, Kind k);
// Maximum number of nested card nodes.
int card_depth(const Formula& f);

// Replaces every occurrence of the unary predicate `pred` with `replacement`.
Formula substitute_unary(const Formula& f, const std::string& pred, const Formula& replacement);

}  // namespace rolelogic::role
