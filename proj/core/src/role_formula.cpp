#include "rolelogic/role_formula.hpp"

#include <algorithm>

#include "rolelogic/error.hpp"

namespace rolelogic::role {

namespace {

Formula make(Node n) { return Formula(std::make_shared<const Node>(std::move(n))); }

Formula make_leaf(Kind k, std::string name = {}) {
  Node n{k};
  n.name = std::move(name);
  return make(std::move(n));
}

Formula make_un(Kind k, Formula a) {
  Node n{k};
  n.lhs = std::move(a);
  return make(std::move(n));
}

Formula make_bin(Kind k, Formula a, Formula b) {
  Node n{k};
  n.lhs = std::move(a);
  n.rhs = std::move(b);
  return make(std::move(n));
}

Formula make_card(Kind kind, int k, Formula a) {
  if (k < 0) throw PreconditionError("negative count in card formula");
  Node n{kind};
  n.k = k;
  n.lhs = std::move(a);
  return make(std::move(n));
}

}  // namespace

Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
int Formula::k() const { return node_->k; }
Bound Formula::bound() const { return node_->bound; }
const std::vector<std::string>& Formula::names() const { return node_->names; }
const Formula& Formula::lhs() const { return node_->lhs; }
const Formula& Formula::rhs() const { return node_->rhs; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  const Node& x = a.node();
  const Node& y = b.node();
  return x.kind == y.kind && x.name == y.name && x.k == y.k && x.bound == y.bound &&
         x.names == y.names && x.lhs == y.lhs && x.rhs == y.rhs;
}

Formula unary(std::string name) { return make_leaf(Kind::Unary, std::move(name)); }
Formula binary(std::string name) { return make_leaf(Kind::Binary, std::move(name)); }
Formula id() { return make_leaf(Kind::Id); }
Formula top() { return make_leaf(Kind::True); }
Formula bottom() { return make_leaf(Kind::False); }
Formula emp() { return make_leaf(Kind::Emp); }
Formula neg(Formula f) { return make_un(Kind::Not, std::move(f)); }
Formula conj(Formula a, Formula b) { return make_bin(Kind::And, std::move(a), std::move(b)); }
Formula disj(Formula a, Formula b) { return make_bin(Kind::Or, std::move(a), std::move(b)); }
Formula implies(Formula a, Formula b) {
  return make_bin(Kind::Implies, std::move(a), std::move(b));
}
Formula spatial(Formula a, Formula b) {
  return make_bin(Kind::Spatial, std::move(a), std::move(b));
}
Formula inv(Formula f) { return make_un(Kind::Inv, std::move(f)); }
Formula shift(Formula f) { return make_un(Kind::Shift, std::move(f)); }
Formula card_geq(int k, Formula f) { return make_card(Kind::CardGeq, k, std::move(f)); }
Formula card_leq(int k, Formula f) { return make_card(Kind::CardLeq, k, std::move(f)); }
Formula card_eq(int k, Formula f) { return make_card(Kind::CardEq, k, std::move(f)); }
Formula box(Formula f) { return make_un(Kind::Box, std::move(f)); }

Formula acyclic(std::vector<std::string> names) {
  if (names.empty()) throw PreconditionError("acyclic needs at least one relation");
  Node n{Kind::Acyclic};
  n.names = std::move(names);
  return make(std::move(n));
}

Formula field_complement(std::string f) { return make_leaf(Kind::FieldComplement, std::move(f)); }
Formula edges() { return make_leaf(Kind::Edges); }

Formula field(std::string f, Bound bound, Formula target) {
  if (bound.k < 0) throw PreconditionError("negative count in field bound");
  Node n{Kind::Field};
  n.name = std::move(f);
  n.bound = bound;
  n.lhs = std::move(target);
  return make(std::move(n));
}

Formula multifield(std::string f, Formula target) {
  Node n{Kind::Multifield};
  n.name = std::move(f);
  n.lhs = std::move(target);
  return make(std::move(n));
}

Formula slot(Formula source, Bound bound, std::string f) {
  if (bound.k < 0) throw PreconditionError("negative count in slot bound");
  Node n{Kind::Slot};
  n.name = std::move(f);
  n.bound = bound;
  n.lhs = std::move(source);
  return make(std::move(n));
}

Formula multislot(Formula source, std::string f) {
  Node n{Kind::Multislot};
  n.name = std::move(f);
  n.lhs = std::move(source);
  return make(std::move(n));
}

namespace {

Formula fold(const std::vector<Formula>& parts, Formula unit, Formula (*op)(Formula, Formula)) {
  if (parts.empty()) return unit;
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = op(acc, parts[i]);
  return acc;
}

}  // namespace

Formula conj_all(const std::vector<Formula>& parts) { return fold(parts, top(), conj); }
Formula disj_all(const std::vector<Formula>& parts) { return fold(parts, bottom(), disj); }
Formula spatial_all(const std::vector<Formula>& parts) { return fold(parts, emp(), spatial); }

bool is_sugar(Kind k) {
  switch (k) {
    case Kind::FieldComplement:
    case Kind::Edges:
    case Kind::Field:
    case Kind::Multifield:
    case Kind::Slot:
    case Kind::Multislot:
      return true;
    default:
      return false;
  }
}

bool is_card(Kind k) { return k == Kind::CardGeq || k == Kind::CardLeq || k == Kind::CardEq; }

bool contains(const Formula& f, Kind k) {
  if (!f) return false;
  if (f.kind() == k) return true;
  return contains(f.lhs(), k) || contains(f.rhs(), k);
}

bool is_core(const Formula& f) {
  if (!f) return true;
  Kind k = f.kind();
  if (is_sugar(k) || k == Kind::CardLeq || k == Kind::CardEq || k == Kind::Box) return false;
  return is_core(f.lhs()) && is_core(f.rhs());
}

int card_depth(const Formula& f) {
  if (!f) return 0;
  Kind k = f.kind();
  int inner = std::max(card_depth(f.lhs()), card_depth(f.rhs()));
  // Box, records and field complements hide card quantifiers after desugaring.
  if (is_card(k) || k == Kind::Box) return inner + 1;
  if (k == Kind::Field || k == Kind::Multifield || k == Kind::Slot || k == Kind::Multislot)
    return inner + 1;
  return inner;
}

bool is_star_free_eligible(const Formula& f) { return card_depth(f) <= 1; }

Formula substitute_unary(const Formula& f, const std::string& pred, const Formula& replacement) {
  if (!f) return f;
  if (f.kind() == Kind::Unary && f.name() == pred) return replacement;
  Formula l = substitute_unary(f.lhs(), pred, replacement);
  Formula r = substitute_unary(f.rhs(), pred, replacement);
  if (l.get() == f.lhs().get() && r.get() == f.rhs().get()) return f;
  Node n = f.node();
  n.lhs = std::move(l);
  n.rhs = std::move(r);
  return Formula(std::make_shared<const Node>(std::move(n)));
}

}  // namespace rolelogic::role
