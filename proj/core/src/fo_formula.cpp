#include "rolelogic/fo_formula.hpp"

#include <algorithm>
#include <map>

#include "rolelogic/error.hpp"

namespace rolelogic::fo {

namespace {

Formula make(Node n) { return Formula(std::make_shared<const Node>(std::move(n))); }

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

Formula make_quant(Kind kind, int k, std::string var, Formula body) {
  if (k < 0) throw PreconditionError("negative count in counting quantifier");
  Node n{kind};
  n.k = k;
  n.vars = {std::move(var)};
  n.lhs = std::move(body);
  return make(std::move(n));
}

}  // namespace

Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
const std::vector<std::string>& Formula::vars() const { return node_->vars; }
const std::vector<std::string>& Formula::args() const { return node_->args; }
int Formula::k() const { return node_->k; }
const Formula& Formula::lhs() const { return node_->lhs; }
const Formula& Formula::rhs() const { return node_->rhs; }
const std::string& Formula::var() const { return node_->vars.front(); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  const Node& x = a.node();
  const Node& y = b.node();
  return x.kind == y.kind && x.name == y.name && x.vars == y.vars && x.args == y.args &&
         x.k == y.k && x.lhs == y.lhs && x.rhs == y.rhs;
}

Formula pred(std::string name, std::vector<std::string> args) {
  Node n{Kind::Pred};
  n.name = std::move(name);
  n.vars = std::move(args);
  return make(std::move(n));
}
Formula pred(std::string name, std::string x) { return pred(std::move(name), std::vector<std::string>{std::move(x)}); }
Formula pred(std::string name, std::string x, std::string y) {
  return pred(std::move(name), std::vector<std::string>{std::move(x), std::move(y)});
}

Formula eq(std::string x, std::string y) {
  Node n{Kind::Eq};
  n.vars = {std::move(x), std::move(y)};
  return make(std::move(n));
}

Formula top() { return make(Node{Kind::True}); }
Formula bottom() { return make(Node{Kind::False}); }
Formula neg(Formula f) { return make_un(Kind::Not, std::move(f)); }
Formula conj(Formula a, Formula b) { return make_bin(Kind::And, std::move(a), std::move(b)); }
Formula disj(Formula a, Formula b) { return make_bin(Kind::Or, std::move(a), std::move(b)); }
Formula implies(Formula a, Formula b) {
  return make_bin(Kind::Implies, std::move(a), std::move(b));
}
Formula iff(Formula a, Formula b) { return make_bin(Kind::Iff, std::move(a), std::move(b)); }
Formula exists_geq(int k, std::string var, Formula body) {
  return make_quant(Kind::ExistsGeq, k, std::move(var), std::move(body));
}
Formula exists_eq(int k, std::string var, Formula body) {
  return make_quant(Kind::ExistsEq, k, std::move(var), std::move(body));
}
Formula exists_leq(int k, std::string var, Formula body) {
  return make_quant(Kind::ExistsLeq, k, std::move(var), std::move(body));
}
Formula forall(std::string var, Formula body) {
  return make_quant(Kind::Forall, 0, std::move(var), std::move(body));
}
Formula spatial(Formula a, Formula b) {
  return make_bin(Kind::Spatial, std::move(a), std::move(b));
}

Formula lfp(std::string rel, std::vector<std::string> formals, Formula body,
            std::vector<std::string> actuals) {
  if (formals.size() != actuals.size())
    throw PreconditionError("lfp: formal and actual argument counts differ");
  for (std::size_t i = 0; i < formals.size(); ++i)
    for (std::size_t j = i + 1; j < formals.size(); ++j)
      if (formals[i] == formals[j]) throw PreconditionError("lfp: repeated formal variable");
  Node n{Kind::Lfp};
  n.name = std::move(rel);
  n.vars = std::move(formals);
  n.args = std::move(actuals);
  n.lhs = std::move(body);
  return make(std::move(n));
}

Formula acyclic(std::vector<std::string> relations) {
  if (relations.empty()) throw PreconditionError("acyclic needs at least one relation");
  Node n{Kind::Acyclic};
  n.vars = std::move(relations);
  return make(std::move(n));
}

Formula exists_rel(std::string rel, int arity, Formula body) {
  Node n{Kind::ExistsRel};
  n.name = std::move(rel);
  n.k = arity;
  n.lhs = std::move(body);
  return make(std::move(n));
}

Formula forall_rel(std::string rel, int arity, Formula body) {
  Node n{Kind::ForallRel};
  n.name = std::move(rel);
  n.k = arity;
  n.lhs = std::move(body);
  return make(std::move(n));
}

Formula conj_all(const std::vector<Formula>& parts) {
  if (parts.empty()) return top();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = conj(acc, parts[i]);
  return acc;
}

Formula disj_all(const std::vector<Formula>& parts) {
  if (parts.empty()) return bottom();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = disj(acc, parts[i]);
  return acc;
}

bool is_quantifier(Kind k) {
  return k == Kind::ExistsGeq || k == Kind::ExistsEq || k == Kind::ExistsLeq || k == Kind::Forall;
}

bool is_relation_quantifier(Kind k) { return k == Kind::ExistsRel || k == Kind::ForallRel; }

bool contains(const Formula& f, Kind k) {
  if (!f) return false;
  return f.kind() == k || contains(f.lhs(), k) || contains(f.rhs(), k);
}

bool is_first_order(const Formula& f) {
  return !contains(f, Kind::ExistsRel) && !contains(f, Kind::ForallRel);
}

namespace {

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  if (!f) return;
  auto use = [&](const std::string& v) {
    if (!bound.count(v)) out.insert(v);
  };
  switch (f.kind()) {
    case Kind::Pred:
    case Kind::Eq:
      for (auto& v : f.vars()) use(v);
      return;
    case Kind::Acyclic:
      return;
    case Kind::Lfp: {
      for (auto& v : f.args()) use(v);
      std::vector<std::string> added;
      for (auto& v : f.vars())
        if (bound.insert(v).second) added.push_back(v);
      collect_free(f.lhs(), bound, out);
      for (auto& v : added) bound.erase(v);
      return;
    }
    default:
      break;
  }
  if (is_quantifier(f.kind())) {
    bool added = bound.insert(f.var()).second;
    collect_free(f.lhs(), bound, out);
    if (added) bound.erase(f.var());
    return;
  }
  collect_free(f.lhs(), bound, out);
  collect_free(f.rhs(), bound, out);
}

void collect_preds(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  if (!f) return;
  switch (f.kind()) {
    case Kind::Pred:
      if (!bound.count(f.name())) out.insert(f.name());
      return;
    case Kind::Acyclic:
      for (auto& r : f.vars())
        if (!bound.count(r)) out.insert(r);
      return;
    case Kind::Lfp:
    case Kind::ExistsRel:
    case Kind::ForallRel: {
      bool added = bound.insert(f.name()).second;
      collect_preds(f.lhs(), bound, out);
      if (added) bound.erase(f.name());
      return;
    }
    default:
      collect_preds(f.lhs(), bound, out);
      collect_preds(f.rhs(), bound, out);
  }
}

std::string fresh_variant(const std::string& base, const std::set<std::string>& avoid) {
  for (int i = 1;; ++i) {
    std::string c = base + std::to_string(i);
    if (!avoid.count(c)) return c;
  }
}

Formula with_children(const Formula& f, Formula l, Formula r) {
  if (l.get() == f.lhs().get() && r.get() == f.rhs().get()) return f;
  Node n = f.node();
  n.lhs = std::move(l);
  n.rhs = std::move(r);
  return Formula(std::make_shared<const Node>(std::move(n)));
}

}  // namespace

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> free_predicates(const Formula& f) {
  std::set<std::string> bound, out;
  collect_preds(f, bound, out);
  return out;
}

Formula rename_free(const Formula& f, const std::string& from, const std::string& to) {
  if (!f || from == to) return f;
  auto sub = [&](const std::vector<std::string>& vs) {
    std::vector<std::string> out = vs;
    for (auto& v : out)
      if (v == from) v = to;
    return out;
  };
  switch (f.kind()) {
    case Kind::Pred: {
      Node n = f.node();
      n.vars = sub(n.vars);
      return Formula(std::make_shared<const Node>(std::move(n)));
    }
    case Kind::Eq:
      return eq(f.vars()[0] == from ? to : f.vars()[0], f.vars()[1] == from ? to : f.vars()[1]);
    case Kind::Lfp: {
      Node n = f.node();
      n.args = sub(n.args);
      bool shadowed = std::find(n.vars.begin(), n.vars.end(), from) != n.vars.end();
      if (!shadowed && free_vars(f.lhs()).count(from)) {
        if (std::find(n.vars.begin(), n.vars.end(), to) != n.vars.end()) {
          // formal captures `to`: rename the formal first
          std::set<std::string> avoid = free_vars(f.lhs());
          avoid.insert(to);
          avoid.insert(n.vars.begin(), n.vars.end());
          std::string fresh = fresh_variant(to, avoid);
          n.lhs = rename_free(n.lhs, to, fresh);
          for (auto& v : n.vars)
            if (v == to) v = fresh;
        }
        n.lhs = rename_free(n.lhs, from, to);
      }
      return Formula(std::make_shared<const Node>(std::move(n)));
    }
    default:
      break;
  }
  if (is_quantifier(f.kind())) {
    const std::string& bv = f.var();
    if (bv == from) return f;
    Formula body = f.lhs();
    std::string newbv = bv;
    if (bv == to && free_vars(body).count(from)) {
      std::set<std::string> avoid = free_vars(body);
      avoid.insert(to);
      avoid.insert(from);
      newbv = fresh_variant(bv, avoid);
      body = rename_free(body, bv, newbv);
    }
    body = rename_free(body, from, to);
    Node n = f.node();
    n.vars = {newbv};
    n.lhs = body;
    return Formula(std::make_shared<const Node>(std::move(n)));
  }
  return with_children(f, rename_free(f.lhs(), from, to), rename_free(f.rhs(), from, to));
}

Formula rename_predicates(const Formula& f,
                          const std::vector<std::pair<std::string, std::string>>& map) {
  if (!f) return f;
  auto lookup = [&](const std::string& s) {
    for (auto& [a, b] : map)
      if (a == s) return b;
    return s;
  };
  switch (f.kind()) {
    case Kind::Pred: {
      Node n = f.node();
      n.name = lookup(n.name);
      return Formula(std::make_shared<const Node>(std::move(n)));
    }
    case Kind::Acyclic: {
      Node n = f.node();
      for (auto& r : n.vars) r = lookup(r);
      return Formula(std::make_shared<const Node>(std::move(n)));
    }
    case Kind::Lfp:
    case Kind::ExistsRel:
    case Kind::ForallRel: {
      std::vector<std::pair<std::string, std::string>> inner;
      for (auto& p : map)
        if (p.first != f.name()) inner.push_back(p);
      return with_children(f, rename_predicates(f.lhs(), inner), Formula());
    }
    default:
      return with_children(f, rename_predicates(f.lhs(), map), rename_predicates(f.rhs(), map));
  }
}

namespace {

bool positive_in(const Formula& f, const std::string& rel, bool polarity) {
  if (!f) return true;
  switch (f.kind()) {
    case Kind::Pred:
      return f.name() != rel || polarity;
    case Kind::Not:
      return positive_in(f.lhs(), rel, !polarity);
    case Kind::Implies:
      return positive_in(f.lhs(), rel, !polarity) && positive_in(f.rhs(), rel, polarity);
    case Kind::Iff:
      return positive_in(f.lhs(), rel, !polarity) && positive_in(f.lhs(), rel, polarity) &&
             positive_in(f.rhs(), rel, !polarity) && positive_in(f.rhs(), rel, polarity);
    case Kind::ExistsLeq:
      return positive_in(f.lhs(), rel, !polarity);
    case Kind::ExistsEq:
      return positive_in(f.lhs(), rel, !polarity) && positive_in(f.lhs(), rel, polarity);
    case Kind::Lfp:
    case Kind::ExistsRel:
    case Kind::ForallRel:
      if (f.name() == rel) return true;
      return positive_in(f.lhs(), rel, polarity);
    default:
      return positive_in(f.lhs(), rel, polarity) && positive_in(f.rhs(), rel, polarity);
  }
}

}  // namespace

bool lfp_positive(const Formula& f) {
  if (!f) return true;
  if (f.kind() == Kind::Lfp && !positive_in(f.lhs(), f.name(), true)) return false;
  return lfp_positive(f.lhs()) && lfp_positive(f.rhs());
}

std::size_t size(const Formula& f) {
  if (!f) return 0;
  return 1 + size(f.lhs()) + size(f.rhs());
}

}  // namespace rolelogic::fo
