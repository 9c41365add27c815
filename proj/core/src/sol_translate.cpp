#include <set>

#include "rolelogic/error.hpp"
#include "rolelogic/sol_translate.hpp"

namespace rolelogic {

Signature ExtendedSignature::extended() const {
  Signature s = base;
  for (const auto& c : copies) {
    if (base.has_unary(c.base)) {
      s.add_unary(c.left);
      s.add_unary(c.right);
    } else {
      s.add_binary(c.left);
      s.add_binary(c.right);
    }
  }
  return s;
}

namespace {

void collect_names(const fo::Formula& f, std::set<std::string>& out) {
  using fo::Kind;
  switch (f.kind()) {
    case Kind::Pred:
    case Kind::Lfp:
    case Kind::ExistsRel:
    case Kind::ForallRel:
      out.insert(f.name());
      break;
    case Kind::Acyclic:
      out.insert(f.vars().begin(), f.vars().end());
      break;
    default:
      break;
  }
  if (f.lhs()) collect_names(f.lhs(), out);
  if (f.rhs()) collect_names(f.rhs(), out);
}

fo::Formula rebuild(const fo::Formula& f, fo::Formula lhs, fo::Formula rhs) {
  fo::Node n = f.node();
  n.lhs = std::move(lhs);
  n.rhs = std::move(rhs);
  return fo::Formula(std::make_shared<const fo::Node>(std::move(n)));
}

class Translator {
 public:
  Translator(const Signature& sig, const fo::Formula& f, bool second_order)
      : sig_(sig), second_order_(second_order) {
    for (const auto& u : sig.unaries()) used_.insert(u);
    for (const auto& b : sig.binaries()) used_.insert(b);
    collect_names(f, used_);
  }

  fo::Formula run(const fo::Formula& f) {
    using fo::Kind;
    switch (f.kind()) {
      case Kind::Spatial:
        return spatial(f);
      case Kind::Lfp:
        if (!second_order_) throw PreconditionError("btr_reduce: fixpoint outside the supported fragment");
        return lfp(f);
      default:
        if (!f.lhs()) return f;
        return rebuild(f, run(f.lhs()), f.rhs() ? run(f.rhs()) : f.rhs());
    }
  }

  std::vector<PrimedCopy> copies;

 private:
  std::string fresh(const std::string& base) {
    for (int k = 1;; ++k) {
      std::string name = base + "__" + std::to_string(k);
      if (used_.insert(name).second) return name;
    }
  }

  fo::Formula spatial(const fo::Formula& f) {
    std::vector<PrimedCopy> mine;
    std::vector<std::pair<std::string, std::string>> left, right;
    std::vector<fo::Formula> parts;
    auto add = [&](const std::string& p, bool unary) {
      if (!sig_.splittable(p)) return;
      PrimedCopy c{p, fresh(p), fresh(p)};
      left.emplace_back(p, c.left);
      right.emplace_back(p, c.right);
      std::vector<std::string> xs = unary ? std::vector<std::string>{"x"}
                                          : std::vector<std::string>{"x", "y"};
      fo::Formula split = fo::conj(
          fo::iff(fo::pred(p, xs), fo::disj(fo::pred(c.left, xs), fo::pred(c.right, xs))),
          fo::neg(fo::conj(fo::pred(c.left, xs), fo::pred(c.right, xs))));
      for (auto it = xs.rbegin(); it != xs.rend(); ++it) split = fo::forall(*it, split);
      parts.push_back(split);
      mine.push_back(std::move(c));
    };
    for (const auto& u : sig_.unaries()) add(u, true);
    for (const auto& b : sig_.binaries()) add(b, false);

    parts.push_back(fo::rename_predicates(run(f.lhs()), left));
    parts.push_back(fo::rename_predicates(run(f.rhs()), right));
    fo::Formula out = fo::conj_all(parts);
    if (second_order_) {
      for (auto it = mine.rbegin(); it != mine.rend(); ++it) {
        int arity = sig_.has_unary(it->base) ? 1 : 2;
        out = fo::exists_rel(it->right, arity, out);
        out = fo::exists_rel(it->left, arity, out);
      }
    }
    copies.insert(copies.end(), mine.begin(), mine.end());
    return out;
  }

  fo::Formula lfp(const fo::Formula& f) {
    const std::string& rel = f.name();
    const auto& xs = f.vars();
    fo::Formula fix = fo::iff(run(f.body()), fo::pred(rel, xs));
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) fix = fo::forall(*it, fix);
    return fo::forall_rel(rel, static_cast<int>(xs.size()),
                          fo::implies(fix, fo::pred(rel, f.args())));
  }

  const Signature& sig_;
  bool second_order_;
  std::set<std::string> used_;
};

bool is_first_order_leaf(const fo::Formula& f) {
  return !fo::contains(f, fo::Kind::Spatial) && !fo::contains(f, fo::Kind::Lfp) &&
         !fo::contains(f, fo::Kind::Acyclic) && fo::is_first_order(f);
}

}  // namespace

fo::Formula to_sol(const fo::Formula& f, const Signature& sig) {
  Translator t(sig, f, true);
  return t.run(f);
}

bool is_interesting(const fo::Formula& f) {
  if (is_first_order_leaf(f)) return true;
  if (f.kind() == fo::Kind::Spatial || f.kind() == fo::Kind::Or)
    return is_interesting(f.lhs()) && is_interesting(f.rhs());
  return false;
}

std::pair<fo::Formula, ExtendedSignature> btr_reduce(const fo::Formula& f, const Signature& sig) {
  if (!is_interesting(f))
    throw PreconditionError("btr_reduce: formula is outside the spatial/disjunction fragment");
  Translator t(sig, f, false);
  fo::Formula out = t.run(f);
  return {out, ExtendedSignature{sig, t.copies}};
}

}  // namespace rolelogic
