#include "rolelogic/rl2_to_fo.hpp"

#include "rolelogic/error.hpp"

namespace rolelogic {

namespace {

std::string other(const std::string& v) { return v == "x" ? "y" : "x"; }

fo::Formula emp_formula(const Signature& sig) {
  std::vector<fo::Formula> parts;
  for (auto& a : sig.unaries())
    if (sig.splittable(a)) parts.push_back(fo::forall("x", fo::neg(fo::pred(a, "x"))));
  for (auto& f : sig.binaries())
    if (sig.splittable(f))
      parts.push_back(fo::forall("x", fo::forall("y", fo::neg(fo::pred(f, "x", "y")))));
  return fo::conj_all(parts);
}

fo::Formula tr(const role::Formula& f, const std::string& c1, const std::string& c2,
               const Signature& sig) {
  using role::Kind;
  switch (f.kind()) {
    case Kind::Unary: return fo::pred(f.name(), c1);
    case Kind::Binary: return fo::pred(f.name(), c2, c1);
    case Kind::Id: return fo::eq(c2, c1);
    case Kind::True: return fo::top();
    case Kind::False: return fo::bottom();
    case Kind::Emp: return emp_formula(sig);
    case Kind::Acyclic: return fo::acyclic(f.names());
    case Kind::Not: return fo::neg(tr(f.body(), c1, c2, sig));
    case Kind::And: return fo::conj(tr(f.lhs(), c1, c2, sig), tr(f.rhs(), c1, c2, sig));
    case Kind::Or: return fo::disj(tr(f.lhs(), c1, c2, sig), tr(f.rhs(), c1, c2, sig));
    case Kind::Implies: return fo::implies(tr(f.lhs(), c1, c2, sig), tr(f.rhs(), c1, c2, sig));
    case Kind::Spatial: return fo::spatial(tr(f.lhs(), c1, c2, sig), tr(f.rhs(), c1, c2, sig));
    case Kind::Inv: return tr(f.body(), c2, c1, sig);
    case Kind::Shift: return tr(f.body(), c2, c2, sig);
    case Kind::CardGeq: {
      std::string v = other(c1);
      return fo::exists_geq(f.k(), v, tr(f.body(), v, c1, sig));
    }
    default:
      throw PreconditionError("rl2_to_fo needs a core formula");
  }
}

}  // namespace

fo::Formula rl2_to_fo(const role::Formula& f, const std::string& c1, const std::string& c2,
                      const Signature& sig) {
  return tr(f, c1, c2, sig);
}

namespace {

Metrics measure(const fo::Formula& f) {
  using fo::Kind;
  switch (f.kind()) {
    case Kind::Pred:
    case Kind::Eq:
    case Kind::True:
    case Kind::False:
      return {};
    case Kind::Not: return measure(f.body());
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff: {
      Metrics a = measure(f.lhs()), b = measure(f.rhs());
      return {std::max(a.depth, b.depth), std::max(a.degree, b.degree)};
    }
    case Kind::ExistsGeq:
    case Kind::ExistsEq:
    case Kind::ExistsLeq:
    case Kind::Forall: {
      Metrics b = measure(f.body());
      int own = f.kind() == Kind::ExistsGeq ? std::max(f.k() - 1, 0)
                : f.kind() == Kind::Forall  ? 0
                                            : f.k();
      return {b.depth + 1, std::max(b.degree, own)};
    }
    default:
      throw PreconditionError("metrics: unsupported node (spatial, lfp, acyclic or second-order)");
  }
}

}  // namespace

Metrics metrics(const fo::Formula& f) { return measure(f); }

}  // namespace rolelogic
