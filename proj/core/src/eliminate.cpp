#include <algorithm>
#include <set>

#include "rolelogic/error.hpp"
#include "rolelogic/records.hpp"
#include "rolelogic/rl2_to_fo.hpp"
#include "rolelogic/spatial_elim.hpp"

namespace rolelogic {

namespace {

fo::Formula rebuild(const fo::Formula& f, fo::Formula lhs, fo::Formula rhs) {
  fo::Node n = f.node();
  n.lhs = std::move(lhs);
  n.rhs = std::move(rhs);
  return fo::Formula(std::make_shared<const fo::Node>(std::move(n)));
}

void check_operand(const fo::Formula& f, const Signature& sig) {
  if (fo::contains(f, fo::Kind::Acyclic)) throw PreconditionError("acyclic under a spatial conjunction");
  if (fo::contains(f, fo::Kind::Lfp)) throw PreconditionError("fixpoint under a spatial conjunction");
  if (!fo::is_first_order(f)) throw PreconditionError("second-order quantifier under a spatial conjunction");
  for (const auto& p : fo::free_predicates(f))
    if (!sig.splittable(p))
      throw PreconditionError("non-splittable predicate " + p + " under a spatial conjunction");
  if (metrics(f).depth > 1)
    throw PreconditionError("spatial operand of quantifier depth above one is not in the decidable fragment");
}

class Eliminator {
 public:
  Eliminator(const Signature& sig, const EliminationOptions& opts, EliminationTrace* trace)
      : sig_(sig), opts_(opts), trace_(trace) {}

  fo::Formula run(const fo::Formula& f) {
    if (!fo::contains(f, fo::Kind::Spatial)) return f;
    if (f.kind() != fo::Kind::Spatial)
      return rebuild(f, f.lhs() ? run(f.lhs()) : f.lhs(), f.rhs() ? run(f.rhs()) : f.rhs());
    return combine(run(f.lhs()), run(f.rhs()));
  }

 private:
  fo::Formula combine(const fo::Formula& a, const fo::Formula& b) {
    check_operand(a, sig_);
    check_operand(b, sig_);
    std::set<std::string> fv = fo::free_vars(a);
    for (const auto& v : fo::free_vars(b)) fv.insert(v);
    std::vector<std::string> vars(fv.begin(), fv.end());

    NfOptions nf;
    nf.count_limit = opts_.count_limit;
    Relevance rel = Relevance::full(sig_);
    if (opts_.project) {
      rel = Relevance::of(a, sig_);
      rel |= Relevance::of(b, sig_);
    }
    nf.relevance = rel;
    auto left = depth_one_nf(a, sig_, vars, nf);
    auto right = depth_one_nf(b, sig_, vars, nf);

    std::vector<GenStar> result;
    std::set<GenStar> seen;
    for (const auto& l : left)
      for (const auto& r : right)
        for (auto& s : combine_stars(l, r))
          if (seen.insert(s).second) result.push_back(std::move(s));

    fo::Formula out = stars_to_fo(result);
    if (trace_) trace_->steps.push_back({a, b, vars, std::move(left), std::move(right), std::move(result)});
    return out;
  }

  const Signature& sig_;
  const EliminationOptions& opts_;
  EliminationTrace* trace_;
};

role::Formula drop_emp(const role::Formula& f) {
  if (!f) return f;
  role::Formula l = drop_emp(f.lhs()), r = drop_emp(f.rhs());
  if (f.kind() == role::Kind::Spatial) {
    if (l.kind() == role::Kind::Emp) return r;
    if (r.kind() == role::Kind::Emp) return l;
  }
  if (l == f.lhs() && r == f.rhs()) return f;
  role::Node n = f.node();
  n.lhs = l;
  n.rhs = r;
  return role::Formula(std::make_shared<const role::Node>(std::move(n)));
}

}  // namespace

fo::Formula eliminate_spatial(const fo::Formula& f, const Signature& sig,
                              const EliminationOptions& opts, EliminationTrace* trace) {
  Eliminator e(sig, opts, trace);
  return e.run(f);
}

fo::Formula eliminate_spatial(const role::Formula& f, const Signature& sig,
                              const EliminationOptions& opts, EliminationTrace* trace) {
  role::Formula core = drop_emp(desugar(f, sig));
  return eliminate_spatial(rl2_to_fo(core, "x", "y", sig), sig, opts, trace);
}

}  // namespace rolelogic
