#include "rolelogic/error.hpp"
#include "rolelogic/oracle.hpp"

namespace rolelogic {

namespace {

int pick(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

const std::string& any_of(std::mt19937_64& rng, const std::vector<std::string>& v) { return v[pick(rng, v.size())]; }

role::Formula role_leaf(const Signature& sig, std::mt19937_64& rng) {
  int r = pick(rng, 10);
  if (r < 4 && !sig.unaries().empty()) return role::unary(any_of(rng, sig.unaries()));
  if (r < 8 && !sig.binaries().empty()) return role::binary(any_of(rng, sig.binaries()));
  if (r == 8) return role::id();
  switch (pick(rng, 3)) {
    case 0: return role::top();
    case 1: return role::bottom();
    default: return role::emp();
  }
}

role::Formula role_core(const Signature& sig, int depth, std::mt19937_64& rng) {
  if (depth <= 0 || pick(rng, 5) == 0) return role_leaf(sig, rng);
  switch (pick(rng, 9)) {
    case 0: return role::neg(role_core(sig, depth - 1, rng));
    case 1: return role::conj(role_core(sig, depth - 1, rng), role_core(sig, depth - 1, rng));
    case 2: return role::disj(role_core(sig, depth - 1, rng), role_core(sig, depth - 1, rng));
    case 3: return role::implies(role_core(sig, depth - 1, rng), role_core(sig, depth - 1, rng));
    case 4: return role::spatial(role_core(sig, depth - 1, rng), role_core(sig, depth - 1, rng));
    case 5: return role::inv(role_core(sig, depth - 1, rng));
    case 6: return role::shift(role_core(sig, depth - 1, rng));
    default: return role::card_geq(pick(rng, 3), role_core(sig, depth - 1, rng));
  }
}

// Quantifier-free role formula used inside card nodes and record targets.
role::Formula role_body(const Signature& sig, int depth, std::mt19937_64& rng, bool unary_only) {
  if (depth <= 0 || pick(rng, 3) == 0) {
    int r = pick(rng, 8);
    if ((r < 3 || unary_only) && !sig.unaries().empty() && r != 7)
      return role::unary(any_of(rng, sig.unaries()));
    if (unary_only) return role::top();
    if (r < 5 && !sig.binaries().empty()) return role::binary(any_of(rng, sig.binaries()));
    if (r < 7 && !sig.binaries().empty()) return role::inv(role::binary(any_of(rng, sig.binaries())));
    return pick(rng, 2) ? role::id() : role::top();
  }
  switch (pick(rng, 3)) {
    case 0: return role::neg(role_body(sig, depth - 1, rng, unary_only));
    case 1:
      return role::conj(role_body(sig, depth - 1, rng, unary_only),
                        role_body(sig, depth - 1, rng, unary_only));
    default:
      return role::disj(role_body(sig, depth - 1, rng, unary_only),
                        role_body(sig, depth - 1, rng, unary_only));
  }
}

role::Bound random_bound(std::mt19937_64& rng) {
  role::BoundOp ops[] = {role::BoundOp::Eq, role::BoundOp::Le, role::BoundOp::Ge};
  return {ops[pick(rng, 3)], pick(rng, 3)};
}

role::Formula record_leaf(const Signature& sig, std::mt19937_64& rng) {
  bool have_f = !sig.binaries().empty();
  int r = pick(rng, 10);
  if (r < 2 && !sig.unaries().empty()) return role::unary(any_of(rng, sig.unaries()));
  if (r < 6 || !have_f) {
    auto body = role_body(sig, 1, rng, false);
    switch (pick(rng, 3)) {
      case 0: return role::card_geq(pick(rng, 3), body);
      case 1: return role::card_leq(pick(rng, 3), body);
      default: return role::card_eq(pick(rng, 3), body);
    }
  }
  const std::string& f = any_of(rng, sig.binaries());
  auto target = role_body(sig, 1, rng, true);
  switch (r) {
    case 6: return role::field(f, random_bound(rng), target);
    case 7: return role::multifield(f, target);
    case 8: return role::slot(target, random_bound(rng), f);
    default: return role::multislot(target, f);
  }
}

role::Formula star_free(const Signature& sig, int depth, std::mt19937_64& rng) {
  if (depth <= 0 || pick(rng, 3) == 0) return record_leaf(sig, rng);
  switch (pick(rng, 4)) {
    case 0: return role::neg(star_free(sig, depth - 1, rng));
    case 1: return role::conj(star_free(sig, depth - 1, rng), star_free(sig, depth - 1, rng));
    case 2: return role::disj(star_free(sig, depth - 1, rng), star_free(sig, depth - 1, rng));
    default: return role::implies(star_free(sig, depth - 1, rng), star_free(sig, depth - 1, rng));
  }
}

// Atom over the given variables.
fo::Formula fo_atom(const Signature& sig, const std::vector<std::string>& vs, std::mt19937_64& rng) {
  int r = pick(rng, 10);
  if (r < 4 && !sig.unaries().empty()) return fo::pred(any_of(rng, sig.unaries()), any_of(rng, vs));
  if (r < 9 && !sig.binaries().empty())
    return fo::pred(any_of(rng, sig.binaries()), any_of(rng, vs), any_of(rng, vs));
  if (vs.size() > 1) return fo::eq(vs[0], vs[1 + pick(rng, vs.size() - 1)]);
  return pick(rng, 2) ? fo::top() : fo::bottom();
}

fo::Formula fo_qf(const Signature& sig, const std::vector<std::string>& vs, int depth, std::mt19937_64& rng) {
  if (depth <= 0 || pick(rng, 3) == 0) return fo_atom(sig, vs, rng);
  switch (pick(rng, 4)) {
    case 0: return fo::neg(fo_qf(sig, vs, depth - 1, rng));
    case 1: return fo::conj(fo_qf(sig, vs, depth - 1, rng), fo_qf(sig, vs, depth - 1, rng));
    case 2: return fo::disj(fo_qf(sig, vs, depth - 1, rng), fo_qf(sig, vs, depth - 1, rng));
    default: return fo::implies(fo_qf(sig, vs, depth - 1, rng), fo_qf(sig, vs, depth - 1, rng));
  }
}

fo::Formula fo_quantified(const Signature& sig, const std::vector<std::string>& vars, std::mt19937_64& rng) {
  std::string x = "x";
  for (int i = 0; std::find(vars.begin(), vars.end(), x) != vars.end(); ++i) x = "z" + std::to_string(i);
  std::vector<std::string> vs{x};
  vs.insert(vs.end(), vars.begin(), vars.end());
  fo::Formula body = fo_qf(sig, vs, 2, rng);
  switch (pick(rng, 4)) {
    case 0: return fo::exists_geq(1 + pick(rng, 3), x, body);
    case 1: return fo::exists_eq(pick(rng, 3), x, body);
    case 2: return fo::exists_leq(pick(rng, 3), x, body);
    default: return fo::forall(x, body);
  }
}

fo::Formula fo_skeleton(const Signature& sig, int depth, std::mt19937_64& rng,
                        const std::vector<std::string>& vars) {
  if (depth <= 0 || pick(rng, 4) == 0) {
    if (vars.empty() || pick(rng, 2)) return fo_quantified(sig, vars, rng);
    return fo_atom(sig, vars, rng);
  }
  switch (pick(rng, 5)) {
    case 0: return fo::neg(fo_skeleton(sig, depth - 1, rng, vars));
    case 1: return fo::conj(fo_skeleton(sig, depth - 1, rng, vars), fo_skeleton(sig, depth - 1, rng, vars));
    case 2: return fo::disj(fo_skeleton(sig, depth - 1, rng, vars), fo_skeleton(sig, depth - 1, rng, vars));
    case 3: return fo::implies(fo_skeleton(sig, depth - 1, rng, vars), fo_skeleton(sig, depth - 1, rng, vars));
    default: return fo::iff(fo_skeleton(sig, depth - 1, rng, vars), fo_skeleton(sig, depth - 1, rng, vars));
  }
}

}  // namespace

role::Formula random_role(const Signature& sig, int depth, std::mt19937_64& rng, Profile profile) {
  switch (profile) {
    case Profile::RoleCore: return role_core(sig, depth, rng);
    case Profile::StarFreeEligible: return star_free(sig, depth, rng);
    default: throw PreconditionError("random_role: profile gives first-order formulas");
  }
}

fo::Formula random_fo_depth1(const Signature& sig, int depth, std::mt19937_64& rng,
                             const std::vector<std::string>& vars) {
  return fo_skeleton(sig, depth, rng, vars);
}

AnyFormula random_formula(const Signature& sig, int depth, std::uint64_t seed, Profile profile) {
  std::mt19937_64 rng(seed);
  if (profile == Profile::FoDepth1) return random_fo_depth1(sig, depth, rng);
  return random_role(sig, depth, rng, profile);
}

}  // namespace rolelogic
