#include "rolelogic/records.hpp"

#include "rolelogic/error.hpp"

namespace rolelogic {

namespace {

using role::Kind;

void require_binary(const Signature& sig, const std::string& f) {
  if (!sig.has_binary(f)) throw SignatureError("undeclared binary predicate '" + f + "'");
}

std::vector<role::Formula> others(const Signature& sig, const std::string& f) {
  std::vector<role::Formula> out;
  for (auto& g : sig.binaries())
    if (g != f) out.push_back(role::binary(g));
  return out;
}

role::Formula bounded_card(role::Bound b, role::Formula body) {
  switch (b.op) {
    case role::BoundOp::Eq: return role::card_eq(b.k, std::move(body));
    case role::BoundOp::Le: return role::card_leq(b.k, std::move(body));
    case role::BoundOp::Ge: return role::card_geq(b.k, std::move(body));
  }
  return body;
}

// card=0 (fc(f) | (f & !A)), dropping fc when it is empty.
role::Formula multi(const Signature& sig, const std::string& f, const role::Formula& a,
                    bool inverse) {
  auto wrap = [&](role::Formula g) { return inverse ? role::inv(g) : g; };
  std::vector<role::Formula> parts;
  for (auto& g : others(sig, f)) parts.push_back(wrap(g));
  parts.push_back(role::conj(wrap(role::binary(f)), role::neg(a)));
  return role::card_eq(0, role::disj_all(parts));
}

role::Formula expand(const role::Formula& f, const Signature& sig) {
  switch (f.kind()) {
    case Kind::FieldComplement: {
      require_binary(sig, f.name());
      return role::disj_all(others(sig, f.name()));
    }
    case Kind::Edges: {
      if (sig.binaries().empty()) throw PreconditionError("edges with no binary predicates");
      std::vector<role::Formula> all;
      for (auto& g : sig.binaries()) all.push_back(role::binary(g));
      return role::disj_all(all);
    }
    case Kind::Field: {
      require_binary(sig, f.name());
      role::Formula a = expand(f.body(), sig);
      return role::conj(bounded_card(f.bound(), role::conj(a, role::binary(f.name()))),
                        multi(sig, f.name(), a, false));
    }
    case Kind::Multifield: {
      require_binary(sig, f.name());
      return multi(sig, f.name(), expand(f.body(), sig), false);
    }
    case Kind::Slot: {
      require_binary(sig, f.name());
      role::Formula a = expand(f.body(), sig);
      return role::conj(
          bounded_card(f.bound(), role::conj(a, role::inv(role::binary(f.name())))),
          multi(sig, f.name(), a, true));
    }
    case Kind::Multislot: {
      require_binary(sig, f.name());
      return multi(sig, f.name(), expand(f.body(), sig), true);
    }
    case Kind::Not: return role::neg(expand(f.body(), sig));
    case Kind::Inv: return role::inv(expand(f.body(), sig));
    case Kind::Shift: return role::shift(expand(f.body(), sig));
    case Kind::Box: return role::box(expand(f.body(), sig));
    case Kind::CardGeq: return role::card_geq(f.k(), expand(f.body(), sig));
    case Kind::CardLeq: return role::card_leq(f.k(), expand(f.body(), sig));
    case Kind::CardEq: return role::card_eq(f.k(), expand(f.body(), sig));
    case Kind::And: return role::conj(expand(f.lhs(), sig), expand(f.rhs(), sig));
    case Kind::Or: return role::disj(expand(f.lhs(), sig), expand(f.rhs(), sig));
    case Kind::Implies: return role::implies(expand(f.lhs(), sig), expand(f.rhs(), sig));
    case Kind::Spatial: return role::spatial(expand(f.lhs(), sig), expand(f.rhs(), sig));
    case Kind::Acyclic:
      for (auto& g : f.names()) require_binary(sig, g);
      return f;
    default: return f;
  }
}

role::Formula reduce(const role::Formula& f) {
  switch (f.kind()) {
    case Kind::Not: return role::neg(reduce(f.body()));
    case Kind::Inv: return role::inv(reduce(f.body()));
    case Kind::Shift: return role::shift(reduce(f.body()));
    case Kind::Box: return role::neg(role::card_geq(1, role::neg(reduce(f.body()))));
    case Kind::CardGeq: return role::card_geq(f.k(), reduce(f.body()));
    case Kind::CardLeq: return role::neg(role::card_geq(f.k() + 1, reduce(f.body())));
    case Kind::CardEq: {
      role::Formula g = reduce(f.body());
      role::Formula upper = role::neg(role::card_geq(f.k() + 1, g));
      if (f.k() == 0) return upper;
      return role::conj(role::card_geq(f.k(), g), upper);
    }
    case Kind::And: return role::conj(reduce(f.lhs()), reduce(f.rhs()));
    case Kind::Or: return role::disj(reduce(f.lhs()), reduce(f.rhs()));
    case Kind::Implies: return role::implies(reduce(f.lhs()), reduce(f.rhs()));
    case Kind::Spatial: return role::spatial(reduce(f.lhs()), reduce(f.rhs()));
    default: return f;
  }
}

role::Formula fields_part(const RoleDecl& d, const Signature& sig) {
  std::vector<role::Formula> parts;
  for (auto& [f, s] : d.fields) {
    require_binary(sig, f);
    parts.push_back(role::field(f, role::Bound{}, s));
  }
  return role::spatial_all(parts);
}

role::Formula slots_part(const RoleDecl& d, const Signature& sig) {
  std::vector<role::Formula> parts;
  for (auto& [s, f] : d.slots) {
    require_binary(sig, f);
    parts.push_back(role::slot(s, role::Bound{}, f));
  }
  return role::spatial_all(parts);
}

void common_parts(const RoleDecl& d, const Signature& sig, std::vector<role::Formula>& parts) {
  if (!d.identities.empty()) {
    std::vector<role::Formula> ids;
    for (auto& [f, g] : d.identities) {
      require_binary(sig, f);
      require_binary(sig, g);
      ids.push_back(role::box(role::implies(role::binary(f), role::inv(role::binary(g)))));
    }
    parts.push_back(role::conj_all(ids));
  }
  if (!d.acyclic.empty()) {
    for (auto& f : d.acyclic) require_binary(sig, f);
    parts.push_back(role::acyclic(d.acyclic));
  }
}

}  // namespace

role::Formula expand_records(const role::Formula& f, const Signature& sig) {
  return expand(f, sig);
}

role::Formula desugar(const role::Formula& f, const Signature& sig) {
  return reduce(expand(f, sig));
}

role::Formula translate_role(const RoleDecl& d, const Signature& sig) {
  std::vector<role::Formula> parts;
  if (!d.fields.empty()) parts.push_back(fields_part(d, sig));
  if (!d.slots.empty()) parts.push_back(slots_part(d, sig));
  common_parts(d, sig, parts);
  return role::conj_all(parts);
}

role::Formula translate_simultaneous(const RoleDecl& d, const Signature& sig) {
  std::vector<role::Formula> parts;
  if (!d.fields.empty()) {
    std::vector<role::Formula> fs;
    for (auto& [f, s] : d.fields) fs.push_back(role::binary(f));
    parts.push_back(role::spatial(fields_part(d, sig), role::card_eq(0, role::disj_all(fs))));
  }
  if (!d.slots.empty()) {
    std::vector<role::Formula> gs;
    for (auto& g : d.header) {
      require_binary(sig, g);
      gs.push_back(role::inv(role::binary(g)));
    }
    parts.push_back(role::spatial(slots_part(d, sig), role::card_eq(0, role::disj_all(gs))));
  }
  common_parts(d, sig, parts);
  return role::conj_all(parts);
}

role::Formula translate(const RoleDecl& d, const Signature& sig) {
  return d.simultaneous ? translate_simultaneous(d, sig) : translate_role(d, sig);
}

}  // namespace rolelogic
