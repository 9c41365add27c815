#include "support.hpp"

#include <algorithm>

namespace rolelogic::testing {

namespace {

int pick(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

}  // namespace

std::vector<Model> all_models(const Signature& sig, int size) {
  std::vector<Model> out;
  enumerate_models(sig, size, [&](const Model& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::vector<std::vector<int>> all_values(int vars, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(vars, 0);
  while (true) {
    out.push_back(v);
    int i = vars;
    while (i > 0) {
      if (++v[i - 1] < n) break;
      v[i - 1] = 0;
      --i;
    }
    if (i == 0) return out;
  }
}

GenStar random_star(const std::shared_ptr<const StarUniverse>& u, const std::vector<std::string>& vars,
                    std::mt19937_64& rng, int max_count) {
  GenStar s{vars, {}, u, 0, {}};
  for (std::size_t i = 0; i < vars.size(); ++i) s.rep.push_back(static_cast<int>(i));
  s.gccat = rng() & ((std::uint64_t{1} << u->var_atoms().size()) - 1);
  for (Extension t = 0; t < u->extension_count(); ++t) {
    switch (pick(rng, 6)) {
      case 0:
      case 1:
      case 2:
        break;  // default
      case 3:
        s.set(t, Count::exact(0));
        break;
      case 4:
        s.set(t, Count::exact(pick(rng, max_count + 1)));
        break;
      default:
        s.set(t, Count::at_least(pick(rng, max_count + 1)));
    }
  }
  return s;
}

namespace {

fo::Formula star_atom_fo(const StarUniverse& u, const StarAtom& a, const std::string& z,
                         const std::vector<std::string>& names) {
  auto at = [&](int slot) { return slot == kNeighbor ? z : names[slot]; };
  if (!a.binary) return fo::pred(u.sig().unaries()[a.pred], at(a.a));
  return fo::pred(u.sig().binaries()[a.pred], at(a.a), at(a.b));
}

}  // namespace

fo::Formula spatial_star_formula(const SpatialStar& s, const std::string& b1, const std::string& b2) {
  const StarUniverse& u = *s.universe;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < s.rep.size(); ++i)
    if (s.rep[i] == static_cast<int>(i)) names.push_back(s.vars[i]);
  const std::string z = "z";

  std::vector<fo::Formula> nb_parts;
  for (const auto& r : names) nb_parts.push_back(fo::neg(fo::eq(z, r)));
  fo::Formula nb = fo::conj_all(nb_parts);
  std::vector<fo::Formula> touch{fo::pred(b1, z), fo::pred(b2, z)};
  for (const auto& a : u.ext_atoms()) touch.push_back(star_atom_fo(u, a, z, names));
  fo::Formula touched = fo::conj(nb, fo::disj_all(touch));

  std::vector<fo::Formula> no_var;
  std::vector<fo::Formula> gccat;
  for (std::size_t i = 0; i < u.var_atoms().size(); ++i) {
    fo::Formula a = star_atom_fo(u, u.var_atoms()[i], "", names);
    no_var.push_back(fo::neg(a));
    gccat.push_back(((s.gccat >> i) & 1u) ? a : fo::neg(a));
  }
  auto type = [&](Extension t, Marker m) {
    std::vector<fo::Formula> lits;
    lits.push_back(extension_to_fo(u, t, z, names));
    fo::Formula p1 = fo::pred(b1, z), p2 = fo::pred(b2, z);
    lits.push_back(static_cast<int>(m) & 1 ? p1 : fo::neg(p1));
    lits.push_back(static_cast<int>(m) & 2 ? p2 : fo::neg(p2));
    return fo::conj_all(lits);
  };

  std::vector<fo::Formula> parts;
  parts.push_back(fo::conj(fo::conj_all(gccat), fo::forall(z, fo::neg(touched))));
  for (const auto& a : s.atoms) {
    fo::Formula only = fo::forall(z, fo::implies(touched, type(a.ext, a.marker)));
    fo::Formula p = fo::conj(fo::conj_all(no_var), only);
    if (a.kind == SpatialAtom::Kind::One) p = fo::conj(p, fo::exists_eq(1, z, touched));
    parts.push_back(p);
  }
  fo::Formula chain = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) chain = fo::spatial(chain, parts[i]);

  std::vector<fo::Formula> head;
  for (std::size_t i = 0; i < s.rep.size(); ++i)
    if (s.rep[i] != static_cast<int>(i)) head.push_back(fo::eq(s.vars[i], s.vars[s.rep[i]]));
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j) head.push_back(fo::neg(fo::eq(names[i], names[j])));
  head.push_back(chain);
  return fo::conj_all(head);
}

Model marked_model(const Model& m, const Signature& sig, const std::vector<int>& image, Marker marks,
                   const std::string& b1, const std::string& b2) {
  Model out(sig, m.domain());
  for (const auto& u : m.sig().unaries())
    for (int d = 0; d < m.size(); ++d)
      if (m.holds(u, d)) out.set_unary(sig.unary_index(u), d);
  for (const auto& f : m.sig().binaries())
    for (int a = 0; a < m.size(); ++a)
      for (int b = 0; b < m.size(); ++b)
        if (m.holds(f, a, b)) out.set_binary(sig.binary_index(f), a, b);
  for (int d = 0; d < m.size(); ++d) {
    if (std::find(image.begin(), image.end(), d) != image.end()) continue;
    if (static_cast<int>(marks) & 1) out.set_unary(sig.unary_index(b1), d);
    if (static_cast<int>(marks) & 2) out.set_unary(sig.unary_index(b2), d);
  }
  return out;
}

std::vector<std::string> depth_one_catalog() {
  return {
      "true",
      "false",
      "A(x1)",
      "f(x1,x1)",
      "A(x1) & !f(x1,x1)",
      "exists x. A(x)",
      "forall x. A(x)",
      "exists>=1 x. f(x1,x)",
      "exists>=2 x. f(x1,x)",
      "exists>=3 x. f(x,x1)",
      "exists=0 x. f(x1,x)",
      "exists=1 x. f(x1,x) & A(x)",
      "exists=2 x. f(x,x1) | f(x1,x)",
      "exists<=1 x. f(x1,x)",
      "exists<=2 x. A(x) & x != x1",
      "forall x. (f(x1,x) => A(x))",
      "forall x. (f(x,x1) => f(x1,x))",
      "forall x. (x = x1 | !f(x,x))",
      "exists x. (x = x1 & A(x))",
      "exists=1 x. x = x1",
      "exists=2 x. x = x1 | f(x1,x)",
      "!(exists>=2 x. f(x1,x)) & exists x. f(x1,x)",
      "(exists x. A(x)) <=> A(x1)",
      "(exists=1 x. f(x1,x)) => !A(x1)",
      "(exists<=0 x. f(x,x1)) | (exists>=2 x. f(x,x1) & A(x))",
      "exists x. f(x,x) & !A(x)",
      "exists>=1 x. f(x1,x) & f(x,x1)",
      "forall x. (A(x) <=> f(x1,x))",
      "(exists=1 x. A(x)) & (exists=1 x. f(x1,x))",
      "!(forall x. f(x,x1)) & (exists<=1 x. !A(x))",
  };
}

namespace {

fo::Formula random_atom(const Signature& sig, const std::vector<std::string>& vs, std::mt19937_64& rng) {
  const auto& vx = vs[pick(rng, vs.size())];
  const auto& vy = vs[pick(rng, vs.size())];
  int r = pick(rng, 10);
  if (r < 4 && !sig.unaries().empty()) return fo::pred(sig.unaries()[pick(rng, sig.unaries().size())], vx);
  if (r < 9 && !sig.binaries().empty())
    return fo::pred(sig.binaries()[pick(rng, sig.binaries().size())], vx, vy);
  return fo::eq(vx, vy);
}

}  // namespace

fo::Formula random_fo(const Signature& sig, const std::vector<std::string>& vars, int qdepth, int size,
                      std::mt19937_64& rng) {
  if (size <= 0 || pick(rng, 4) == 0) {
    if (qdepth > 0 && pick(rng, 2)) {
      static const char* pool[] = {"x", "y", "z", "w", "u", "v"};
      std::string v;
      for (const char* c : pool)
        if (std::find(vars.begin(), vars.end(), c) == vars.end()) {
          v = c;
          break;
        }
      auto inner = vars;
      inner.push_back(v);
      fo::Formula body = random_fo(sig, inner, qdepth - 1, size - 1, rng);
      switch (pick(rng, 4)) {
        case 0: return fo::exists_geq(1 + pick(rng, 2), v, body);
        case 1: return fo::exists_eq(pick(rng, 2), v, body);
        case 2: return fo::exists_leq(pick(rng, 2), v, body);
        default: return fo::forall(v, body);
      }
    }
    if (vars.empty()) return pick(rng, 2) ? fo::top() : fo::bottom();
    return random_atom(sig, vars, rng);
  }
  switch (pick(rng, 4)) {
    case 0: return fo::neg(random_fo(sig, vars, qdepth, size - 1, rng));
    case 1: return fo::conj(random_fo(sig, vars, qdepth, size - 1, rng), random_fo(sig, vars, qdepth, size - 1, rng));
    case 2: return fo::disj(random_fo(sig, vars, qdepth, size - 1, rng), random_fo(sig, vars, qdepth, size - 1, rng));
    default: return fo::implies(random_fo(sig, vars, qdepth, size - 1, rng), random_fo(sig, vars, qdepth, size - 1, rng));
  }
}

fo::Formula random_single_spatial(const Signature& sig, std::mt19937_64& rng) {
  std::vector<std::string> vs{"x"};
  fo::Formula s = fo::spatial(random_fo(sig, vs, 1, 2, rng), random_fo(sig, vs, 1, 2, rng));
  switch (pick(rng, 4)) {
    case 0: return s;
    case 1: return fo::neg(s);
    case 2: return fo::conj(random_fo(sig, vs, 1, 1, rng), s);
    default: return fo::disj(s, random_fo(sig, vs, 1, 1, rng));
  }
}

fo::Formula random_interesting(const Signature& sig, int depth, std::mt19937_64& rng) {
  if (depth <= 0 || pick(rng, 4) == 0) return random_fo(sig, {}, 2, 3, rng);
  fo::Formula a = random_interesting(sig, depth - 1, rng), b = random_interesting(sig, depth - 1, rng);
  return pick(rng, 3) ? fo::spatial(a, b) : fo::disj(a, b);
}

role::Formula random_plain_role(const Signature& sig, int depth, std::mt19937_64& rng) {
  if (depth <= 0 || pick(rng, 4) == 0) {
    int r = pick(rng, 9);
    if (r < 4 && !sig.unaries().empty()) return role::unary(sig.unaries()[pick(rng, sig.unaries().size())]);
    if (r < 7 && !sig.binaries().empty()) return role::binary(sig.binaries()[pick(rng, sig.binaries().size())]);
    return r == 7 ? role::id() : role::top();
  }
  switch (pick(rng, 7)) {
    case 0: return role::neg(random_plain_role(sig, depth - 1, rng));
    case 1: return role::conj(random_plain_role(sig, depth - 1, rng), random_plain_role(sig, depth - 1, rng));
    case 2: return role::disj(random_plain_role(sig, depth - 1, rng), random_plain_role(sig, depth - 1, rng));
    case 3: return role::inv(random_plain_role(sig, depth - 1, rng));
    case 4: return role::shift(random_plain_role(sig, depth - 1, rng));
    default: return role::card_geq(pick(rng, 3), random_plain_role(sig, depth - 1, rng));
  }
}

}  // namespace rolelogic::testing
