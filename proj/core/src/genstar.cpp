#include <algorithm>
#include <tuple>

#include "nf_internal.hpp"
#include "rolelogic/error.hpp"

namespace rolelogic {

std::vector<int> GenStar::reps() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < rep.size(); ++i)
    if (rep[i] == static_cast<int>(i)) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<std::string> GenStar::rep_names() const {
  std::vector<std::string> out;
  for (int r : reps()) out.push_back(vars[r]);
  return out;
}

EqPrefix GenStar::prefix() const {
  EqPrefix p;
  for (std::size_t i = 0; i < rep.size(); ++i)
    if (rep[i] != static_cast<int>(i)) p.assignments.emplace_back(vars[i], vars[rep[i]]);
  return p;
}

Count GenStar::count(Extension t) const {
  auto it = gamma.find(t);
  return it == gamma.end() ? Count::at_least(0) : it->second;
}

void GenStar::set(Extension t, Count c) {
  if (c.trivial())
    gamma.erase(t);
  else
    gamma[t] = c;
}

namespace {

auto universe_key(const StarUniverse& u) {
  const auto& r = u.relevance();
  return std::make_tuple(u.slots(), r.unary_var, r.unary_ext, r.binary_var, r.loop, r.out, r.in);
}

}  // namespace

bool operator==(const GenStar& a, const GenStar& b) {
  return a.vars == b.vars && a.rep == b.rep && a.gccat == b.gccat && a.gamma == b.gamma &&
         (a.universe == b.universe || *a.universe == *b.universe);
}

bool operator<(const GenStar& a, const GenStar& b) {
  if (a.vars != b.vars) return a.vars < b.vars;
  if (a.rep != b.rep) return a.rep < b.rep;
  if (a.universe != b.universe) {
    auto ka = universe_key(*a.universe);
    auto kb = universe_key(*b.universe);
    if (ka != kb) return ka < kb;
  }
  if (a.gccat != b.gccat) return a.gccat < b.gccat;
  return a.gamma < b.gamma;
}

bool star_eval(const GenStar& s, const Model& m, const std::vector<int>& values) {
  if (values.size() != s.vars.size()) throw PreconditionError("star_eval: wrong number of values");
  const auto& u = *s.universe;
  const auto reps = s.reps();
  for (std::size_t i = 0; i < s.rep.size(); ++i)
    if (values[i] != values[s.rep[i]]) return false;
  std::vector<int> slot(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) slot[i] = values[reps[i]];
  for (std::size_t i = 0; i < slot.size(); ++i)
    for (std::size_t j = i + 1; j < slot.size(); ++j)
      if (slot[i] == slot[j]) return false;

  // Model index of each atom's predicate, -1 when the model lacks it.
  const Signature& ms = m.sig();
  auto index_of = [&](const std::vector<StarAtom>& atoms) {
    std::vector<int> idx;
    idx.reserve(atoms.size());
    for (const auto& a : atoms)
      idx.push_back(a.binary ? ms.binary_index(u.sig().binaries()[a.pred])
                             : ms.unary_index(u.sig().unaries()[a.pred]));
    return idx;
  };
  auto holds = [&](const StarAtom& a, int p, int nb) {
    if (p < 0) return false;
    auto at = [&](int x) { return x == kNeighbor ? nb : slot[x]; };
    return a.binary ? m.binary(p, at(a.a), at(a.b)) : m.unary(p, at(a.a));
  };

  std::uint64_t g = 0;
  const auto& va = u.var_atoms();
  const auto va_idx = index_of(va);
  for (std::size_t i = 0; i < va.size(); ++i)
    if (holds(va[i], va_idx[i], -1)) g |= std::uint64_t{1} << i;
  if (g != s.gccat) return false;

  std::vector<std::pair<Extension, int>> counts;
  const auto& ea = u.ext_atoms();
  const auto ea_idx = index_of(ea);
  for (int d = 0; d < m.size(); ++d) {
    if (std::find(slot.begin(), slot.end(), d) != slot.end()) continue;
    Extension t = 0;
    for (std::size_t i = 0; i < ea.size(); ++i)
      if (holds(ea[i], ea_idx[i], d)) t |= Extension{1} << i;
    auto it = std::find_if(counts.begin(), counts.end(), [&](const auto& c) { return c.first == t; });
    if (it == counts.end())
      counts.emplace_back(t, 1);
    else
      ++it->second;
  }
  for (const auto& [t, c] : s.gamma) {
    auto it = std::find_if(counts.begin(), counts.end(), [&](const auto& e) { return e.first == t; });
    if (!c.admits(it == counts.end() ? 0 : it->second)) return false;
  }
  return true;
}

bool star_eval(const GenStar& s, const Model& m, const Valuation& v) {
  std::vector<int> values;
  for (const auto& x : s.vars) {
    auto it = v.find(x);
    if (it == v.end()) throw PreconditionError("star_eval: unbound variable " + x);
    values.push_back(it->second);
  }
  return star_eval(s, m, values);
}

namespace {

std::string fresh(const std::vector<std::string>& used) {
  std::string z = "z";
  for (int i = 1; std::find(used.begin(), used.end(), z) != used.end(); ++i)
    z = "z" + std::to_string(i);
  return z;
}

}  // namespace

fo::Formula star_to_fo(const GenStar& s) {
  const auto& u = *s.universe;
  const auto names = s.rep_names();
  const std::string z = fresh(s.vars);
  std::vector<fo::Formula> parts;
  for (const auto& [y, x] : s.prefix().assignments) parts.push_back(fo::eq(y, x));
  auto lits = detail::gccat_literals(u, s.gccat, names);
  if (lits.kind() != fo::Kind::True) parts.push_back(lits);

  auto body = [&](fo::Formula cube) {
    std::vector<fo::Formula> b;
    for (const auto& r : names) b.push_back(fo::neg(fo::eq(z, r)));
    if (cube.kind() != fo::Kind::True) b.push_back(cube);
    return fo::conj_all(b);
  };
  std::vector<fo::Formula> zero;
  for (const auto& [t, c] : s.gamma) {
    auto cube = extension_to_fo(u, t, z, names);
    if (c.kind == Count::Kind::Exact && c.n == 0)
      zero.push_back(cube);
    else if (c.kind == Count::Kind::Exact)
      parts.push_back(fo::exists_eq(c.n, z, body(cube)));
    else
      parts.push_back(fo::exists_geq(c.n, z, body(cube)));
  }
  if (!zero.empty()) parts.push_back(fo::exists_eq(0, z, body(fo::disj_all(zero))));
  return fo::conj_all(parts);
}

fo::Formula stars_to_fo(const std::vector<GenStar>& stars) {
  std::vector<fo::Formula> parts;
  for (const auto& s : stars) parts.push_back(star_to_fo(s));
  return fo::disj_all(parts);
}

}  // namespace rolelogic
