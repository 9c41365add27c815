#include <algorithm>
#include <functional>

#include "rolelogic/error.hpp"
#include "rolelogic/spatial_elim.hpp"

namespace rolelogic {

SpatialStar star_to_spatial(const GenStar& s, Marker m) {
  SpatialStar out{s.vars, s.rep, s.universe, s.gccat, {}};
  for (Extension t = 0; t < s.universe->extension_count(); ++t) {
    Count c = s.count(t);
    for (int i = 0; i < c.n; ++i) out.atoms.push_back({SpatialAtom::Kind::One, t, m});
    if (c.kind == Count::Kind::AtLeast) out.atoms.push_back({SpatialAtom::Kind::Any, t, m});
  }
  std::sort(out.atoms.begin(), out.atoms.end());
  return out;
}

GenStar spatial_to_star(const SpatialStar& s) {
  std::map<Extension, int> ones;
  std::vector<bool> any(s.universe->extension_count());
  for (const auto& a : s.atoms) {
    if (a.kind == SpatialAtom::Kind::One)
      ++ones[a.ext];
    else
      any[a.ext] = true;
  }
  GenStar g{s.vars, s.rep, s.universe, s.gccat, {}};
  for (Extension t = 0; t < s.universe->extension_count(); ++t) {
    int n = ones.count(t) ? ones[t] : 0;
    g.set(t, any[t] ? Count::at_least(n) : Count::exact(n));
  }
  return g;
}

std::optional<Extension> ispand(Extension a, Extension b) {
  if (a & b) return std::nullopt;
  return a | b;
}

std::optional<Gccat> kispand(const Gccat& a, const Gccat& b) {
  if (a.vars != b.vars) throw PreconditionError("kispand: variable lists differ");
  if (a.positives & b.positives) return std::nullopt;
  Gccat g = a;
  g.positives |= b.positives;
  return g;
}

bool spatial_star_eval(const SpatialStar& s, const Model& m, const std::vector<int>& values,
                       Marker marks) {
  if (values.size() != s.vars.size())
    throw PreconditionError("spatial_star_eval: wrong number of values");
  const auto& u = *s.universe;
  std::vector<int> slot;
  for (std::size_t i = 0; i < s.rep.size(); ++i) {
    if (values[i] != values[s.rep[i]]) return false;
    if (s.rep[i] == static_cast<int>(i)) slot.push_back(values[i]);
  }
  for (std::size_t i = 0; i < slot.size(); ++i)
    for (std::size_t j = i + 1; j < slot.size(); ++j)
      if (slot[i] == slot[j]) return false;

  const Signature& ms = m.sig();
  auto holds = [&](const StarAtom& a, int nb) {
    auto at = [&](int x) { return x == kNeighbor ? nb : slot[x]; };
    if (!a.binary) {
      int p = ms.unary_index(u.sig().unaries()[a.pred]);
      return p >= 0 && m.unary(p, at(a.a));
    }
    int p = ms.binary_index(u.sig().binaries()[a.pred]);
    return p >= 0 && m.binary(p, at(a.a), at(a.b));
  };
  std::uint64_t g = 0;
  for (std::size_t i = 0; i < u.var_atoms().size(); ++i)
    if (holds(u.var_atoms()[i], -1)) g |= std::uint64_t{1} << i;
  if (g != s.gccat) return false;

  std::vector<Extension> nbs;
  for (int d = 0; d < m.size(); ++d) {
    if (std::find(slot.begin(), slot.end(), d) != slot.end()) continue;
    Extension t = 0;
    for (std::size_t i = 0; i < u.ext_atoms().size(); ++i)
      if (holds(u.ext_atoms()[i], d)) t |= Extension{1} << i;
    nbs.push_back(t);
  }

  const auto& atoms = s.atoms;
  std::vector<bool> used(atoms.size(), false);
  auto usable = [&](std::size_t i) {
    return atoms[i].kind == SpatialAtom::Kind::Any || !used[i];
  };
  std::function<bool(std::size_t)> cover = [&](std::size_t k) -> bool {
    if (k == nbs.size()) {
      for (std::size_t i = 0; i < atoms.size(); ++i)
        if (atoms[i].kind == SpatialAtom::Kind::One && !used[i]) return false;
      return true;
    }
    Extension t = nbs[k];
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (!usable(i)) continue;
      if (atoms[i].marker == marks && atoms[i].ext == t) {
        bool one = atoms[i].kind == SpatialAtom::Kind::One;
        if (one) used[i] = true;
        bool ok = cover(k + 1);
        if (one) used[i] = false;
        if (ok) return true;
      }
    }
    if (marks != Marker::Both) return false;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (!usable(i) || atoms[i].marker != Marker::Left || (atoms[i].ext & ~t)) continue;
      for (std::size_t j = 0; j < atoms.size(); ++j) {
        if (!usable(j) || atoms[j].marker != Marker::Right) continue;
        if (atoms[j].ext != (t & ~atoms[i].ext)) continue;
        bool oi = atoms[i].kind == SpatialAtom::Kind::One;
        bool oj = atoms[j].kind == SpatialAtom::Kind::One;
        if (oi) used[i] = true;
        if (oj) used[j] = true;
        bool ok = cover(k + 1);
        if (oi) used[i] = false;
        if (oj) used[j] = false;
        if (ok) return true;
      }
    }
    return false;
  };
  return cover(0);
}

}  // namespace rolelogic
