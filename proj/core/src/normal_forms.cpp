#include <algorithm>

#include "nf_internal.hpp"
#include "rolelogic/error.hpp"

namespace rolelogic {

namespace detail {

void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> a(n, 0);
  if (n == 0) {
    fn(a);
    return;
  }
  std::function<void(int, int)> rec = [&](int i, int mx) {
    if (i == n) {
      fn(a);
      return;
    }
    for (int c = 0; c <= mx + 1; ++c) {
      a[i] = c;
      rec(i + 1, std::max(mx, c));
    }
  };
  a[0] = 0;
  rec(1, 0);
}

std::vector<int> partition_reps(const std::vector<int>& rgs) {
  std::vector<int> last(rgs.size(), -1);
  for (std::size_t i = 0; i < rgs.size(); ++i) last[rgs[i]] = static_cast<int>(i);
  std::vector<int> rep(rgs.size());
  for (std::size_t i = 0; i < rgs.size(); ++i) rep[i] = last[rgs[i]];
  return rep;
}

}  // namespace detail

namespace {

void check_quantifier_free(const fo::Formula& f) {
  using fo::Kind;
  switch (f.kind()) {
    case Kind::Pred:
    case Kind::Eq:
    case Kind::True:
    case Kind::False:
      return;
    case Kind::Not:
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff:
      check_quantifier_free(f.lhs());
      if (f.rhs()) check_quantifier_free(f.rhs());
      return;
    default:
      throw PreconditionError("to_cat: formula is not quantifier-free");
  }
}

int var_index(const std::vector<std::string>& vars, const std::string& v) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == v) return static_cast<int>(i);
  throw PreconditionError("variable " + v + " is not in the variable list");
}

}  // namespace

std::vector<CatCube> to_cat(const fo::Formula& f, const std::vector<std::string>& vars,
                            const Signature& sig) {
  check_quantifier_free(f);
  for (const auto& v : fo::free_vars(f)) var_index(vars, v);
  const int n = static_cast<int>(vars.size());
  const auto atoms = cat_atoms(sig, n);
  const int nu = static_cast<int>(sig.unaries().size());
  const int nb = static_cast<int>(sig.binaries().size());
  std::vector<CatCube> out;
  detail::for_each_partition(n, [&](const std::vector<int>& rgs) {
    int p = n == 0 ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
    int bits = nu * p + nb * p * p;
    if (bits > 24) throw GuardExceeded("to_cat: too many atoms");
    Model m(sig, std::max(p, 1));
    std::vector<int> values(rgs.begin(), rgs.end());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
      Model cur = m;
      int b = 0;
      for (int u = 0; u < nu; ++u)
        for (int c = 0; c < p; ++c, ++b) cur.set_unary(u, c, (mask >> b) & 1);
      for (int r = 0; r < nb; ++r)
        for (int c = 0; c < p; ++c)
          for (int d = 0; d < p; ++d, ++b) cur.set_binary(r, c, d, (mask >> b) & 1);
      FoEvaluator ev(false);
      if (!ev.eval(f, cur, vars, values)) continue;
      CatCube cube{vars, std::vector<bool>(atoms.size())};
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        const auto& a = atoms[i];
        switch (a.kind) {
          case CatAtom::Kind::Unary:
            cube.positives[i] = cur.unary(a.pred, rgs[a.a]);
            break;
          case CatAtom::Kind::Binary:
            cube.positives[i] = cur.binary(a.pred, rgs[a.a], rgs[a.b]);
            break;
          case CatAtom::Kind::Eq:
            cube.positives[i] = rgs[a.a] == rgs[a.b];
            break;
        }
      }
      out.push_back(std::move(cube));
    }
  });
  return out;
}

namespace {

fo::Formula cat_atom_fo(const CatAtom& a, const std::vector<std::string>& vars,
                        const Signature& sig) {
  switch (a.kind) {
    case CatAtom::Kind::Unary:
      return fo::pred(sig.unaries()[a.pred], vars[a.a]);
    case CatAtom::Kind::Binary:
      return fo::pred(sig.binaries()[a.pred], vars[a.a], vars[a.b]);
    default:
      return fo::eq(vars[a.a], vars[a.b]);
  }
}

}  // namespace

fo::Formula cube_to_fo(const CatCube& c, const Signature& sig) {
  const auto atoms = cat_atoms(sig, static_cast<int>(c.vars.size()));
  std::vector<fo::Formula> lits;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    auto a = cat_atom_fo(atoms[i], c.vars, sig);
    lits.push_back(c.positives[i] ? a : fo::neg(a));
  }
  return fo::conj_all(lits);
}

std::optional<Eqcat> cat_to_eqcat(const CatCube& c, const Signature& sig) {
  const int n = static_cast<int>(c.vars.size());
  const auto atoms = cat_atoms(sig, n);
  const int nu = static_cast<int>(sig.unaries().size());
  const int nb = static_cast<int>(sig.binaries().size());
  auto unary = [&](int p, int i) { return c.positives[p * n + i]; };
  auto binary = [&](int p, int i, int j) { return c.positives[nu * n + (p * n + i) * n + j]; };
  auto equal = [&](int i, int j) { return c.positives[nu * n + nb * n * n + i * n + j]; };

  for (int i = 0; i < n; ++i)
    if (!equal(i, i)) return std::nullopt;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (equal(i, j) != equal(j, i)) return std::nullopt;
      for (int k = 0; k < n; ++k)
        if (equal(i, j) && equal(j, k) && !equal(i, k)) return std::nullopt;
    }
  std::vector<int> rep(n);
  for (int i = 0; i < n; ++i) {
    rep[i] = i;
    for (int j = 0; j < n; ++j)
      if (equal(i, j)) rep[i] = std::max(rep[i], j);
  }
  for (int i = 0; i < n; ++i) {
    for (int p = 0; p < nu; ++p)
      if (unary(p, i) != unary(p, rep[i])) return std::nullopt;
    for (int j = 0; j < n; ++j)
      for (int p = 0; p < nb; ++p)
        if (binary(p, i, j) != binary(p, rep[i], rep[j])) return std::nullopt;
  }

  Eqcat e;
  std::vector<int> slots;
  for (int i = 0; i < n; ++i) {
    if (rep[i] == i)
      slots.push_back(i);
    else
      e.prefix.assignments.emplace_back(c.vars[i], c.vars[rep[i]]);
  }
  const int p = static_cast<int>(slots.size());
  e.gccat.universe = StarUniverse::make(sig, p, Relevance::full(sig));
  for (int s : slots) e.gccat.vars.push_back(c.vars[s]);
  const auto& va = e.gccat.universe->var_atoms();
  for (std::size_t i = 0; i < va.size(); ++i) {
    const auto& a = va[i];
    bool v = a.binary ? binary(a.pred, slots[a.a], slots[a.b]) : unary(a.pred, slots[a.a]);
    if (v) e.gccat.positives |= std::uint64_t{1} << i;
  }
  return e;
}

fo::Formula eqcat_to_fo(const Eqcat& e) {
  std::vector<fo::Formula> parts;
  for (const auto& [y, x] : e.prefix.assignments) parts.push_back(fo::eq(y, x));
  parts.push_back(detail::gccat_literals(*e.gccat.universe, e.gccat.positives, e.gccat.vars));
  return fo::conj_all(parts);
}

}  // namespace rolelogic
