#include <set>

#include "rolelogic/error.hpp"
#include "nf_internal.hpp"

namespace rolelogic {

std::vector<CatAtom> cat_atoms(const Signature& sig, int n) {
  std::vector<CatAtom> out;
  for (int p = 0; p < static_cast<int>(sig.unaries().size()); ++p)
    for (int i = 0; i < n; ++i) out.push_back({CatAtom::Kind::Unary, p, i, 0});
  for (int p = 0; p < static_cast<int>(sig.binaries().size()); ++p)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out.push_back({CatAtom::Kind::Binary, p, i, j});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.push_back({CatAtom::Kind::Eq, 0, i, j});
  return out;
}

// ---- relevance ----

Relevance Relevance::full(const Signature& sig) {
  std::size_t u = sig.unaries().size(), b = sig.binaries().size();
  return {std::vector<bool>(u, true), std::vector<bool>(u, true), std::vector<bool>(b, true),
          std::vector<bool>(b, true),  std::vector<bool>(b, true), std::vector<bool>(b, true)};
}

Relevance Relevance::none(const Signature& sig) {
  std::size_t u = sig.unaries().size(), b = sig.binaries().size();
  return {std::vector<bool>(u, false), std::vector<bool>(u, false), std::vector<bool>(b, false),
          std::vector<bool>(b, false),  std::vector<bool>(b, false), std::vector<bool>(b, false)};
}

namespace {

void mark(const fo::Formula& f, const Signature& sig, std::vector<std::string>& bound,
          Relevance& r) {
  using fo::Kind;
  auto is_bound = [&](const std::string& v) {
    for (auto& b : bound)
      if (b == v) return true;
    return false;
  };
  switch (f.kind()) {
    case Kind::Pred: {
      const auto& a = f.vars();
      if (a.size() == 1) {
        int i = sig.unary_index(f.name());
        if (i < 0) return;
        r.unary_var[i] = true;
        if (is_bound(a[0])) r.unary_ext[i] = true;
      } else if (a.size() == 2) {
        int i = sig.binary_index(f.name());
        if (i < 0) return;
        r.binary_var[i] = true;
        bool b0 = is_bound(a[0]), b1 = is_bound(a[1]);
        if (b0 && b1) {
          r.loop[i] = true;
          if (a[0] != a[1]) r.out[i] = r.in[i] = true;
        } else if (b0) {
          r.out[i] = true;
        } else if (b1) {
          r.in[i] = true;
        }
      }
      return;
    }
    case Kind::ExistsGeq:
    case Kind::ExistsEq:
    case Kind::ExistsLeq:
    case Kind::Forall:
      bound.push_back(f.var());
      mark(f.body(), sig, bound, r);
      bound.pop_back();
      return;
    case Kind::Lfp:
      bound.insert(bound.end(), f.vars().begin(), f.vars().end());
      mark(f.body(), sig, bound, r);
      bound.resize(bound.size() - f.vars().size());
      return;
    default:
      if (f.lhs()) mark(f.lhs(), sig, bound, r);
      if (f.rhs()) mark(f.rhs(), sig, bound, r);
  }
}

}  // namespace

Relevance Relevance::of(const fo::Formula& f, const Signature& sig) {
  Relevance r = none(sig);
  std::vector<std::string> bound;
  mark(f, sig, bound, r);
  return r;
}

Relevance& Relevance::operator|=(const Relevance& o) {
  auto merge = [](std::vector<bool>& a, const std::vector<bool>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) a[i] = a[i] || b[i];
  };
  merge(unary_var, o.unary_var);
  merge(unary_ext, o.unary_ext);
  merge(binary_var, o.binary_var);
  merge(loop, o.loop);
  merge(out, o.out);
  merge(in, o.in);
  return *this;
}

// ---- universes ----

StarUniverse::StarUniverse(const Signature& sig, int slots, Relevance rel)
    : sig_(sig), slots_(slots), rel_(std::move(rel)) {
  int nu = static_cast<int>(sig.unaries().size()), nb = static_cast<int>(sig.binaries().size());
  for (int p = 0; p < nu; ++p)
    if (rel_.unary_var[p])
      for (int i = 0; i < slots; ++i) var_atoms_.push_back({p, false, i, 0});
  for (int p = 0; p < nb; ++p)
    if (rel_.binary_var[p])
      for (int i = 0; i < slots; ++i)
        for (int j = 0; j < slots; ++j) var_atoms_.push_back({p, true, i, j});
  for (int p = 0; p < nu; ++p)
    if (rel_.unary_ext[p]) ext_atoms_.push_back({p, false, kNeighbor, 0});
  for (int p = 0; p < nb; ++p) {
    if (rel_.loop[p]) ext_atoms_.push_back({p, true, kNeighbor, kNeighbor});
    for (int i = 0; i < slots; ++i) {
      if (rel_.out[p]) ext_atoms_.push_back({p, true, kNeighbor, i});
      if (rel_.in[p]) ext_atoms_.push_back({p, true, i, kNeighbor});
    }
  }
  if (var_atoms_.size() > 64)
    throw GuardExceeded("more than 64 atoms over the free variables");
  if (ext_atoms_.size() > 20) throw GuardExceeded("extension universe larger than 2^20");
}

std::shared_ptr<const StarUniverse> StarUniverse::make(const Signature& sig, int slots,
                                                       const Relevance& rel) {
  return std::make_shared<const StarUniverse>(sig, slots, rel);
}

int StarUniverse::var_atom_index(int pred, bool binary, int a, int b) const {
  for (std::size_t i = 0; i < var_atoms_.size(); ++i) {
    const auto& t = var_atoms_[i];
    if (t.pred == pred && t.binary == binary && t.a == a && (!binary || t.b == b))
      return static_cast<int>(i);
  }
  return -1;
}

int StarUniverse::ext_atom_index(int pred, bool binary, int a, int b) const {
  for (std::size_t i = 0; i < ext_atoms_.size(); ++i) {
    const auto& t = ext_atoms_[i];
    if (t.pred == pred && t.binary == binary && t.a == a && (!binary || t.b == b))
      return static_cast<int>(i);
  }
  return -1;
}

std::vector<Extension> extensions_of(const Signature& sig, const std::vector<std::string>& vars) {
  StarUniverse u(sig, static_cast<int>(vars.size()), Relevance::full(sig));
  std::vector<Extension> out(u.extension_count());
  for (Extension t = 0; t < u.extension_count(); ++t) out[t] = t;
  return out;
}

namespace {

fo::Formula atom_fo(const Signature& sig, const StarAtom& a, const std::string& x,
                    const std::vector<std::string>& names) {
  auto name = [&](int slot) { return slot == kNeighbor ? x : names[slot]; };
  if (!a.binary) return fo::pred(sig.unaries()[a.pred], name(a.a));
  return fo::pred(sig.binaries()[a.pred], name(a.a), name(a.b));
}

}  // namespace

fo::Formula extension_to_fo(const StarUniverse& u, Extension t, const std::string& x,
                            const std::vector<std::string>& slot_names) {
  std::vector<fo::Formula> lits;
  for (std::size_t i = 0; i < u.ext_atoms().size(); ++i) {
    fo::Formula a = atom_fo(u.sig(), u.ext_atoms()[i], x, slot_names);
    lits.push_back(((t >> i) & 1u) ? a : fo::neg(a));
  }
  return fo::conj_all(lits);
}

fo::Formula detail::gccat_literals(const StarUniverse& u, std::uint64_t positives,
                           const std::vector<std::string>& slot_names) {
  std::vector<fo::Formula> lits;
  for (int i = 0; i < u.slots(); ++i)
    for (int j = i + 1; j < u.slots(); ++j)
      lits.push_back(fo::neg(fo::eq(slot_names[i], slot_names[j])));
  for (std::size_t i = 0; i < u.var_atoms().size(); ++i) {
    fo::Formula a = atom_fo(u.sig(), u.var_atoms()[i], "", slot_names);
    lits.push_back(((positives >> i) & 1u) ? a : fo::neg(a));
  }
  return fo::conj_all(lits);
}

}  // namespace rolelogic
