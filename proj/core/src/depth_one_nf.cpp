#include <algorithm>
#include <climits>
#include <set>

#include "nf_internal.hpp"
#include "rolelogic/error.hpp"
#include "rolelogic/rl2_to_fo.hpp"

namespace rolelogic {

namespace {

constexpr int kInf = INT_MAX;
constexpr std::size_t kMaxOptions = std::size_t{1} << 20;

// Where a variable points under a fixed free type.
struct Ref {
  bool neighbor;
  int slot;
};

// Σ_{T∈set} N_T ∈ [lo, hi]
struct Cons {
  std::vector<Extension> set;
  int lo;
  int hi;
};

// A literal's meaning: always true, or one of the alternatives (none = false).
struct Alt {
  bool always = false;
  std::vector<Cons> options;
};

using Gamma = std::map<Extension, Count>;
using Term = std::vector<std::pair<int, bool>>;  // (quantifier, polarity)

class Builder {
 public:
  Builder(const fo::Formula& f, const Signature& sig, const std::vector<std::string>& vars,
          Relevance rel, int limit)
      : f_(f), sig_(sig), vars_(vars), rel_(std::move(rel)), limit_(limit) {
    collect(f_);
  }

  std::vector<GenStar> run() {
    const int n = static_cast<int>(vars_.size());
    std::map<int, std::shared_ptr<const StarUniverse>> universes;
    detail::for_each_partition(n, [&](const std::vector<int>& rgs) {
      rep_ = detail::partition_reps(rgs);
      reps_.clear();
      slot_of_.assign(n, -1);
      for (int i = 0; i < n; ++i)
        if (rep_[i] == i) reps_.push_back(i);
      for (int i = 0; i < n; ++i)
        slot_of_[i] = static_cast<int>(std::find(reps_.begin(), reps_.end(), rep_[i]) - reps_.begin());
      int p = static_cast<int>(reps_.size());
      auto& u = universes[p];
      if (!u) u = StarUniverse::make(sig_, p, rel_);
      u_ = u;
      std::size_t nva = u_->var_atoms().size();
      if (nva > 20) throw GuardExceeded("depth_one_nf: too many atoms over the free variables");
      for (std::uint64_t g = 0; g < (std::uint64_t{1} << nva); ++g) {
        gccat_ = g;
        for_type();
      }
    });
    return out_;
  }

 private:
  void collect(const fo::Formula& f) {
    if (fo::is_quantifier(f.kind())) {
      quants_.push_back(f);
      return;
    }
    if (f.lhs()) collect(f.lhs());
    if (f.rhs()) collect(f.rhs());
  }

  int quant_index(const fo::Formula& f) const {
    for (std::size_t i = 0; i < quants_.size(); ++i)
      if (quants_[i].get() == f.get()) return static_cast<int>(i);
    return -1;
  }

  Ref resolve(const std::string& v, const std::string* bound, Ref bound_ref) const {
    if (bound && v == *bound) return bound_ref;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == v) return {false, slot_of_[i]};
    throw PreconditionError("depth_one_nf: variable " + v + " is not in the variable list");
  }

  bool atom(const fo::Formula& f, const std::string* bound, Ref bref, Extension t) const {
    if (f.kind() == fo::Kind::Eq) {
      Ref a = resolve(f.vars()[0], bound, bref), b = resolve(f.vars()[1], bound, bref);
      return a.neighbor == b.neighbor && (a.neighbor || a.slot == b.slot);
    }
    const auto& args = f.vars();
    auto bit = [&](int idx, bool ext) {
      if (idx < 0) throw PreconditionError("depth_one_nf: atom outside the star universe");
      return ext ? ((t >> idx) & 1u) != 0 : ((gccat_ >> idx) & 1u) != 0;
    };
    if (args.size() == 1) {
      int p = sig_.unary_index(f.name());
      if (p < 0) throw SignatureError("unknown unary predicate " + f.name());
      Ref a = resolve(args[0], bound, bref);
      if (a.neighbor) return bit(u_->ext_atom_index(p, false, kNeighbor, 0), true);
      return bit(u_->var_atom_index(p, false, a.slot, 0), false);
    }
    if (args.size() != 2) throw SignatureError("predicate " + f.name() + " has unsupported arity");
    int p = sig_.binary_index(f.name());
    if (p < 0) throw SignatureError("unknown binary predicate " + f.name());
    Ref a = resolve(args[0], bound, bref), b = resolve(args[1], bound, bref);
    if (!a.neighbor && !b.neighbor) return bit(u_->var_atom_index(p, true, a.slot, b.slot), false);
    int ia = a.neighbor ? kNeighbor : a.slot, ib = b.neighbor ? kNeighbor : b.slot;
    return bit(u_->ext_atom_index(p, true, ia, ib), true);
  }

  // Quantifier-free evaluation.
  bool qf(const fo::Formula& f, const std::string* bound, Ref bref, Extension t) const {
    using fo::Kind;
    switch (f.kind()) {
      case Kind::True: return true;
      case Kind::False: return false;
      case Kind::Pred:
      case Kind::Eq: return atom(f, bound, bref, t);
      case Kind::Not: return !qf(f.lhs(), bound, bref, t);
      case Kind::And: return qf(f.lhs(), bound, bref, t) && qf(f.rhs(), bound, bref, t);
      case Kind::Or: return qf(f.lhs(), bound, bref, t) || qf(f.rhs(), bound, bref, t);
      case Kind::Implies: return !qf(f.lhs(), bound, bref, t) || qf(f.rhs(), bound, bref, t);
      case Kind::Iff: return qf(f.lhs(), bound, bref, t) == qf(f.rhs(), bound, bref, t);
      default: throw PreconditionError("depth_one_nf: formula has quantifier depth above one");
    }
  }

  static std::vector<Term> product(const std::vector<Term>& a, const std::vector<Term>& b) {
    std::vector<Term> out;
    for (const auto& x : a)
      for (const auto& y : b) {
        Term t = x;
        bool ok = true;
        for (const auto& lit : y) {
          if (std::find(t.begin(), t.end(), std::make_pair(lit.first, !lit.second)) != t.end()) {
            ok = false;
            break;
          }
          if (std::find(t.begin(), t.end(), lit) == t.end()) t.push_back(lit);
        }
        if (!ok) continue;
        std::sort(t.begin(), t.end());
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
        if (out.size() > kMaxOptions) throw GuardExceeded("depth_one_nf: DNF too large");
      }
    return out;
  }

  static std::vector<Term> sum(std::vector<Term> a, const std::vector<Term>& b) {
    for (const auto& t : b)
      if (std::find(a.begin(), a.end(), t) == a.end()) a.push_back(t);
    return a;
  }

  std::vector<Term> dnf(const fo::Formula& f, bool pol) const {
    using fo::Kind;
    const std::vector<Term> yes{Term{}}, no{};
    switch (f.kind()) {
      case Kind::True: return pol ? yes : no;
      case Kind::False: return pol ? no : yes;
      case Kind::Pred:
      case Kind::Eq: return atom(f, nullptr, {}, 0) == pol ? yes : no;
      case Kind::Not: return dnf(f.lhs(), !pol);
      case Kind::And:
        return pol ? product(dnf(f.lhs(), true), dnf(f.rhs(), true))
                   : sum(dnf(f.lhs(), false), dnf(f.rhs(), false));
      case Kind::Or:
        return pol ? sum(dnf(f.lhs(), true), dnf(f.rhs(), true))
                   : product(dnf(f.lhs(), false), dnf(f.rhs(), false));
      case Kind::Implies:
        return pol ? sum(dnf(f.lhs(), false), dnf(f.rhs(), true))
                   : product(dnf(f.lhs(), true), dnf(f.rhs(), false));
      case Kind::Iff:
        if (pol)
          return sum(product(dnf(f.lhs(), true), dnf(f.rhs(), true)),
                     product(dnf(f.lhs(), false), dnf(f.rhs(), false)));
        return sum(product(dnf(f.lhs(), true), dnf(f.rhs(), false)),
                   product(dnf(f.lhs(), false), dnf(f.rhs(), true)));
      default: {
        int q = quant_index(f);
        if (q < 0) throw PreconditionError("depth_one_nf: unsupported node");
        return {Term{{q, pol}}};
      }
    }
  }

  static Alt make(std::vector<Extension> set, int lo, int hi) {
    lo = std::max(lo, 0);
    if (hi < lo) return {};
    if (set.empty()) return {lo == 0, {}};
    if (lo == 0 && hi == kInf) return {true, {}};
    return {false, {Cons{std::move(set), lo, hi}}};
  }

  static Alt negate(const Alt& a, std::vector<Extension> set, int lo, int hi) {
    if (a.always) return {};
    if (a.options.empty()) return {true, {}};
    lo = std::max(lo, 0);
    Alt out;
    if (lo > 0) out.options.push_back({set, 0, lo - 1});
    if (hi != kInf) out.options.push_back({set, hi + 1, kInf});
    return out;
  }

  Alt literal(int qi, bool pol) const {
    const fo::Formula& q = quants_[qi];
    const std::string& x = q.var();
    const fo::Formula& body = q.body();
    int p = static_cast<int>(reps_.size());
    int c0 = 0;
    for (int s = 0; s < p; ++s)
      if (qf(body, &x, {false, s}, 0)) ++c0;
    std::vector<Extension> yes, no;
    for (Extension t = 0; t < u_->extension_count(); ++t)
      (qf(body, &x, {true, 0}, t) ? yes : no).push_back(t);

    int lo = 0, hi = kInf;
    std::vector<Extension>* set = &yes;
    switch (q.kind()) {
      case fo::Kind::ExistsGeq: lo = q.k() - c0; break;
      case fo::Kind::ExistsEq: lo = hi = q.k() - c0; break;
      case fo::Kind::ExistsLeq: hi = q.k() - c0; break;
      default:
        // forall: no representative fails and no neighbor falls outside the body
        set = &no;
        hi = c0 == p ? 0 : -1;
        break;
    }
    Alt a = make(*set, lo, hi);
    return pol ? a : negate(a, *set, lo, hi);
  }

  std::vector<Gamma> expand(const Cons& c) const {
    int top = c.hi == kInf ? c.lo : c.hi;
    if (top > limit_)
      throw PreconditionError("depth_one_nf: count " + std::to_string(top) +
                              " exceeds the composition limit");
    std::vector<Gamma> out;
    std::vector<int> v(c.set.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
      if (i + 1 == c.set.size() || c.set.size() == 0) {
        std::vector<int> w = v;
        if (c.hi == kInf) {
          if (!w.empty()) w[i] = c.lo - used;
          Gamma g;
          for (std::size_t j = 0; j < w.size(); ++j)
            if (w[j] > 0) g[c.set[j]] = Count::at_least(w[j]);
          out.push_back(std::move(g));
        } else {
          for (int last = std::max(0, c.lo - used); last <= c.hi - used; ++last) {
            w[i] = last;
            Gamma g;
            for (std::size_t j = 0; j < w.size(); ++j) g[c.set[j]] = Count::exact(w[j]);
            out.push_back(std::move(g));
          }
        }
        if (out.size() > kMaxOptions) throw GuardExceeded("depth_one_nf: too many count options");
        return;
      }
      int cap = c.hi == kInf ? c.lo : c.hi;
      for (int k = 0; used + k <= cap; ++k) {
        v[i] = k;
        rec(i + 1, used + k);
      }
      v[i] = 0;
    };
    rec(0, 0);
    return out;
  }

  static bool meet(Gamma& a, const Gamma& b) {
    for (const auto& [t, c] : b) {
      auto it = a.find(t);
      if (it == a.end()) {
        a[t] = c;
        continue;
      }
      Count& d = it->second;
      bool de = d.kind == Count::Kind::Exact, ce = c.kind == Count::Kind::Exact;
      if (de && ce) {
        if (d.n != c.n) return false;
      } else if (de) {
        if (d.n < c.n) return false;
      } else if (ce) {
        if (c.n < d.n) return false;
        d = c;
      } else {
        d.n = std::max(d.n, c.n);
      }
    }
    return true;
  }

  void emit(const std::vector<Cons>& conj) {
    std::vector<Gamma> acc{Gamma{}};
    for (const auto& c : conj) {
      auto opts = expand(c);
      std::vector<Gamma> next;
      for (const auto& a : acc)
        for (const auto& o : opts) {
          Gamma g = a;
          if (meet(g, o)) next.push_back(std::move(g));
        }
      if (next.size() > kMaxOptions) throw GuardExceeded("depth_one_nf: too many stars");
      acc = std::move(next);
      if (acc.empty()) return;
    }
    for (auto& g : acc) {
      GenStar s{vars_, rep_, u_, gccat_, {}};
      for (const auto& [t, c] : g) s.set(t, c);
      if (seen_.insert(s).second) out_.push_back(std::move(s));
    }
  }

  void for_type() {
    std::vector<Alt> lits[2];
    for (std::size_t q = 0; q < quants_.size(); ++q) {
      lits[1].push_back(Alt{});
      lits[0].push_back(Alt{});
    }
    std::vector<bool> done[2] = {std::vector<bool>(quants_.size()), std::vector<bool>(quants_.size())};
    for (const auto& term : dnf(f_, true)) {
      std::vector<std::vector<Cons>> conj_alts{{}};
      bool dead = false;
      for (const auto& [q, pol] : term) {
        if (!done[pol][q]) {
          lits[pol][q] = literal(q, pol);
          done[pol][q] = true;
        }
        const Alt& a = lits[pol][q];
        if (a.always) continue;
        if (a.options.empty()) {
          dead = true;
          break;
        }
        std::vector<std::vector<Cons>> next;
        for (const auto& base : conj_alts)
          for (const auto& o : a.options) {
            auto b = base;
            b.push_back(o);
            next.push_back(std::move(b));
          }
        conj_alts = std::move(next);
      }
      if (dead) continue;
      for (const auto& c : conj_alts) emit(c);
    }
  }

  const fo::Formula& f_;
  const Signature& sig_;
  const std::vector<std::string>& vars_;
  Relevance rel_;
  int limit_;
  std::vector<fo::Formula> quants_;

  std::vector<int> rep_, reps_, slot_of_;
  std::shared_ptr<const StarUniverse> u_;
  std::uint64_t gccat_ = 0;

  std::vector<GenStar> out_;
  std::set<GenStar> seen_;
};

}  // namespace

std::vector<GenStar> depth_one_nf(const fo::Formula& f, const Signature& sig,
                                  const std::vector<std::string>& vars, const NfOptions& opts) {
  if (metrics(f).depth > 1)
    throw PreconditionError("depth_one_nf: formula has quantifier depth above one");
  std::set<std::string> seen;
  for (const auto& v : vars)
    if (!seen.insert(v).second) throw PreconditionError("depth_one_nf: repeated variable " + v);
  for (const auto& v : fo::free_vars(f))
    if (!seen.count(v)) throw PreconditionError("depth_one_nf: variable " + v + " is not in the variable list");
  Relevance rel = opts.relevance ? *opts.relevance
                  : opts.project ? Relevance::of(f, sig)
                                 : Relevance::full(sig);
  Builder b(f, sig, vars, std::move(rel), opts.count_limit);
  return b.run();
}

std::vector<GenStar> depth_one_nf(const fo::Formula& f, const Signature& sig, const NfOptions& opts) {
  auto fv = fo::free_vars(f);
  return depth_one_nf(f, sig, std::vector<std::string>(fv.begin(), fv.end()), opts);
}

}  // namespace rolelogic
