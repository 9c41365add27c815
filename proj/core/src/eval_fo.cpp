#include <unordered_map>

#include "eval_common.hpp"
#include "rolelogic/error.hpp"
#include "rolelogic/limits.hpp"
#include "rolelogic/semantics.hpp"

namespace rolelogic {

namespace {

struct Relation {
  std::string name;
  int arity;
  std::vector<std::uint8_t> bits;
};

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

struct FoEvaluator::Impl {
  bool second_order;
  std::vector<std::pair<std::string, int>> env;
  std::vector<Relation> rels;
  std::unordered_map<detail::MemoKey, bool, detail::MemoKeyHash> memo;
  std::unordered_map<const fo::Node*, std::vector<std::string>> free_cache;
  // Memo keys are node addresses, so evaluated formulas are kept alive.
  std::unordered_map<const fo::Node*, fo::Formula> roots;

  void keep(const fo::Formula& f) { roots.emplace(f.get(), f); }

  int lookup(const std::string& v) const {
    for (auto it = env.rbegin(); it != env.rend(); ++it)
      if (it->first == v) return it->second;
    throw PreconditionError("unbound variable '" + v + "'");
  }

  const Relation* relation(const std::string& name) const {
    for (auto it = rels.rbegin(); it != rels.rend(); ++it)
      if (it->name == name) return &*it;
    return nullptr;
  }

  std::size_t tuple_index(const std::vector<std::string>& args, int n) const {
    std::size_t idx = 0;
    for (auto& a : args) idx = idx * n + lookup(a);
    return idx;
  }

  bool memo_eval(const fo::Formula& f, const Model& m, const std::vector<std::string>& fv) {
    detail::MemoKey key{f.get(), 0, 0, 0};
    bool usable = rels.empty() && fv.size() <= 16 && detail::pack_model(m, key.a, key.b);
    if (usable) {
      for (std::size_t i = 0; i < fv.size(); ++i)
        key.val |= static_cast<std::uint64_t>(lookup(fv[i])) << (4 * i);
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
    }
    bool r = eval(f, m);
    if (usable) {
      if (memo.size() > detail::kMemoCap) memo.clear();
      memo.emplace(key, r);
    }
    return r;
  }

  const std::vector<std::string>& free_of(const fo::Formula& f) {
    auto it = free_cache.find(f.get());
    if (it != free_cache.end()) return it->second;
    auto s = fo::free_vars(f);
    return free_cache.emplace(f.get(), std::vector<std::string>(s.begin(), s.end()))
        .first->second;
  }

  // Counts satisfying values of `var` in `body`, stopping once above `cap`.
  int count(const fo::Formula& f, const Model& m, int cap) {
    int c = 0;
    env.emplace_back(f.var(), 0);
    for (int d = 0; d < m.size() && c <= cap; ++d) {
      env.back().second = d;
      if (eval(f.body(), m)) ++c;
    }
    env.pop_back();
    return c;
  }

  bool eval(const fo::Formula& f, const Model& m) {
    using fo::Kind;
    switch (f.kind()) {
      case Kind::True: return true;
      case Kind::False: return false;
      case Kind::Pred: {
        const auto& args = f.vars();
        if (const Relation* r = relation(f.name())) {
          if (static_cast<int>(args.size()) != r->arity)
            throw PreconditionError("relation '" + f.name() + "' used with wrong arity");
          return r->bits[tuple_index(args, m.size())];
        }
        if (args.size() == 1) {
          int i = m.sig().unary_index(f.name());
          if (i < 0) throw SignatureError("predicate '" + f.name() + "' missing from model");
          return m.unary(i, lookup(args[0]));
        }
        if (args.size() == 2) {
          int i = m.sig().binary_index(f.name());
          if (i < 0) throw SignatureError("predicate '" + f.name() + "' missing from model");
          return m.binary(i, lookup(args[0]), lookup(args[1]));
        }
        throw SignatureError("predicate '" + f.name() + "' has unsupported arity");
      }
      case Kind::Eq: return lookup(f.vars()[0]) == lookup(f.vars()[1]);
      case Kind::Not: return !eval(f.body(), m);
      case Kind::And: return eval(f.lhs(), m) && eval(f.rhs(), m);
      case Kind::Or: return eval(f.lhs(), m) || eval(f.rhs(), m);
      case Kind::Implies: return !eval(f.lhs(), m) || eval(f.rhs(), m);
      case Kind::Iff: return eval(f.lhs(), m) == eval(f.rhs(), m);
      case Kind::ExistsGeq: return f.k() == 0 || count(f, m, f.k() - 1) >= f.k();
      case Kind::ExistsEq: return count(f, m, f.k()) == f.k();
      case Kind::ExistsLeq: return count(f, m, f.k()) <= f.k();
      case Kind::Forall: {
        env.emplace_back(f.var(), 0);
        bool ok = true;
        for (int d = 0; d < m.size() && ok; ++d) {
          env.back().second = d;
          ok = eval(f.body(), m);
        }
        env.pop_back();
        return ok;
      }
      case Kind::Acyclic: return !detail::has_cycle(m, f.vars());
      case Kind::Spatial: {
        const auto& fl = free_of(f.lhs());
        const auto& fr = free_of(f.rhs());
        return detail::for_each_split2(m, [&](const Model& p1, const Model& p2) {
          return memo_eval(f.lhs(), p1, fl) && memo_eval(f.rhs(), p2, fr);
        });
      }
      case Kind::Lfp: return eval_lfp(f, m);
      case Kind::ExistsRel:
      case Kind::ForallRel: return eval_relq(f, m);
    }
    return false;
  }

  bool eval_lfp(const fo::Formula& f, const Model& m) {
    const int n = m.size();
    const auto& formals = f.vars();
    int arity = static_cast<int>(formals.size());
    std::size_t size = ipow(n, arity);
    if (size > 4096) throw GuardExceeded("lfp relation too large");
    std::size_t target = tuple_index(f.args(), n);
    rels.push_back({f.name(), arity, std::vector<std::uint8_t>(size, 0)});
    std::size_t env_base = env.size();
    for (auto& v : formals) env.emplace_back(v, 0);
    for (;;) {
      std::vector<std::uint8_t> next(size, 0);
      for (std::size_t t = 0; t < size; ++t) {
        std::size_t rest = t;
        for (int i = arity - 1; i >= 0; --i) {
          env[env_base + i].second = static_cast<int>(rest % n);
          rest /= n;
        }
        next[t] = eval(f.body(), m) ? 1 : 0;
      }
      if (next == rels.back().bits) break;
      rels.back().bits = std::move(next);
    }
    bool result = rels.back().bits[target];
    env.resize(env_base);
    rels.pop_back();
    return result;
  }

  bool eval_relq(const fo::Formula& f, const Model& m) {
    if (!second_order)
      throw PreconditionError("relation quantifier in a first-order evaluation");
    std::size_t size = ipow(m.size(), f.k());
    if (size > max_tuples(9))
      throw GuardExceeded("relation quantifier over " + std::to_string(size) +
                          " tuples exceeds the guard");
    bool exists = f.kind() == fo::Kind::ExistsRel;
    rels.push_back({f.name(), f.k(), std::vector<std::uint8_t>(size, 0)});
    bool result = !exists;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
      for (std::size_t t = 0; t < size; ++t) rels.back().bits[t] = (mask >> t) & 1u;
      bool v = eval(f.body(), m);
      if (v == exists) {
        result = exists;
        break;
      }
    }
    rels.pop_back();
    return result;
  }
};

FoEvaluator::FoEvaluator(bool allow_second_order) : impl_(std::make_unique<Impl>()) {
  impl_->second_order = allow_second_order;
}
FoEvaluator::~FoEvaluator() = default;
FoEvaluator::FoEvaluator(FoEvaluator&&) noexcept = default;
FoEvaluator& FoEvaluator::operator=(FoEvaluator&&) noexcept = default;

bool FoEvaluator::eval(const fo::Formula& f, const Model& m, const Valuation& v) {
  impl_->env.clear();
  impl_->rels.clear();
  for (auto& [name, d] : v) {
    if (d < 0 || d >= m.size()) throw PreconditionError("valuation outside the domain");
    impl_->env.emplace_back(name, d);
  }
  impl_->keep(f);
  return impl_->eval(f, m);
}

bool FoEvaluator::eval(const fo::Formula& f, const Model& m, const std::vector<std::string>& vars,
                       const std::vector<int>& values) {
  impl_->env.clear();
  impl_->rels.clear();
  for (std::size_t i = 0; i < vars.size(); ++i) impl_->env.emplace_back(vars[i], values[i]);
  impl_->keep(f);
  return impl_->eval(f, m);
}

bool eval_fo(const fo::Formula& f, const Model& m, const Valuation& v) {
  FoEvaluator ev(false);
  return ev.eval(f, m, v);
}

bool eval_sol(const fo::Formula& f, const Model& m, const Valuation& v) {
  FoEvaluator ev(true);
  return ev.eval(f, m, v);
}

}  // namespace rolelogic
