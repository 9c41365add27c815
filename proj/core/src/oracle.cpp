#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "rolelogic/error.hpp"
#include "rolelogic/limits.hpp"
#include "rolelogic/oracle.hpp"
#include "rolelogic/records.hpp"
#include "rolelogic/rl2_to_fo.hpp"
#include "rolelogic/syntax.hpp"

namespace rolelogic {

namespace {

constexpr std::size_t kBitGuard = 24;

int model_bits(const Signature& sig, int size) {
  return static_cast<int>(sig.unaries().size()) * size +
         static_cast<int>(sig.binaries().size()) * size * size;
}

std::string valuation_text(const Valuation& v, const Model& m) {
  std::string s;
  for (const auto& [x, d] : v) {
    if (!s.empty()) s += ", ";
    s += x + "=" + m.element_name(d);
  }
  return s;
}

}  // namespace

std::string Verdict::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::Equivalent:
      out << "EQUIVALENT up to domain size " << size << "\n";
      break;
    case Kind::Unsat:
      out << "UNSAT up to domain size " << size << "\n";
      break;
    case Kind::Counterexample:
      out << "COUNTEREXAMPLE at domain size " << size;
      if (!valuation.empty()) out << " with " << valuation_text(valuation, *model);
      out << ": first formula " << (left ? "true" : "false") << ", second "
          << (right ? "true" : "false") << "\n"
          << print_model(*model);
      break;
    case Kind::Satisfiable:
      out << "SATISFIABLE at domain size " << size;
      if (!valuation.empty()) out << " with " << valuation_text(valuation, *model);
      out << "\n" << print_model(*model);
      break;
  }
  return out.str();
}

std::uint64_t model_count(const Signature& sig, int size) {
  int bits = model_bits(sig, size);
  if (bits >= 64) throw GuardExceeded("model count overflows");
  return std::uint64_t{1} << bits;
}

std::uint64_t enumerate_models(const Signature& sig, int size,
                               const std::function<bool(const Model&)>& fn) {
  if (size < 1) throw PreconditionError("enumerate_models: size must be positive");
  int bits = model_bits(sig, size);
  if (static_cast<std::size_t>(bits) > max_tuples(kBitGuard))
    throw GuardExceeded("enumerate_models: 2^" + std::to_string(bits) + " models");
  Model m(sig, size);
  std::vector<std::pair<int, int>> pos;  // (word, bit) in enumeration order
  for (int w = 0; w < m.word_count(); ++w)
    for (int b = 0; b < m.word_width(w); ++b) pos.emplace_back(w, b);
  std::uint64_t total = std::uint64_t{1} << bits, visited = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    auto& words = m.words();
    std::fill(words.begin(), words.end(), 0);
    for (int i = 0; i < bits; ++i)
      if ((mask >> i) & 1u) words[pos[i].first] |= std::uint64_t{1} << pos[i].second;
    ++visited;
    if (!fn(m)) break;
  }
  return visited;
}

// ---- subjects: a formula prepared for repeated evaluation ----

namespace {

struct Subject {
  bool is_role = false;
  role::Formula role;  // desugared
  fo::Formula fo;      // first-order form, also used for support
  bool second_order = false;
};

Subject prepare(const AnyFormula& f, const Signature& sig) {
  Subject s;
  if (const auto* r = std::get_if<role::Formula>(&f)) {
    s.is_role = true;
    s.role = desugar(*r, sig);
    s.fo = rl2_to_fo(s.role, "x", "y", sig);
  } else {
    s.fo = std::get<fo::Formula>(f);
    s.second_order = !fo::is_first_order(s.fo);
  }
  return s;
}

class Evaluators {
 public:
  bool eval(const Subject& s, const Model& m, const Valuation& v) {
    if (s.is_role) return roles_.eval(s.role, m, {v.at("x"), v.at("y")});
    if (s.second_order) return eval_sol(s.fo, m, v);
    return fos_.eval(s.fo, m, v);
  }

 private:
  RoleEvaluator roles_;
  FoEvaluator fos_;
};

// Model positions the formula can observe, as (word, bit).
class Support {
 public:
  Support(const Model& m, std::set<std::pair<int, int>>& out) : m_(m), out_(out) {}

  void run(const fo::Formula& f, std::vector<std::pair<std::string, int>>& env) {
    using fo::Kind;
    switch (f.kind()) {
      case Kind::Pred: {
        if (bound_rel(f.name())) return;
        const Signature& sig = m_.sig();
        int u = sig.unary_index(f.name()), b = sig.binary_index(f.name());
        const auto& a = f.vars();
        if (a.size() == 1 && u >= 0) {
          for (int d : values(a[0], env)) out_.emplace(u, d);
        } else if (a.size() == 2 && b >= 0) {
          if (a[0] == a[1]) {
            for (int d : values(a[0], env)) out_.emplace(m_.unary_count() + b, d * m_.size() + d);
          } else {
            for (int d1 : values(a[0], env))
              for (int d2 : values(a[1], env)) out_.emplace(m_.unary_count() + b, d1 * m_.size() + d2);
          }
        }
        return;
      }
      case Kind::ExistsGeq:
      case Kind::ExistsEq:
      case Kind::ExistsLeq:
      case Kind::Forall:
        env.emplace_back(f.var(), -1);
        run(f.body(), env);
        env.pop_back();
        return;
      case Kind::Lfp:
        rels_.push_back(f.name());
        for (const auto& x : f.vars()) env.emplace_back(x, -1);
        run(f.body(), env);
        env.resize(env.size() - f.vars().size());
        rels_.pop_back();
        return;
      case Kind::ExistsRel:
      case Kind::ForallRel:
        rels_.push_back(f.name());
        run(f.body(), env);
        rels_.pop_back();
        return;
      case Kind::Acyclic:
        for (const auto& r : f.vars()) {
          int b = m_.sig().binary_index(r);
          if (b < 0 || bound_rel(r)) continue;
          for (int i = 0; i < m_.size() * m_.size(); ++i) out_.emplace(m_.unary_count() + b, i);
        }
        return;
      default:
        if (f.lhs()) run(f.lhs(), env);
        if (f.rhs()) run(f.rhs(), env);
    }
  }

 private:
  bool bound_rel(const std::string& r) const {
    return std::find(rels_.begin(), rels_.end(), r) != rels_.end();
  }

  std::vector<int> values(const std::string& x, const std::vector<std::pair<std::string, int>>& env) const {
    int v = -1;
    for (auto it = env.rbegin(); it != env.rend(); ++it)
      if (it->first == x) {
        v = it->second;
        break;
      }
    if (v >= 0) return {v};
    std::vector<int> all(m_.size());
    for (int d = 0; d < m_.size(); ++d) all[d] = d;
    return all;
  }

  const Model& m_;
  std::set<std::pair<int, int>>& out_;
  std::vector<std::string> rels_;
};

std::vector<std::pair<int, int>> support_of(const std::vector<const Subject*>& subjects, const Model& m,
                                            const Valuation& v, bool project) {
  std::set<std::pair<int, int>> pos;
  if (project) {
    std::vector<std::pair<std::string, int>> env(v.begin(), v.end());
    for (const auto* s : subjects) {
      Support sup(m, pos);
      sup.run(s->fo, env);
    }
  } else {
    for (int w = 0; w < m.word_count(); ++w)
      for (int b = 0; b < m.word_width(w); ++b) pos.emplace(w, b);
  }
  return {pos.begin(), pos.end()};
}

// Every valuation of `vars` over a domain of size n, in lexicographic order.
template <class Fn>
bool for_each_valuation(const std::vector<std::string>& vars, int n, Fn fn) {
  std::vector<int> vals(vars.size(), 0);
  while (true) {
    Valuation v;
    for (std::size_t i = 0; i < vars.size(); ++i) v[vars[i]] = vals[i];
    if (!fn(v)) return false;
    std::size_t i = vars.size();
    while (i > 0) {
      if (++vals[i - 1] < n) break;
      vals[i - 1] = 0;
      --i;
    }
    if (i == 0) return true;
  }
}

// Assignments of the given positions on top of an empty model.
template <class Fn>
bool for_each_assignment(Model& m, const std::vector<std::pair<int, int>>& pos, Fn fn) {
  if (pos.size() > max_tuples(kBitGuard))
    throw GuardExceeded("oracle: 2^" + std::to_string(pos.size()) + " assignments for one valuation");
  auto& words = m.words();
  std::uint64_t total = std::uint64_t{1} << pos.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(words.begin(), words.end(), 0);
    for (std::size_t i = 0; i < pos.size(); ++i)
      if ((mask >> i) & 1u) words[pos[i].first] |= std::uint64_t{1} << pos[i].second;
    if (!fn(m)) return false;
  }
  return true;
}

std::vector<std::string> vars_of(const std::vector<const Subject*>& subjects) {
  std::set<std::string> vs;
  for (const auto* s : subjects)
    for (const auto& x : fo::free_vars(s->fo)) vs.insert(x);
  for (const auto* s : subjects)
    if (s->is_role) vs.insert({"x", "y"});
  return {vs.begin(), vs.end()};
}

Verdict role_equiv(const Subject& a, const Subject& b, int max_size, const Signature& sig, int min_size) {
  RoleEvaluator ev;
  for (int n = min_size; n <= max_size; ++n) {
    std::optional<Verdict> bad;
    enumerate_models(sig, n, [&](const Model& m) {
      std::uint64_t x = ev.mask(a.role, m), y = ev.mask(b.role, m);
      if (x == y) return true;
      int bit = std::countr_zero(x ^ y);
      bad = Verdict{Verdict::Kind::Counterexample, n, m, {{"x", bit / n}, {"y", bit % n}},
                    ((x >> bit) & 1u) != 0, ((y >> bit) & 1u) != 0};
      return false;
    });
    if (bad) return *bad;
  }
  return {Verdict::Kind::Equivalent, max_size};
}

// ---- three-valued search for first-order formulas ----

enum Tri : std::uint8_t { F = 0, T = 1, U = 2 };

class Partial {
 public:
  Partial(const Model& m) : m_(m), known_(m.word_count(), 0) {}

  Model& model() { return m_; }
  void set(std::pair<int, int> p, bool v) {
    known_[p.first] |= std::uint64_t{1} << p.second;
    if (v)
      m_.words()[p.first] |= std::uint64_t{1} << p.second;
    else
      m_.words()[p.first] &= ~(std::uint64_t{1} << p.second);
  }
  void unset(std::pair<int, int> p) {
    known_[p.first] &= ~(std::uint64_t{1} << p.second);
    m_.words()[p.first] &= ~(std::uint64_t{1} << p.second);
  }
  // Positions outside the search are fixed to false.
  void fix_rest(const std::vector<std::pair<int, int>>& searched) {
    std::fill(known_.begin(), known_.end(), ~std::uint64_t{0});
    for (auto p : searched) known_[p.first] &= ~(std::uint64_t{1} << p.second);
  }

  Tri eval(const fo::Formula& f, std::vector<std::pair<std::string, int>>& env) const {
    using fo::Kind;
    switch (f.kind()) {
      case Kind::True: return T;
      case Kind::False: return F;
      case Kind::Eq: return lookup(f.vars()[0], env) == lookup(f.vars()[1], env) ? T : F;
      case Kind::Pred: {
        const Signature& sig = m_.sig();
        const auto& a = f.vars();
        int w, bit;
        if (a.size() == 1) {
          w = sig.unary_index(f.name());
          bit = lookup(a[0], env);
        } else {
          w = m_.unary_count() + sig.binary_index(f.name());
          bit = lookup(a[0], env) * m_.size() + lookup(a[1], env);
        }
        if (!((known_[w] >> bit) & 1u)) return U;
        return ((m_.words()[w] >> bit) & 1u) ? T : F;
      }
      case Kind::Not: {
        Tri t = eval(f.lhs(), env);
        return t == U ? U : t == T ? F : T;
      }
      case Kind::And: {
        Tri a = eval(f.lhs(), env);
        if (a == F) return F;
        Tri b = eval(f.rhs(), env);
        if (b == F) return F;
        return a == T && b == T ? T : U;
      }
      case Kind::Or: {
        Tri a = eval(f.lhs(), env);
        if (a == T) return T;
        Tri b = eval(f.rhs(), env);
        if (b == T) return T;
        return a == F && b == F ? F : U;
      }
      case Kind::Implies: {
        Tri a = eval(f.lhs(), env);
        if (a == F) return T;
        Tri b = eval(f.rhs(), env);
        if (b == T) return T;
        return a == T && b == F ? F : U;
      }
      case Kind::Iff: {
        Tri a = eval(f.lhs(), env), b = eval(f.rhs(), env);
        if (a == U || b == U) return U;
        return a == b ? T : F;
      }
      default: {
        int t = 0, u = 0;
        env.emplace_back(f.var(), 0);
        for (int d = 0; d < m_.size(); ++d) {
          env.back().second = d;
          Tri r = eval(f.body(), env);
          if (r == T) ++t;
          if (r == U) ++u;
        }
        env.pop_back();
        int k = f.k(), n = m_.size();
        switch (f.kind()) {
          case Kind::ExistsGeq: return t >= k ? T : t + u < k ? F : U;
          case Kind::ExistsEq: return t > k || t + u < k ? F : (t == k && u == 0) ? T : U;
          case Kind::ExistsLeq: return t > k ? F : t + u <= k ? T : U;
          default: return t == n ? T : t + u < n ? F : U;
        }
      }
    }
  }

 private:
  static int lookup(const std::string& x, const std::vector<std::pair<std::string, int>>& env) {
    for (auto it = env.rbegin(); it != env.rend(); ++it)
      if (it->first == x) return it->second;
    throw PreconditionError("unbound variable " + x);
  }

  Model m_;
  std::vector<std::uint64_t> known_;
};

bool plain_first_order(const fo::Formula& f) {
  return fo::is_first_order(f) && !fo::contains(f, fo::Kind::Spatial) &&
         !fo::contains(f, fo::Kind::Lfp) && !fo::contains(f, fo::Kind::Acyclic);
}

std::optional<Model> search(const fo::Formula& f, const Model& empty, const Valuation& v,
                            std::vector<std::pair<int, int>> pos) {
  const int n = empty.size();
  const int nu = empty.unary_count();
  // Tuples over small elements first, then by tuple, then by predicate.
  auto key = [&](std::pair<int, int> p) {
    int a = p.second, b = -1;
    if (p.first >= nu) {
      a = p.second / n;
      b = p.second % n;
    }
    return std::make_tuple(std::max(a, b), a, b, p.first);
  };
  std::sort(pos.begin(), pos.end(), [&](auto x, auto y) { return key(x) < key(y); });
  Partial part(empty);
  part.fix_rest(pos);
  std::vector<std::pair<std::string, int>> env(v.begin(), v.end());
  std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
    Tri t = part.eval(f, env);
    if (t == F) return false;
    if (t == T) return true;
    if (i == pos.size()) return false;  // unreachable: a complete model is decided
    for (bool val : {false, true}) {
      part.set(pos[i], val);
      if (dfs(i + 1)) return true;
    }
    part.unset(pos[i]);
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  return part.model();
}

}  // namespace

Verdict bounded_equiv(const AnyFormula& f, const AnyFormula& g, int max_size, const Signature& sig,
                      const OracleOptions& opts) {
  Subject a = prepare(f, sig), b = prepare(g, sig);
  if (a.is_role && b.is_role && !opts.project) return role_equiv(a, b, max_size, sig, opts.min_size);
  std::vector<const Subject*> both{&a, &b};
  auto vars = vars_of(both);
  Evaluators ev;
  for (int n = opts.min_size; n <= max_size; ++n) {
    Model m(sig, n);
    std::optional<Verdict> bad;
    for_each_valuation(vars, n, [&](const Valuation& v) {
      auto pos = support_of(both, m, v, opts.project);
      return for_each_assignment(m, pos, [&](const Model& cur) {
        bool x = ev.eval(a, cur, v), y = ev.eval(b, cur, v);
        if (x == y) return true;
        bad = Verdict{Verdict::Kind::Counterexample, n, cur, v, x, y};
        return false;
      });
    });
    if (bad) return *bad;
  }
  return {Verdict::Kind::Equivalent, max_size};
}

Verdict bounded_sat(const AnyFormula& f, int max_size, const Signature& sig, const OracleOptions& opts) {
  Subject a = prepare(f, sig);
  std::vector<const Subject*> one{&a};
  auto vars = vars_of(one);
  bool tri = !a.second_order && plain_first_order(a.fo);
  Evaluators ev;
  for (int n = opts.min_size; n <= max_size; ++n) {
    Model m(sig, n);
    std::optional<Verdict> found;
    for_each_valuation(vars, n, [&](const Valuation& v) {
      auto pos = support_of(one, m, v, opts.project);
      if (tri) {
        if (auto w = search(a.fo, m, v, pos)) {
          found = Verdict{Verdict::Kind::Satisfiable, n, *w, v};
          return false;
        }
        return true;
      }
      return for_each_assignment(m, pos, [&](const Model& cur) {
        if (!ev.eval(a, cur, v)) return true;
        found = Verdict{Verdict::Kind::Satisfiable, n, cur, v};
        return false;
      });
    });
    if (found) return *found;
  }
  return {Verdict::Kind::Unsat, max_size};
}

bool eval_any(const AnyFormula& f, const Model& m, const Valuation& v) {
  if (const auto* r = std::get_if<role::Formula>(&f)) {
    return eval_role(desugar(*r, m.sig()), m, {v.at("x"), v.at("y")});
  }
  const auto& g = std::get<fo::Formula>(f);
  return fo::is_first_order(g) ? eval_fo(g, m, v) : eval_sol(g, m, v);
}

std::vector<std::string> free_vars_any(const AnyFormula& f) {
  if (std::holds_alternative<role::Formula>(f)) return {"x", "y"};
  auto fv = fo::free_vars(std::get<fo::Formula>(f));
  return {fv.begin(), fv.end()};
}

}  // namespace rolelogic
