#include <bit>
#include <unordered_map>
#include <vector>

#include "eval_common.hpp"
#include "rolelogic/error.hpp"
#include "rolelogic/semantics.hpp"

namespace rolelogic {

namespace {

std::uint64_t full_mask(int n) {
  int bits = n * n;
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

std::uint64_t transpose(std::uint64_t w, int n) {
  std::uint64_t out = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((w >> (a * n + b)) & 1u) out |= std::uint64_t{1} << (b * n + a);
  return out;
}

std::uint64_t row(int c1, int n) { return ((std::uint64_t{1} << n) - 1) << (c1 * n); }

}  // namespace

struct RoleEvaluator::Impl {
  std::unordered_map<detail::MemoKey, std::uint64_t, detail::MemoKeyHash> memo;
  // Memo keys are node addresses, so evaluated formulas are kept alive.
  std::unordered_map<const role::Node*, role::Formula> roots;

  // Small models: a direct table per (node, size) indexed by the model bits.
  static constexpr int kDenseBits = 16;
  struct Dense {
    std::vector<std::uint64_t> value;
    std::vector<bool> known;
  };
  std::unordered_map<const void*, Dense> dense[9];

  static int dense_index(const Model& m) {
    std::uint64_t idx = 0;
    int used = 0;
    for (int w = 0; w < m.word_count(); ++w) {
      idx |= m.words()[w] << used;
      used += m.word_width(w);
    }
    return used <= kDenseBits ? static_cast<int>(idx) : -1;
  }

  std::uint64_t memo_eval(const role::Formula& f, const Model& m) {
    if (m.size() < 9) {
      int idx = dense_index(m);
      if (idx >= 0) {
        auto& d = dense[m.size()][f.get()];
        if (d.value.empty()) {
          int bits = 0;
          for (int w = 0; w < m.word_count(); ++w) bits += m.word_width(w);
          d.value.resize(std::size_t{1} << bits);
          d.known.resize(std::size_t{1} << bits);
        }
        if (d.known[idx]) return d.value[idx];
        std::uint64_t r = eval(f, m);
        d.value[idx] = r;
        d.known[idx] = true;
        return r;
      }
    }
    detail::MemoKey key{f.get(), 0, 0, 0};
    bool packed = detail::pack_model(m, key.a, key.b);
    if (packed) {
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
    }
    std::uint64_t r = eval(f, m);
    if (packed) {
      if (memo.size() > detail::kMemoCap) memo.clear();
      memo.emplace(key, r);
    }
    return r;
  }

  std::uint64_t eval(const role::Formula& f, const Model& m) {
    using role::Kind;
    const int n = m.size();
    const std::uint64_t full = full_mask(n);
    switch (f.kind()) {
      case Kind::True: return full;
      case Kind::False: return 0;
      case Kind::Unary: {
        int i = m.sig().unary_index(f.name());
        if (i < 0) throw SignatureError("predicate '" + f.name() + "' missing from model");
        std::uint64_t out = 0;
        for (int c1 = 0; c1 < n; ++c1)
          if (m.unary(i, c1)) out |= row(c1, n);
        return out;
      }
      case Kind::Binary: {
        int i = m.sig().binary_index(f.name());
        if (i < 0) throw SignatureError("predicate '" + f.name() + "' missing from model");
        // f holds at (c1,c2) iff f(c2,c1).
        return transpose(m.words()[m.unary_count() + i], n);
      }
      case Kind::Id: {
        std::uint64_t out = 0;
        for (int d = 0; d < n; ++d) out |= std::uint64_t{1} << (d * n + d);
        return out;
      }
      case Kind::Emp: {
        for (int w = 0; w < m.word_count(); ++w) {
          const std::string& name = w < m.unary_count()
                                        ? m.sig().unaries()[w]
                                        : m.sig().binaries()[w - m.unary_count()];
          if (m.sig().splittable(name) && m.words()[w] != 0) return 0;
        }
        return full;
      }
      case Kind::Acyclic: return detail::has_cycle(m, f.names()) ? 0 : full;
      case Kind::Not: return full & ~eval(f.body(), m);
      case Kind::And: {
        std::uint64_t l = eval(f.lhs(), m);
        return l ? l & eval(f.rhs(), m) : 0;
      }
      case Kind::Or: {
        std::uint64_t l = eval(f.lhs(), m);
        return l == full ? full : l | eval(f.rhs(), m);
      }
      case Kind::Implies: return full & (~eval(f.lhs(), m) | eval(f.rhs(), m));
      case Kind::Inv: return transpose(eval(f.body(), m), n);
      case Kind::Shift: {
        std::uint64_t g = eval(f.body(), m), out = 0;
        for (int c2 = 0; c2 < n; ++c2)
          if ((g >> (c2 * n + c2)) & 1u)
            for (int c1 = 0; c1 < n; ++c1) out |= std::uint64_t{1} << (c1 * n + c2);
        return out;
      }
      case Kind::CardGeq:
      case Kind::CardLeq:
      case Kind::CardEq: {
        std::uint64_t g = eval(f.body(), m), out = 0;
        for (int c1 = 0; c1 < n; ++c1) {
          // Count d with G at (d, c1).
          int count = 0;
          for (int d = 0; d < n; ++d) count += (g >> (d * n + c1)) & 1u;
          bool ok = f.kind() == Kind::CardGeq   ? count >= f.k()
                    : f.kind() == Kind::CardLeq ? count <= f.k()
                                                : count == f.k();
          if (ok) out |= row(c1, n);
        }
        return out;
      }
      case Kind::Box: {
        // [G] = card=0 !G
        std::uint64_t g = full & ~eval(f.body(), m), out = 0;
        for (int c1 = 0; c1 < n; ++c1) {
          bool any = false;
          for (int d = 0; d < n; ++d) any |= (g >> (d * n + c1)) & 1u;
          if (!any) out |= row(c1, n);
        }
        return out;
      }
      case Kind::Spatial: {
        std::uint64_t out = 0;
        detail::for_each_split2(m, [&](const Model& p1, const Model& p2) {
          std::uint64_t a = memo_eval(f.lhs(), p1);
          if ((a & ~out) == 0) return false;
          out |= a & memo_eval(f.rhs(), p2);
          return out == full;
        });
        return out;
      }
      default:
        throw PreconditionError("evaluator needs a desugared formula");
    }
  }
};

RoleEvaluator::RoleEvaluator() : impl_(std::make_unique<Impl>()) {}
RoleEvaluator::~RoleEvaluator() = default;
RoleEvaluator::RoleEvaluator(RoleEvaluator&&) noexcept = default;
RoleEvaluator& RoleEvaluator::operator=(RoleEvaluator&&) noexcept = default;

std::uint64_t RoleEvaluator::mask(const role::Formula& f, const Model& m) {
  impl_->roots.emplace(f.get(), f);
  return impl_->eval(f, m);
}

std::uint64_t eval_role_mask(const role::Formula& f, const Model& m) {
  RoleEvaluator ev;
  return ev.mask(f, m);
}

bool eval_role(const role::Formula& f, const Model& m, Pair p) {
  if (p.c1 < 0 || p.c2 < 0 || p.c1 >= m.size() || p.c2 >= m.size())
    throw PreconditionError("pair element outside the domain");
  return (eval_role_mask(f, m) >> (p.c1 * m.size() + p.c2)) & 1u;
}

}  // namespace rolelogic
