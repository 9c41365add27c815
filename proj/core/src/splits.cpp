#include <cstdlib>
#include <string>

#include "eval_common.hpp"
#include "rolelogic/error.hpp"
#include "rolelogic/limits.hpp"
#include "rolelogic/semantics.hpp"

namespace rolelogic {

std::size_t max_tuples(std::size_t fallback) {
  if (const char* env = std::getenv("ROLELOGIC_MAX_TUPLES")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return fallback;
}

Splits::Splits(const Model& m, int parts) : nparts_(parts) {
  if (parts < 1) throw PreconditionError("splits: parts must be at least 1");
  tuples_ = detail::splittable_tuples(m);
  Model base = m;
  for (auto [w, bit] : tuples_) base.words()[w] &= ~(std::uint64_t{1} << bit);
  parts_.assign(parts, base);
  for (std::size_t i = 0; i < tuples_.size(); ++i) {
    if (total_ > (~std::uint64_t{0}) / parts) throw GuardExceeded("too many splits");
    total_ *= parts;
  }
  digits_.assign(tuples_.size(), 0);
}

bool Splits::next() {
  if (!started_) {
    started_ = true;
    for (auto [w, bit] : tuples_) parts_[0].words()[w] |= std::uint64_t{1} << bit;
    return true;
  }
  // Odometer increment; move each changed tuple between parts.
  for (std::size_t i = 0; i < tuples_.size(); ++i) {
    auto [w, bit] = tuples_[i];
    std::uint64_t mask = std::uint64_t{1} << bit;
    parts_[digits_[i]].words()[w] &= ~mask;
    if (digits_[i] + 1 < nparts_) {
      ++digits_[i];
      parts_[digits_[i]].words()[w] |= mask;
      return true;
    }
    digits_[i] = 0;
    parts_[0].words()[w] |= mask;
  }
  return false;
}

namespace detail {

bool for_each_split2(const Model& m, const std::function<bool(const Model&, const Model&)>& f) {
  auto tuples = splittable_tuples(m);
  if (tuples.size() > 62 || tuples.size() > max_tuples(40))
    throw GuardExceeded("spatial conjunction over " + std::to_string(tuples.size()) +
                        " tuples exceeds the split guard");
  Model p1 = m, p2 = m;
  for (auto [w, bit] : tuples) p2.words()[w] &= ~(std::uint64_t{1} << bit);
  // p1 starts with every tuple; p2 with none.
  std::uint64_t count = std::uint64_t{1} << tuples.size();
  std::uint64_t prev_gray = 0;
  if (f(p1, p2)) return true;
  for (std::uint64_t i = 1; i < count; ++i) {
    std::uint64_t gray = i ^ (i >> 1);
    std::uint64_t changed = gray ^ prev_gray;
    prev_gray = gray;
    int idx = __builtin_ctzll(changed);
    auto [w, bit] = tuples[idx];
    std::uint64_t mask = std::uint64_t{1} << bit;
    p1.words()[w] ^= mask;
    p2.words()[w] ^= mask;
    if (f(p1, p2)) return true;
  }
  return false;
}

bool has_cycle(const Model& m, const std::vector<std::string>& relations) {
  int n = m.size();
  std::uint64_t adj = 0;
  for (auto& r : relations) {
    int i = m.sig().binary_index(r);
    if (i < 0) throw SignatureError("acyclic: unknown binary predicate '" + r + "'");
    adj |= m.words()[m.unary_count() + i];
  }
  // Kahn's algorithm on the union graph.
  std::vector<int> indeg(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((adj >> (a * n + b)) & 1u) ++indeg[b];
  std::vector<int> stack;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int removed = 0;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    ++removed;
    for (int b = 0; b < n; ++b)
      if ((adj >> (a * n + b)) & 1u && --indeg[b] == 0) stack.push_back(b);
  }
  return removed < n;
}

}  // namespace detail
}  // namespace rolelogic
