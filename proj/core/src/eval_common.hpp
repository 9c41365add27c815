#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "rolelogic/model.hpp"

namespace rolelogic::detail {

inline constexpr std::size_t kMemoCap = std::size_t{1} << 22;

struct MemoKey {
  const void* node;
  std::uint64_t val;
  std::uint64_t a;
  std::uint64_t b;
  friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const {
    std::uint64_t h = reinterpret_cast<std::uintptr_t>(k.node) * 0x9E3779B97F4A7C15ull;
    for (std::uint64_t x : {k.val, k.a, k.b}) {
      h ^= x + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// Concatenates all predicate words into 128 bits; false if they do not fit.
inline bool pack_model(const Model& m, std::uint64_t& a, std::uint64_t& b) {
  a = b = 0;
  int used = 0;
  const auto& w = m.words();
  for (int i = 0; i < m.word_count(); ++i) {
    int width = m.word_width(i);
    if (used + width > 128) return false;
    for (int bit = 0; bit < width; ++bit) {
      if (!((w[i] >> bit) & 1u)) continue;
      int pos = used + bit;
      if (pos < 64)
        a |= std::uint64_t{1} << pos;
      else
        b |= std::uint64_t{1} << (pos - 64);
    }
    used += width;
  }
  // Domain size disambiguates models of different sizes.
  b ^= static_cast<std::uint64_t>(m.size()) << 60;
  return used <= 124;
}

// True tuples of splittable predicates as (word, bit).
inline std::vector<std::pair<int, int>> splittable_tuples(const Model& m) {
  std::vector<std::pair<int, int>> out;
  const Signature& sig = m.sig();
  for (int i = 0; i < m.word_count(); ++i) {
    const std::string& name =
        i < m.unary_count() ? sig.unaries()[i] : sig.binaries()[i - m.unary_count()];
    if (!sig.splittable(name)) continue;
    for (int bit = 0; bit < m.word_width(i); ++bit)
      if ((m.words()[i] >> bit) & 1u) out.emplace_back(i, bit);
  }
  return out;
}

// Calls `f(part1, part2)` for each 2-split until it returns true.
bool for_each_split2(const Model& m, const std::function<bool(const Model&, const Model&)>& f);

// Union of the named relations has a directed cycle (self-loops included).
bool has_cycle(const Model& m, const std::vector<std::string>& relations);

}  // namespace rolelogic::detail
