#include <algorithm>
#include <functional>
#include <set>

#include "rolelogic/error.hpp"
#include "rolelogic/spatial_elim.hpp"

namespace rolelogic {

namespace {

constexpr std::size_t kMaxMatchings = std::size_t{1} << 20;

struct Side {
  std::vector<std::pair<Extension, int>> ones;  // grouped One atoms
  std::vector<Extension> any;
};

Side side_of(const GenStar& s) {
  Side out;
  for (Extension t = 0; t < s.universe->extension_count(); ++t) {
    Count c = s.count(t);
    if (c.n > 0) out.ones.emplace_back(t, c.n);
    if (c.kind == Count::Kind::AtLeast) out.any.push_back(t);
  }
  return out;
}

}  // namespace

std::vector<GenStar> combine_stars(const GenStar& c1, const GenStar& c2) {
  if (c1.vars != c2.vars) throw PreconditionError("combine_stars: variable lists differ");
  if (c1.rep != c2.rep) return {};
  if (!(*c1.universe == *c2.universe))
    throw PreconditionError("combine_stars: stars over different universes");
  if (c1.gccat & c2.gccat) return {};

  const Side s1 = side_of(c1), s2 = side_of(c2);
  std::vector<bool> anyset(c1.universe->extension_count(), false);
  for (Extension a : s1.any)
    for (Extension b : s2.any)
      if (!(a & b)) anyset[a | b] = true;

  std::set<std::map<Extension, int>> results;
  std::map<Extension, int> ones;
  std::vector<int> cap2;
  for (const auto& [t, n] : s2.ones) cap2.push_back(n);

  auto add = [&](Extension t, int n) {
    if (n) ones[t] += n;
  };
  auto remove = [&](Extension t, int n) {
    if (!n) return;
    if ((ones[t] -= n) == 0) ones.erase(t);
  };

  // Remaining right-hand Ones go to left Any atoms.
  std::function<void(std::size_t)> right_rest = [&](std::size_t j) {
    if (j == s2.ones.size()) {
      results.insert(ones);
      if (results.size() > kMaxMatchings) throw GuardExceeded("combine_stars: too many matchings");
      return;
    }
    Extension t2 = s2.ones[j].first;
    int left = cap2[j];
    if (left == 0) return right_rest(j + 1);
    std::vector<Extension> partners;
    for (Extension a : s1.any)
      if (!(a & t2)) partners.push_back(a | t2);
    std::function<void(std::size_t, int)> spread = [&](std::size_t p, int rem) {
      if (rem == 0) return right_rest(j + 1);
      if (p == partners.size()) return;
      for (int k = rem; k >= 0; --k) {
        add(partners[p], k);
        spread(p + 1, rem - k);
        remove(partners[p], k);
      }
    };
    spread(0, left);
  };

  // Left Ones go to right Ones (consuming) or right Any atoms.
  std::function<void(std::size_t)> left_ones = [&](std::size_t i) {
    if (i == s1.ones.size()) return right_rest(0);
    auto [t1, n] = s1.ones[i];
    struct Partner {
      Extension ext;
      int right_one;  // index into s2.ones, or -1 for an Any atom
    };
    std::vector<Partner> partners;
    for (std::size_t j = 0; j < s2.ones.size(); ++j)
      if (!(s2.ones[j].first & t1)) partners.push_back({s2.ones[j].first | t1, static_cast<int>(j)});
    for (Extension b : s2.any)
      if (!(b & t1)) partners.push_back({b | t1, -1});
    std::function<void(std::size_t, int)> spread = [&](std::size_t p, int rem) {
      if (rem == 0) return left_ones(i + 1);
      if (p == partners.size()) return;
      const Partner& q = partners[p];
      int most = q.right_one < 0 ? rem : std::min(rem, cap2[q.right_one]);
      for (int k = most; k >= 0; --k) {
        if (q.right_one >= 0) cap2[q.right_one] -= k;
        add(q.ext, k);
        spread(p + 1, rem - k);
        remove(q.ext, k);
        if (q.right_one >= 0) cap2[q.right_one] += k;
      }
    };
    spread(0, n);
  };
  left_ones(0);

  std::vector<GenStar> out;
  for (const auto& r : results) {
    GenStar g{c1.vars, c1.rep, c1.universe, c1.gccat | c2.gccat, {}};
    for (Extension t = 0; t < c1.universe->extension_count(); ++t) {
      auto it = r.find(t);
      int n = it == r.end() ? 0 : it->second;
      g.set(t, anyset[t] ? Count::at_least(n) : Count::exact(n));
    }
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace rolelogic
