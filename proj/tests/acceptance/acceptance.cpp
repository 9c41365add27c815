// Acceptance checks. One PASS/FAIL line per criterion; exit status 1 if any fails.
#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rolelogic/rolelogic.hpp"
#include "support.hpp"

using namespace rolelogic;
using rolelogic::testing::all_values;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_equiv(const Verdict& v, int n) { return v.kind == Verdict::Kind::Equivalent && v.size == n; }

// 1. Record join: two records over disjoint fields combine into one.
Outcome record_join() {
  Signature sig({}, {"f", "g", "h"});
  auto pf = parse_role("card=1 f & card=0 fc(f)", sig);
  auto pg = parse_role("card=1 g & card=0 fc(g)", sig);
  auto pfg = parse_role("card=1 f & card=1 g & card=0 h", sig);
  auto joined = role::spatial(pf, pg);
  Verdict direct = bounded_equiv(joined, pfg, 3, sig);
  fo::Formula elim = eliminate_spatial(joined, sig);
  bool spatial_free = !fo::contains(elim, fo::Kind::Spatial);
  Verdict after = bounded_equiv(elim, pfg, 3, sig);
  bool ok = is_equiv(direct, 3) && spatial_free && is_equiv(after, 3);
  return {ok, "direct: " + direct.describe().substr(0, direct.describe().find('\n')) +
                  "; eliminated (" + std::to_string(fo::size(elim)) + " nodes, spatial-free=" +
                  (spatial_free ? "yes" : "no") + "): " + after.describe().substr(0, after.describe().find('\n'))};
}

// 2. Associativity, commutativity, emp unit and distributivity over |.
Outcome spatial_algebra() {
  Signature sig({"A"}, {"f"});
  std::mt19937_64 rng(2002);
  OracleOptions opts;
  opts.project = false;
  int bad = 0, checks = 0;
  std::string first;
  for (int i = 0; i < 200; ++i) {
    auto f1 = random_role(sig, 2, rng, Profile::RoleCore);
    auto f2 = random_role(sig, 2, rng, Profile::RoleCore);
    auto f3 = random_role(sig, 2, rng, Profile::RoleCore);
    std::vector<std::pair<role::Formula, role::Formula>> laws{
        {role::spatial(role::spatial(f1, f2), f3), role::spatial(f1, role::spatial(f2, f3))},
        {role::spatial(f1, f2), role::spatial(f2, f1)},
        {role::spatial(f1, role::emp()), f1},
        {role::spatial(f1, role::disj(f2, f3)), role::disj(role::spatial(f1, f2), role::spatial(f1, f3))},
    };
    for (const auto& [l, r] : laws) {
      ++checks;
      Verdict v = bounded_equiv(l, r, 3, sig, opts);
      if (!is_equiv(v, 3)) {
        if (bad++ == 0) first = print(l) + " vs " + print(r);
      }
    }
  }
  return {bad == 0, std::to_string(checks) + " law instances, " + std::to_string(bad) + " counterexamples" +
                        (first.empty() ? "" : " (first: " + first + ")")};
}

// 3. Depth-one normal form is equivalent to its input.
Outcome normal_form() {
  Signature sig({"A"}, {"f"});
  std::vector<fo::Formula> forms;
  for (const auto& s : rolelogic::testing::depth_one_catalog()) forms.push_back(parse_fo(s, sig));
  std::mt19937_64 rng(3003);
  while (forms.size() < 130) {
    forms.push_back(random_fo_depth1(sig, 3, rng));
  }
  int bad = 0;
  std::size_t stars = 0;
  std::string first;
  for (const auto& f : forms) {
    auto nf = depth_one_nf(f, sig, {"x1"});
    stars += nf.size();
    Verdict v = bounded_equiv(f, stars_to_fo(nf), 3, sig);
    bool ok = is_equiv(v, 3);
    // Direct star semantics as well as the printed form.
    for (int n = 1; ok && n <= 2; ++n)
      enumerate_models(sig, n, [&](const Model& m) {
        for (int a = 0; a < n; ++a) {
          bool any = false;
          for (const auto& s : nf) any = any || star_eval(s, m, std::vector<int>{a});
          if (any != eval_fo(f, m, {{"x1", a}})) {
            ok = false;
            return false;
          }
        }
        return true;
      });
    if (!ok && bad++ == 0) first = print(f);
  }
  return {bad == 0, std::to_string(forms.size()) + " formulas, " + std::to_string(stars) + " stars, " +
                        std::to_string(bad) + " mismatches" + (first.empty() ? "" : " (first: " + first + ")")};
}

// 4. Combining single extensions.
Outcome extension_rules() {
  Signature sig({}, {"f"});
  auto u = StarUniverse::make(sig, 1, Relevance::full(sig));
  int defined = 0, undefined = 0, bad = 0;
  auto ext = [&](Extension t) { return fo::conj(fo::neg(fo::eq("x", "x1")), extension_to_fo(*u, t, "x", {"x1"})); };
  for (Extension a = 0; a < u->extension_count(); ++a)
    for (Extension b = 0; b < u->extension_count(); ++b) {
      fo::Formula lhs = fo::spatial(ext(a), ext(b));
      auto c = ispand(a, b);
      if (c) {
        ++defined;
        if (!is_equiv(bounded_equiv(lhs, ext(*c), 3, sig), 3)) ++bad;
      } else {
        ++undefined;
        if (bounded_sat(lhs, 3, sig).kind != Verdict::Kind::Unsat) ++bad;
      }
    }
  return {bad == 0 && defined + undefined == 64,
          std::to_string(defined) + " defined pairs equivalent, " + std::to_string(undefined) +
              " undefined pairs unsatisfiable, " + std::to_string(bad) + " failures"};
}

// 5. Stars against their spatial translation on marked models.
Outcome star_translation() {
  Signature sig({}, {"f"});
  Signature marked = sig;
  marked.add_unary("B1");
  marked.add_unary("B2");
  std::mt19937_64 rng(5005);
  auto u1 = StarUniverse::make(sig, 1, Relevance::full(sig));
  auto u2 = StarUniverse::make(sig, 2, Relevance::full(sig));
  std::vector<GenStar> stars;
  for (int i = 0; i < 40; ++i) stars.push_back(rolelogic::testing::random_star(u1, {"x1"}, rng, 2));
  for (int i = 0; i < 10; ++i) stars.push_back(rolelogic::testing::random_star(u2, {"x1", "x2"}, rng, 1));
  int bad = 0;
  long checks = 0;
  FoEvaluator ev;
  for (const auto& s : stars) {
    const int k = static_cast<int>(s.vars.size());
    for (Marker mk : {Marker::Left, Marker::Right, Marker::Both}) {
      SpatialStar sp = star_to_spatial(s, mk);
      fo::Formula sp_fo = rolelogic::testing::spatial_star_formula(sp, "B1", "B2");
      for (int n = 1; n <= 3; ++n)
        enumerate_models(sig, n, [&](const Model& m) {
          for (const auto& vals : all_values(k, n)) {
            bool distinct = k == 1 || vals[0] != vals[1];
            if (!distinct) continue;
            ++checks;
            bool star = star_eval(s, m, vals);
            bool tagged = spatial_star_eval(sp, m, vals, mk);
            bool generic = star;
            // The split-based evaluation of the marked formula is too slow beyond two elements.
            if (n <= 2) {
              Model mm = rolelogic::testing::marked_model(m, marked, vals, mk, "B1", "B2");
              generic = ev.eval(sp_fo, mm, s.vars, vals);
            }
            if (star != tagged || star != generic) ++bad;
          }
          return true;
        });
    }
  }
  return {bad == 0, std::to_string(stars.size()) + " stars x 3 markers, " + std::to_string(checks) +
                        " evaluations, " + std::to_string(bad) + " failures"};
}

// 6. combine_stars computes the spatial conjunction of two stars.
Outcome combine_theorem() {
  Signature sig({}, {"f"});
  auto u = StarUniverse::make(sig, 1, Relevance::full(sig));
  std::mt19937_64 rng(6006);
  std::vector<std::pair<GenStar, GenStar>> pairs;
  GenStar pinned{{"x1"}, {0}, u, 0, {}};
  const Extension out = 1u << u->ext_atom_index(0, true, 0, kNeighbor);
  for (Extension t = 0; t < u->extension_count(); ++t) pinned.set(t, Count::exact(t == out ? 1 : 0));
  pairs.emplace_back(pinned, pinned);
  while (pairs.size() < 50)
    pairs.emplace_back(rolelogic::testing::random_star(u, {"x1"}, rng, 2),
                       rolelogic::testing::random_star(u, {"x1"}, rng, 2));
  int bad = 0;
  std::size_t results = 0;
  bool pinned_ok = false;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto res = combine_stars(pairs[i].first, pairs[i].second);
    results += res.size();
    fo::Formula lhs = fo::spatial(star_to_fo(pairs[i].first), star_to_fo(pairs[i].second));
    Verdict v = bounded_equiv(lhs, stars_to_fo(res), 4, sig);
    if (!is_equiv(v, 4)) ++bad;
    if (i == 0) pinned_ok = res.empty() && bounded_sat(lhs, 4, sig).kind == Verdict::Kind::Unsat;
  }
  return {bad == 0 && pinned_ok, std::to_string(pairs.size()) + " pairs, " + std::to_string(results) +
                                     " result stars, " + std::to_string(bad) + " inequivalent; pinned pair " +
                                     (pinned_ok ? "empty and unsatisfiable" : "WRONG")};
}

// 7. Elimination on random record-like operands.
Outcome elimination() {
  Signature sig({"A"}, {"f"});
  std::mt19937_64 rng(7007);
  int bad = 0;
  std::size_t largest = 0;
  std::string first;
  for (int i = 0; i < 100; ++i) {
    auto a = random_role(sig, 2, rng, Profile::StarFreeEligible);
    auto b = random_role(sig, 2, rng, Profile::StarFreeEligible);
    auto f = role::spatial(a, b);
    fo::Formula e = eliminate_spatial(f, sig);
    largest = std::max(largest, fo::size(e));
    bool ok = !fo::contains(e, fo::Kind::Spatial) && is_equiv(bounded_equiv(f, e, 3, sig), 3);
    if (!ok && bad++ == 0) first = print(f);
  }
  return {bad == 0, "100 pairs, " + std::to_string(bad) + " failures, largest output " + std::to_string(largest) +
                        " nodes" + (first.empty() ? "" : " (first: " + first + ")")};
}

// 8. Role translations against golden files.
Outcome golden_roles() {
  const std::string dir = ROLELOGIC_TEST_DIR;
  int bad = 0;
  std::string failed;
  for (const char* name : {"fig4_fields", "fig4_identities", "fig5_fields", "fig5_slots", "node"}) {
    RoleFile rf = parse_role_file(read_file(dir + "/fixtures/" + name + ".roles"));
    std::string got;
    for (const auto& d : rf.roles) got += "let " + d.name + " = " + print(translate(d, rf.sig)) + ";\n";
    if (got != read_file(dir + "/golden/" + name + ".txt")) {
      ++bad;
      failed += std::string(" ") + name;
    }
  }
  return {bad == 0, "5 golden files, " + std::to_string(bad) + " differ" + failed};
}

// 9. Second-order translation.
Outcome second_order() {
  Signature sig({"A"}, {"f"});
  std::mt19937_64 rng(9009);
  int bad = 0;
  for (int i = 0; i < 50; ++i) {
    fo::Formula f = rolelogic::testing::random_single_spatial(sig, rng);
    fo::Formula s = to_sol(f, sig);
    for (int n = 1; n <= 2; ++n)
      enumerate_models(sig, n, [&](const Model& m) {
        for (int a = 0; a < n; ++a)
          if (eval_sol(s, m, {{"x", a}}) != eval_fo(f, m, {{"x", a}})) {
            ++bad;
            return false;
          }
        return true;
      });
  }
  Signature tsig({}, {"f"});
  fo::Formula tc = parse_fo("(lfp P(u,w). f(u,w) | exists z. (f(u,z) & P(z,w)))(x,y)", tsig);
  fo::Formula tcs = to_sol(tc, tsig);
  int tc_bad = 0;
  for (int n = 1; n <= 3; ++n)
    enumerate_models(tsig, n, [&](const Model& m) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (eval_sol(tcs, m, {{"x", a}, {"y", b}}) != eval_fo(tc, m, {{"x", a}, {"y", b}})) ++tc_bad;
      return true;
    });
  return {bad == 0 && tc_bad == 0, "50 single-spatial formulas: " + std::to_string(bad) +
                                       " disagree; transitive closure |D|<=3: " + std::to_string(tc_bad) +
                                       " disagreements"};
}

// 10. The first-order reduction preserves satisfiability per domain size.
Outcome btr() {
  Signature sig({"A"}, {"f"});
  std::mt19937_64 rng(1010);
  int bad = 0, sat = 0, unsat = 0;
  for (int i = 0; i < 50; ++i) {
    fo::Formula f = rolelogic::testing::random_interesting(sig, 2, rng);
    auto [g, esig] = btr_reduce(f, sig);
    for (int n = 1; n <= 3; ++n) {
      OracleOptions opts;
      opts.min_size = n;
      bool a = bounded_sat(f, n, sig, opts).holds();
      bool b = bounded_sat(g, n, esig.extended(), opts).holds();
      (a ? sat : unsat)++;
      if (a != b) ++bad;
    }
  }
  return {bad == 0, "150 (formula, size) instances: " + std::to_string(sat) + " sat, " + std::to_string(unsat) +
                        " unsat, " + std::to_string(bad) + " disagreements"};
}

// Role formula over B that depends on the first component only.
role::Formula object_formula(std::mt19937_64& rng, int depth) {
  if (depth == 0 || rng() % 3 == 0) {
    switch (rng() % 4) {
      case 0: return role::top();
      case 1: return role::bottom();
      default: return role::unary("B");
    }
  }
  switch (rng() % 4) {
    case 0: return role::neg(object_formula(rng, depth - 1));
    case 1: return role::conj(object_formula(rng, depth - 1), object_formula(rng, depth - 1));
    case 2: return role::disj(object_formula(rng, depth - 1), object_formula(rng, depth - 1));
    default: return role::card_geq(static_cast<int>(rng() % 3), object_formula(rng, depth - 1));
  }
}

// 11. Substituting a formula for a unary predicate under spatial conjunction.
Outcome substitution() {
  std::mt19937_64 rng(1111);
  // Splittable P, G = A.
  Signature ssig({"A", "P"}, {"f"});
  role::Formula g = role::unary("A");
  int forward_bad = 0;
  long samples = 0;
  std::string witness;
  for (int i = 0; i < 100; ++i) {
    auto f = role::spatial(rolelogic::testing::random_plain_role(ssig, 2, rng),
                           rolelogic::testing::random_plain_role(ssig, 2, rng));
    auto lhs = substitute_unary(f, "P", g);
    for (int n = 1; n <= 2; ++n)
      enumerate_models(ssig, n, [&](const Model& m) {
        Model mp = m;
        for (int d = 0; d < n; ++d) mp.set_unary(ssig.unary_index("P"), d, eval_role(g, m, {d, d}));
        std::uint64_t l = eval_role_mask(lhs, m), r = eval_role_mask(f, mp);
        ++samples;
        if (l & ~r) ++forward_bad;
        if ((r & ~l) && witness.empty()) {
          int bit = std::countr_zero(r & ~l);
          std::ostringstream os;
          os << "F = " << print(f) << " at (c1,c2) = (" << m.element_name(bit / n) << "," << m.element_name(bit % n)
             << "), F[P:=A] false, F true with P = A, model " << print_model(m);
          witness = os.str();
        }
        return true;
      });
  }
  // Nonsplittable P, G over a nonsplittable B.
  Signature nsig({"A", "P", "B"}, {"f"}, {"P", "B"});
  int eq_bad = 0;
  for (int i = 0; i < 100; ++i) {
    auto f = random_role(nsig, 3, rng, Profile::RoleCore);
    auto gb = object_formula(rng, 2);
    auto lhs = substitute_unary(f, "P", gb);
    for (int n = 1; n <= 2; ++n)
      enumerate_models(nsig, n, [&](const Model& m) {
        Model mp = m;
        for (int d = 0; d < n; ++d) mp.set_unary(nsig.unary_index("P"), d, eval_role(gb, m, {d, d}));
        ++samples;
        if (eval_role_mask(lhs, m) != eval_role_mask(f, mp)) ++eq_bad;
        return true;
      });
  }
  bool ok = forward_bad == 0 && !witness.empty() && eq_bad == 0;
  std::cout << "  converse counterexample (splittable P): " << (witness.empty() ? "none found" : witness) << "\n";
  return {ok, std::to_string(samples) + " samples; forward failures " + std::to_string(forward_bad) +
                  "; converse counterexample " + (witness.empty() ? "missing" : "found") +
                  "; nonsplittable mismatches " + std::to_string(eq_bad)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all{
      {1, "record join", record_join},
      {2, "spatial conjunction algebra", spatial_algebra},
      {3, "depth-one normal form", normal_form},
      {4, "extension combination rules", extension_rules},
      {5, "star to spatial translation", star_translation},
      {6, "star combination theorem", combine_theorem},
      {7, "spatial elimination", elimination},
      {8, "role translation golden files", golden_roles},
      {9, "second-order translation", second_order},
      {10, "first-order reduction", btr},
      {11, "substitution behaviour", substitution},
  };
  int failed = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::printf("%s [%d] %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
