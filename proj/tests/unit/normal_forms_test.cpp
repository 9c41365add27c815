#include <gtest/gtest.h>

#include <random>

#include "rolelogic/rolelogic.hpp"
#include "support.hpp"

using namespace rolelogic;

namespace {

bool equiv3(const fo::Formula& a, const fo::Formula& b, const Signature& sig) {
  return bounded_equiv(a, b, 3, sig).kind == Verdict::Kind::Equivalent;
}

}  // namespace

TEST(Cat, Examples) {
  Signature sig({"A"}, {});
  auto cubes = to_cat(parse_fo("A(x1)", sig), {"x1"}, sig);
  ASSERT_EQ(cubes.size(), 1u);
  EXPECT_EQ(cat_atoms(sig, 1).size(), 2u);  // A(x1), x1 = x1
  EXPECT_EQ(cubes[0].positives, (std::vector<bool>{true, true}));
  EXPECT_EQ(to_cat(fo::top(), {"x1"}, sig).size(), 2u);
  EXPECT_THROW(to_cat(parse_fo("exists x. A(x)", sig), {"x1"}, sig), PreconditionError);
}

TEST(Cat, RandomQuantifierFree) {
  Signature sig({"A"}, {"f"});
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto f = rolelogic::testing::random_fo(sig, {"x1", "x2"}, 0, 4, rng);
    auto cubes = to_cat(f, {"x1", "x2"}, sig);
    std::vector<fo::Formula> parts;
    for (const auto& c : cubes) parts.push_back(cube_to_fo(c, sig));
    EXPECT_TRUE(equiv3(f, fo::disj_all(parts), sig)) << print(f);
  }
}

TEST(Eqcat, Examples) {
  Signature sig({"A"}, {});
  auto atoms = cat_atoms(sig, 2);  // A(x1) A(x2) x1=x1 x1=x2 x2=x1 x2=x2
  auto cube = [&](std::vector<bool> p) { return CatCube{{"x1", "x2"}, p}; };
  EXPECT_FALSE(cat_to_eqcat(cube({true, true, false, false, false, true}), sig));  // x1 != x1
  EXPECT_FALSE(cat_to_eqcat(cube({true, false, true, true, true, true}), sig));   // x1 = x2, A(x1), !A(x2)
  auto e = cat_to_eqcat(cube({true, true, true, true, true, true}), sig);
  ASSERT_TRUE(e);
  ASSERT_EQ(e->prefix.assignments.size(), 1u);
  EXPECT_EQ(e->prefix.assignments[0], (std::pair<std::string, std::string>{"x1", "x2"}));
  EXPECT_EQ(e->gccat.vars, std::vector<std::string>{"x2"});
  EXPECT_TRUE(equiv3(eqcat_to_fo(*e), cube_to_fo(cube({true, true, true, true, true, true}), sig), sig));
}

TEST(Eqcat, AllCubesRoundTrip) {
  Signature sig({"A"}, {"f"});
  auto cubes = to_cat(fo::top(), {"x1", "x2"}, sig);
  for (const auto& c : cubes) {
    auto e = cat_to_eqcat(c, sig);
    ASSERT_TRUE(e);
    EXPECT_TRUE(equiv3(eqcat_to_fo(*e), cube_to_fo(c, sig), sig));
  }
}

TEST(Extensions, Counts) {
  EXPECT_EQ(extensions_of(Signature({}, {"f"}), {"x1"}).size(), 8u);
  EXPECT_EQ(extensions_of(Signature({"A"}, {}), {}).size(), 2u);
}

TEST(Extensions, EachIsRealizable) {
  Signature sig({"A"}, {"f"});
  auto u = StarUniverse::make(sig, 1, Relevance::full(sig));
  for (Extension t = 0; t < u->extension_count(); ++t) {
    auto cube = fo::conj(fo::neg(fo::eq("x", "x1")), extension_to_fo(*u, t, "x", {"x1"}));
    EXPECT_TRUE(bounded_sat(cube, 2, sig).holds()) << t;
  }
}

TEST(DepthOneNf, Examples) {
  Signature a({"A"}, {});
  auto s1 = depth_one_nf(parse_fo("A(x1)", a), a, {"x1"});
  ASSERT_EQ(s1.size(), 1u);
  EXPECT_EQ(s1[0].gccat, 1u);
  EXPECT_TRUE(s1[0].gamma.empty());

  Signature f({}, {"f"});
  auto s2 = depth_one_nf(parse_fo("exists>=1 x. f(x1,x)", f), f, {"x1"});
  auto u = s2.at(0).universe;
  const int out = u->ext_atom_index(0, true, 0, kNeighbor);
  int loop = 0, at_least_one = 0;
  for (const auto& s : s2) {
    if (s.gccat == 1u && s.gamma.empty()) ++loop;
    if (s.gamma.size() == 1 && (s.gamma.begin()->first >> out & 1u) &&
        s.gamma.begin()->second == Count::at_least(1))
      ++at_least_one;
  }
  EXPECT_EQ(loop, 1);
  EXPECT_EQ(at_least_one, 4);
  EXPECT_TRUE(equiv3(parse_fo("exists>=1 x. f(x1,x)", f), stars_to_fo(s2), f));
  EXPECT_TRUE(depth_one_nf(fo::bottom(), f, {"x1"}).empty());
}

TEST(DepthOneNf, CatalogWithProjection) {
  Signature sig({"A"}, {"f"});
  NfOptions opts;
  opts.project = true;
  for (const auto& s : rolelogic::testing::depth_one_catalog()) {
    auto f = parse_fo(s, sig);
    EXPECT_TRUE(equiv3(f, stars_to_fo(depth_one_nf(f, sig, {"x1"}, opts)), sig)) << s;
  }
}

TEST(DepthOneNf, CountLimit) {
  Signature sig({}, {"f"});
  NfOptions opts;
  opts.count_limit = 2;
  EXPECT_THROW(depth_one_nf(parse_fo("exists=3 x. f(x1,x)", sig), sig, {"x1"}, opts), PreconditionError);
  EXPECT_THROW(depth_one_nf(parse_fo("exists x. exists y. f(x,y)", sig), sig, {"x1"}), PreconditionError);
}

TEST(StarEval, Examples) {
  Signature sig({}, {"f"});
  auto u = StarUniverse::make(sig, 1, Relevance::full(sig));
  const Extension out = 1u << u->ext_atom_index(0, true, 0, kNeighbor);
  GenStar s{{"x1"}, {0}, u, 0, {}};
  s.set(out, Count::exact(1));
  Model m = parse_model("model { domain o, a; f = { (o,a) }; }", sig);
  EXPECT_TRUE(star_eval(s, m, {{"x1", m.element("o")}}));
  EXPECT_FALSE(star_eval(s, Model(sig, 2), {{"x1", 0}}));
  GenStar free{{"x1"}, {0}, u, 0, {}};
  EXPECT_TRUE(star_eval(free, Model(sig, 3), {{"x1", 1}}));
}

TEST(StarEval, AgreesWithPrintedForm) {
  Signature sig({"A"}, {"f"});
  auto u = StarUniverse::make(sig, 1, Relevance::full(sig));
  std::mt19937_64 rng(12);
  FoEvaluator ev;
  for (int i = 0; i < 40; ++i) {
    GenStar s = rolelogic::testing::random_star(u, {"x1"}, rng, 2);
    fo::Formula f = star_to_fo(s);
    for (int n = 1; n <= 3; ++n)
      enumerate_models(sig, n, [&](const Model& m) {
        for (int a = 0; a < n; ++a) EXPECT_EQ(star_eval(s, m, std::vector<int>{a}), ev.eval(f, m, {{"x1", a}}));
        return true;
      });
  }
}
