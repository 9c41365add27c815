#include <gtest/gtest.h>

#include <random>

#include "rolelogic/rolelogic.hpp"
#include "support.hpp"

using namespace rolelogic;

namespace {

struct FStars {
  Signature sig{{}, {"f"}};
  std::shared_ptr<const StarUniverse> u = StarUniverse::make(sig, 1, Relevance::full(sig));
  Extension out = 1u << u->ext_atom_index(0, true, 0, kNeighbor);
  Extension in = 1u << u->ext_atom_index(0, true, kNeighbor, 0);

  GenStar exactly_one_out(bool pin_empty) const {
    GenStar s{{"x1"}, {0}, u, 0, {}};
    for (Extension t = 1; t < u->extension_count(); ++t) s.set(t, Count::exact(t == out ? 1 : 0));
    if (pin_empty) s.set(0, Count::exact(0));
    return s;
  }
};

}  // namespace

TEST(Ispand, Examples) {
  FStars s;
  EXPECT_EQ(ispand(s.out, 0), s.out);
  EXPECT_FALSE(ispand(s.out, s.out));
  EXPECT_EQ(ispand(s.out, s.in), s.out | s.in);
}

TEST(Kispand, Examples) {
  Signature sig({"A"}, {"f"});
  auto u = StarUniverse::make(sig, 1, Relevance::full(sig));
  const int a = u->var_atom_index(0, false, 0, 0);
  const int loop = u->var_atom_index(0, true, 0, 0);
  Gccat empty{u, {"x1"}, 0};
  Gccat ga{u, {"x1"}, std::uint64_t{1} << a};
  Gccat gl{u, {"x1"}, std::uint64_t{1} << loop};
  auto e = kispand(empty, empty);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->positives, 0u);
  auto al = kispand(ga, gl);
  ASSERT_TRUE(al);
  EXPECT_EQ(al->positives, ga.positives | gl.positives);
  EXPECT_FALSE(kispand(ga, ga));
}

TEST(Combine, ExactlyTwoSuccessors) {
  FStars s;
  GenStar c = s.exactly_one_out(false);
  auto res = combine_stars(c, c);
  ASSERT_EQ(res.size(), 1u);
  EXPECT_EQ(res[0].count(s.out), Count::exact(2));
  EXPECT_EQ(res[0].count(0), Count::at_least(0));
  EXPECT_EQ(res[0].count(s.in), Count::exact(0));
  auto lhs = fo::spatial(star_to_fo(c), star_to_fo(c));
  EXPECT_EQ(bounded_equiv(lhs, stars_to_fo(res), 4, s.sig).kind, Verdict::Kind::Equivalent);
}

TEST(Combine, PinnedEmptyExtensionIsEmpty) {
  FStars s;
  GenStar c = s.exactly_one_out(true);
  EXPECT_TRUE(combine_stars(c, c).empty());
  EXPECT_EQ(bounded_sat(fo::spatial(star_to_fo(c), star_to_fo(c)), 4, s.sig).kind, Verdict::Kind::Unsat);
}

TEST(Combine, EmpLikeStarIsUnit) {
  FStars s;
  std::mt19937_64 rng(21);
  GenStar unit{{"x1"}, {0}, s.u, 0, {}};
  for (Extension t = 1; t < s.u->extension_count(); ++t) unit.set(t, Count::exact(0));
  for (int i = 0; i < 20; ++i) {
    GenStar c = rolelogic::testing::random_star(s.u, {"x1"}, rng, 2);
    EXPECT_EQ(bounded_equiv(star_to_fo(c), stars_to_fo(combine_stars(c, unit)), 3, s.sig).kind,
              Verdict::Kind::Equivalent);
  }
}

TEST(Combine, SoundAndDeterministic) {
  FStars s;
  std::mt19937_64 rng(22);
  for (int i = 0; i < 25; ++i) {
    GenStar a = rolelogic::testing::random_star(s.u, {"x1"}, rng, 2);
    GenStar b = rolelogic::testing::random_star(s.u, {"x1"}, rng, 2);
    auto ab = combine_stars(a, b);
    EXPECT_EQ(ab, combine_stars(b, a));
    for (std::size_t j = 1; j < ab.size(); ++j) EXPECT_TRUE(ab[j - 1] < ab[j]);
    auto lhs = fo::spatial(star_to_fo(a), star_to_fo(b));
    // Each result implies the spatial conjunction.
    for (const auto& c : ab)
      EXPECT_EQ(bounded_sat(fo::conj(star_to_fo(c), fo::neg(lhs)), 3, s.sig).kind, Verdict::Kind::Unsat);
  }
}

TEST(Combine, DifferentEqualitiesGiveNothing) {
  Signature sig({}, {"f"});
  auto u1 = StarUniverse::make(sig, 1, Relevance::full(sig));
  auto u2 = StarUniverse::make(sig, 2, Relevance::full(sig));
  GenStar merged{{"x1", "x2"}, {1, 1}, u1, 0, {}};
  GenStar apart{{"x1", "x2"}, {0, 1}, u2, 0, {}};
  EXPECT_TRUE(combine_stars(merged, apart).empty());
}

TEST(SpatialStar, OnesAndAny) {
  FStars s;
  GenStar g{{"x1"}, {0}, s.u, 0, {}};
  g.set(s.out, Count::exact(2));
  g.set(s.in, Count::at_least(1));
  SpatialStar sp = star_to_spatial(g, Marker::Left);
  int ones = 0, anys = 0;
  for (const auto& a : sp.atoms) (a.kind == SpatialAtom::Kind::One ? ones : anys)++;
  EXPECT_EQ(ones, 3);
  EXPECT_EQ(anys, static_cast<int>(s.u->extension_count()) - 1);
  EXPECT_EQ(spatial_to_star(sp), g);
}

TEST(Eliminate, Examples) {
  Signature f({}, {"f"});
  auto ff = eliminate_spatial(parse_role("f * f", f), f);
  EXPECT_FALSE(fo::contains(ff, fo::Kind::Spatial));
  EXPECT_EQ(bounded_sat(ff, 3, f).kind, Verdict::Kind::Unsat);

  Signature sig({"A"}, {"f"});
  for (const char* s : {"card=1 f", "A & card=0 f", "card>=2 (f & A)", "f -> A"}) {
    auto r = parse_role(s, sig);
    auto e = eliminate_spatial(role::spatial(r, role::emp()), sig);
    EXPECT_EQ(bounded_equiv(r, e, 3, sig).kind, Verdict::Kind::Equivalent) << s;
  }
}

TEST(Eliminate, TraceAndNesting) {
  Signature sig({}, {"f", "g", "h"});
  auto r = parse_role("(card=1 f & card=0 fc(f)) * ((card=1 g & card=0 fc(g)) * card=0 edges)", sig);
  EliminationTrace tr;
  auto e = eliminate_spatial(r, sig, {}, &tr);
  EXPECT_EQ(tr.steps.size(), 2u);
  EXPECT_EQ(bounded_equiv(parse_role("card=1 f & card=1 g & card=0 h", sig), e, 3, sig).kind,
            Verdict::Kind::Equivalent);
}

TEST(Eliminate, Preconditions) {
  Signature sig({"A"}, {"f"});
  EXPECT_THROW(eliminate_spatial(parse_role("card>=1 (card>=1 f) * A", sig), sig), PreconditionError);
  EXPECT_THROW(eliminate_spatial(parse_role("acyclic(f) * A", sig), sig), PreconditionError);
  Signature ns({"A"}, {"f"}, {"f"});
  EXPECT_THROW(eliminate_spatial(parse_role("f * A", ns), ns), PreconditionError);
}

TEST(Eliminate, FullUniverseAgreesWithProjected) {
  Signature sig({"A"}, {"f"});
  std::mt19937_64 rng(23);
  EliminationOptions full;
  full.project = false;
  for (int i = 0; i < 10; ++i) {
    auto f = role::spatial(random_role(sig, 1, rng, Profile::StarFreeEligible),
                           random_role(sig, 1, rng, Profile::StarFreeEligible));
    auto a = eliminate_spatial(f, sig);
    auto b = eliminate_spatial(f, sig, full);
    EXPECT_EQ(bounded_equiv(a, b, 3, sig).kind, Verdict::Kind::Equivalent) << print(f);
  }
}
