#include <gtest/gtest.h>

#include <random>

#include "rolelogic/rolelogic.hpp"

using namespace rolelogic;

TEST(Models, Counts) {
  EXPECT_EQ(model_count(Signature({"A"}, {"f"}), 1), 4u);
  EXPECT_EQ(model_count(Signature({"A"}, {"f"}), 2), 64u);
  EXPECT_EQ(model_count(Signature(), 3), 1u);
  std::uint64_t seen = 0;
  enumerate_models(Signature({"A"}, {"f"}), 2, [&](const Model&) { return ++seen < 10; });
  EXPECT_EQ(seen, 10u);
}

TEST(Equiv, Examples) {
  Signature sig({"A"}, {"f"});
  auto a = parse_role("A", sig);
  Verdict same = bounded_equiv(a, a, 3, sig);
  EXPECT_EQ(same.kind, Verdict::Kind::Equivalent);
  EXPECT_EQ(same.size, 3);
  Verdict diff = bounded_equiv(a, parse_role("!A", sig), 3, sig);
  EXPECT_EQ(diff.kind, Verdict::Kind::Counterexample);
  EXPECT_EQ(diff.size, 1);
  ASSERT_TRUE(diff.model);
  EXPECT_NE(diff.left, diff.right);
  EXPECT_NE(diff.describe().find("COUNTEREXAMPLE at domain size 1"), std::string::npos);
}

TEST(Equiv, ProjectionDoesNotChangeVerdicts) {
  Signature sig({"A"}, {"f"});
  std::mt19937_64 rng(41);
  OracleOptions full;
  full.project = false;
  for (int i = 0; i < 60; ++i) {
    auto f = random_role(sig, 2, rng, Profile::RoleCore);
    auto g = random_role(sig, 2, rng, Profile::RoleCore);
    fo::Formula ff = rl2_to_fo(f, "x", "y", sig);
    EXPECT_EQ(bounded_equiv(ff, g, 2, sig).holds(), bounded_equiv(ff, g, 2, sig, full).holds());
    EXPECT_EQ(bounded_sat(ff, 2, sig).holds(), bounded_sat(ff, 2, sig, full).holds());
  }
}

TEST(Sat, Examples) {
  Signature sig({"A"}, {"f"});
  EXPECT_EQ(bounded_sat(parse_role("A & !A", sig), 3, sig).kind, Verdict::Kind::Unsat);
  Verdict v = bounded_sat(parse_role("card>=2 f", sig), 3, sig);
  EXPECT_EQ(v.kind, Verdict::Kind::Satisfiable);
  EXPECT_EQ(v.size, 2);
  ASSERT_TRUE(v.model);
  EXPECT_TRUE(eval_any(parse_role("card>=2 f", sig), *v.model, v.valuation));
}

TEST(Sat, WitnessesAreReal) {
  Signature sig({"A"}, {"f"});
  std::mt19937_64 rng(42);
  for (int i = 0; i < 60; ++i) {
    fo::Formula f = random_fo_depth1(sig, 3, rng);
    Verdict v = bounded_sat(f, 3, sig);
    if (v.holds()) {
      EXPECT_TRUE(eval_fo(f, *v.model, v.valuation)) << print(f);
    } else {
      OracleOptions full;
      full.project = false;
      EXPECT_FALSE(bounded_sat(f, 3, sig, full).holds()) << print(f);
    }
  }
}

TEST(Random, Deterministic) {
  Signature sig({"A"}, {"f"});
  EXPECT_EQ(print(random_formula(sig, 2, 1, Profile::RoleCore)), print(random_formula(sig, 2, 1, Profile::RoleCore)));
  EXPECT_NE(print(random_formula(sig, 3, 1, Profile::RoleCore)), print(random_formula(sig, 3, 2, Profile::RoleCore)));
}

TEST(Random, ProfilesRespectShape) {
  Signature sig({"A"}, {"f"});
  std::mt19937_64 rng(43);
  for (int i = 0; i < 100; ++i) {
    EXPECT_LE(metrics(random_fo_depth1(sig, 3, rng)).depth, 1);
    auto r = random_role(sig, 2, rng, Profile::StarFreeEligible);
    EXPECT_TRUE(role::is_star_free_eligible(desugar(r, sig))) << print(r);
    EXPECT_NO_THROW(eliminate_spatial(role::spatial(r, r), sig)) << print(r);
  }
}
