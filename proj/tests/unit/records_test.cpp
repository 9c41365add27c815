#include <gtest/gtest.h>

#include "rolelogic/rolelogic.hpp"

using namespace rolelogic;

TEST(Records, FieldExpansion) {
  Signature sig({"A"}, {"f", "g"});
  EXPECT_EQ(print(expand_records(parse_role("f -> A", sig), sig)), "card=1 (A & f) & card=0 (g | (f & !A))");
  EXPECT_EQ(print(expand_records(parse_role("A <-* f", sig), sig)), "card=0 (inv g | (inv f & !A))");
}

TEST(Records, FieldComplementAndEdges) {
  Signature one({}, {"f"});
  EXPECT_EQ(print(expand_records(parse_role("fc(f)", one), one)), "false");
  Signature three({}, {"f", "g", "h"});
  EXPECT_EQ(print(expand_records(parse_role("fc(g)", three), three)), "f | h");
  EXPECT_EQ(print(expand_records(parse_role("edges", three), three)), "f | g | h");
}

TEST(Records, DesugarGivesCoreStarFreeEligible) {
  Signature sig({"A", "B"}, {"f", "g"});
  for (const char* s : {"f -> A", "f ->* A", "f ->(<=2) A", "A <- f", "A <-(>=1) g", "[f => inv g]",
                        "card<=1 (f | g) & card=0 fc(f)", "(f -> A) * (g -> B)", "(A <- f) * card=0 inv g"}) {
    auto d = desugar(parse_role(s, sig), sig);
    EXPECT_TRUE(role::is_core(d)) << s;
    EXPECT_TRUE(role::is_star_free_eligible(d)) << s;
    // desugaring keeps the meaning
    Verdict v = bounded_equiv(parse_role(s, sig), d, 2, sig);
    EXPECT_TRUE(v.holds()) << s << "\n" << v.describe();
  }
}

TEST(Records, FieldSlotDuality) {
  Signature sig({"A"}, {"f", "g"});
  for (const char* pair : {"f -> A|A <- f", "f ->* A|A <-* f", "f ->(<=2) A|A <-(<=2) f", "f ->(>=1) A|A <-(>=1) f"}) {
    std::string s(pair);
    auto bar = s.find('|');
    auto field = desugar(parse_role(s.substr(0, bar), sig), sig);
    auto slot = desugar(parse_role(s.substr(bar + 1), sig), sig);
    for (int n = 1; n <= 3; ++n)
      enumerate_models(sig, n, [&](const Model& m) {
        Model rev(sig, n);
        for (int d = 0; d < n; ++d)
          if (m.holds("A", d)) rev.set_unary(0, d);
        for (int p = 0; p < 2; ++p)
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
              if (m.binary(p, a, b)) rev.set_binary(p, b, a);
        for (int d = 0; d < n; ++d) EXPECT_EQ(eval_role(slot, m, {d, d}), eval_role(field, rev, {d, d})) << pair;
        return true;
      });
  }
}

TEST(Roles, FourAndFiveRows) {
  RoleFile rf = parse_role_file(
      "sig { unary S; binary f, g; }\n"
      "role F { fields f : S; }\n"
      "role I { identities f.g; }\n"
      "role E { }\n"
      "simultaneous role SF { fields f : S; }\n"
      "simultaneous role SS [g] { slots S.f; }\n"
      "simultaneous role SI { identities f.g; }\n");
  ASSERT_EQ(rf.roles.size(), 6u);
  EXPECT_EQ(print(translate(rf.roles[0], rf.sig)), "f -> S");
  EXPECT_EQ(print(translate(rf.roles[1], rf.sig)), "[f => inv g]");
  EXPECT_EQ(print(translate(rf.roles[2], rf.sig)), "true");
  EXPECT_EQ(print(translate(rf.roles[3], rf.sig)), "(f -> S) * card=0 f");
  EXPECT_EQ(print(translate(rf.roles[4], rf.sig)), "(S <- f) * card=0 (inv g)");
  EXPECT_EQ(translate(rf.roles[5], rf.sig), translate_role(rf.roles[5], rf.sig));
}

TEST(Roles, NodeFixtureEvaluates) {
  RoleFile rf = parse_role_file(
      "role Node {\n  fields next : Node, prev : Node;\n  slots Node.next, Node.prev;\n"
      "  identities next.prev;\n  acyclic next;\n}\n");
  ASSERT_EQ(rf.roles.size(), 1u);
  auto f = desugar(translate(rf.roles[0], rf.sig), rf.sig);
  // A one-element self loop breaks acyclicity.
  Model loop = parse_model("model { domain a; Node = { a }; next = { (a,a) }; prev = { (a,a) }; }", rf.sig);
  EXPECT_FALSE(eval_role(f, loop, {0, 0}));
  // Two nodes pointing at each other through next and prev: cyclic again.
  Model pair = parse_model(
      "model { domain a, b; Node = { a, b }; next = { (a,b), (b,a) }; prev = { (b,a), (a,b) }; }", rf.sig);
  EXPECT_FALSE(eval_role(f, pair, {0, 0}));
}
