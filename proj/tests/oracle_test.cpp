#include "hopdom/oracle.hpp"

#include <gtest/gtest.h>

#include "hopdom/generator.hpp"
#include "support/naive_oracle.hpp"

namespace hopdom {
namespace {

using Nodes = std::vector<NodeId>;

Digraph make(std::size_t n, std::vector<Edge> edges) { return build_graph(n, edges); }
Digraph path3() { return make(3, {{0, 1}, {1, 2}}); }
Digraph triangle() { return make(3, {{0, 1}, {1, 2}, {2, 0}}); }

TEST(Verify, Examples) {
  const Nodes zero{0};
  EXPECT_TRUE(verify(path3(), zero, 2).valid);

  const VerifyReport short_reach = verify(path3(), zero, 1);
  EXPECT_FALSE(short_reach.valid);
  EXPECT_EQ(short_reach.uncovered, Nodes{2});

  const Nodes pair{0, 1};
  EXPECT_TRUE(verify(triangle(), pair, 1).valid);
}

TEST(Verify, MembersCoverThemselves) {
  const Digraph g = make(3, {});
  const Nodes all{0, 1, 2};
  EXPECT_TRUE(verify(g, all, 1).valid);
  const Nodes two{0, 2};
  EXPECT_EQ(verify(g, two, 5).uncovered, Nodes{1});
}

TEST(Verify, RejectsBadMembers) {
  const Nodes far{9};
  EXPECT_THROW(verify(path3(), far, 1), GraphError);
  Digraph g = path3();
  const Nodes gone{2};
  g.remove_nodes(gone);
  EXPECT_THROW(verify(g, gone, 1), GraphError);
  const Nodes zero{0};
  EXPECT_TRUE(verify(g, zero, 1).valid);
  EXPECT_THROW(verify(g, zero, 0), std::invalid_argument);
}

TEST(BruteForce, Examples) {
  const Digraph p5 = make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const Solution p = brute_force_min(p5, 2);
  // A dominator reaches at most d + 1 = 3 of the 5 nodes.
  EXPECT_EQ(p.set.size(), 2u);
  EXPECT_EQ(p.set.members, (Nodes{0, 2}));

  const Solution t = brute_force_min(triangle(), 1);
  EXPECT_EQ(t.set.members, (Nodes{0, 1}));
  const auto& step = std::get<ExhaustiveStep>(t.trace.steps.front());
  // {} then {0}, {1}, {2}, then {0, 1}.
  EXPECT_EQ(step.subsets_checked, 5u);

  EXPECT_TRUE(brute_force_min(make(0, {}), 3).set.members.empty());
}

TEST(BruteForce, CapIsEnforced) {
  GenSpec spec;
  spec.shape = Shape::kPath;
  spec.n = 30;
  const Digraph g = generate(spec);
  try {
    brute_force_min(g, 1);
    FAIL();
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.alive(), 30u);
    EXPECT_EQ(e.cap(), kDefaultOracleCap);
  }
  EXPECT_THROW(brute_force_min(g, 1, 65), std::invalid_argument);
  EXPECT_EQ(brute_force_min(g, 29, 30).set.size(), 1u);
}

TEST(BruteForce, AgreesWithNaiveOracle) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GenSpec spec;
    spec.n = 1 + seed % 11;
    spec.seed = 900 + seed;
    spec.p = 0.8;
    const Digraph g = generate(spec);
    for (Hops d : {1u, 2u, 3u}) {
      const Solution first = brute_force_min(g, d);
      ASSERT_EQ(first.set.size(), testing::naive_min(g.node_count(), g.edges(), d));
      ASSERT_TRUE(verify(g, first.set.members, d).valid);
      ASSERT_EQ(brute_force_min(g, d).set.members, first.set.members);
      ASSERT_LE(brute_force_min(g, d + 1).set.size(), first.set.size());
    }
  }
}

}  // namespace
}  // namespace hopdom
