#include <gtest/gtest.h>

#include "kgraph/random_graph.hpp"
#include "support.hpp"

using namespace kg;
using namespace kg::testing;

namespace {

std::vector<std::vector<std::string>> hereditary_names(const KGraph& g, const std::vector<SatHeredSet>& sets) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : sets) out.push_back(names(g, s.set));
  return out;
}

}  // namespace

TEST(Hereditary, Fx4) {
  const auto g = fixture("fx4");
  EXPECT_TRUE(is_hereditary(g, vertices(g, {"u"})));
  EXPECT_TRUE(is_hereditary(g, vertices(g, {"w"})));
  EXPECT_FALSE(is_hereditary(g, vertices(g, {"v"})));
  EXPECT_EQ(names(g, hereditary_closure(g, vertices(g, {"v"}))), (std::vector<std::string>{"u", "v", "w"}));
  EXPECT_THROW(is_hereditary(g, VertexSet{7}), Error);
}

TEST(Saturated, Fx4WitnessIsMinimal) {
  const auto g = fixture("fx4");
  const auto H = vertices(g, {"u", "w"});
  const auto r = is_saturated(g, H, Degree{2});
  ASSERT_TRUE(r.is_false());
  EXPECT_EQ(g.vertex_name(r.witness->vertices.at(0)), "v");
  EXPECT_EQ(names(g, r.witness->sets.at(0)), (std::vector<std::string>{"e", "f"}));
  EXPECT_EQ(replay_not_saturated(g, H, *r.witness, Degree{2}), "");
  EXPECT_TRUE(is_saturated(g, vertices(g, {"w"}), Degree{2}).is_true());
  EXPECT_TRUE(is_saturated(g, vertices(g, {"u"}), Degree{2}).is_true());
}

TEST(Saturated, RequiresHereditary) {
  const auto g = fixture("fx4");
  try {
    (void)is_saturated(g, vertices(g, {"v"}), Degree{1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotHereditary);
  }
}

TEST(Saturation, Fx4PairForcesEverything) {
  const auto g = fixture("fx4");
  const auto r = saturation(g, vertices(g, {"u", "w"}), Degree{2});
  EXPECT_EQ(names(g, r.set), (std::vector<std::string>{"u", "v", "w"}));
  EXPECT_TRUE(r.exact.is_true());
  const auto single = saturation(g, vertices(g, {"u"}), Degree{2});
  EXPECT_EQ(names(g, single.set), std::vector<std::string>{"u"});
  EXPECT_TRUE(single.exact.is_true());
}

TEST(Saturation, Fx1LoopFeedsIntoSink) {
  const auto g = fixture("fx1");
  const auto r = saturation(g, vertices(g, {"v"}), Degree{1});
  EXPECT_EQ(names(g, r.set), (std::vector<std::string>{"u", "v"}));
}

TEST(SatHered, Fixtures) {
  const auto g4 = fixture("fx4");
  EXPECT_EQ(hereditary_names(g4, enumerate_sat_hered(g4, Degree{2})),
            (std::vector<std::vector<std::string>>{{}, {"u"}, {"w"}, {"u", "v", "w"}}));
  const auto g1 = fixture("fx1");
  EXPECT_EQ(hereditary_names(g1, enumerate_sat_hered(g1, Degree{2})), (std::vector<std::vector<std::string>>{{}, {"u", "v"}}));
  const auto g2 = fixture("fx2");
  EXPECT_EQ(hereditary_names(g2, enumerate_sat_hered(g2, Degree{2, 2})), (std::vector<std::vector<std::string>>{{}, {"v"}}));
}

TEST(SatHered, OneGraphsMatchClassicalRule) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = random_kgraph({1, 5, 8, seed});
    std::vector<VertexSet> ours;
    for (const auto& s : enumerate_sat_hered(g, Degree{1})) {
      EXPECT_EQ(s.saturated, Certainty::True) << "seed " << seed;
      ours.push_back(s.set);
    }
    EXPECT_EQ(ours, classical_sat_hered(g)) << "seed " << seed;
  }
}

TEST(Quotient, Fx4RemovesHSources) {
  const auto g = fixture("fx4");
  const auto q = quotient_graph(g, vertices(g, {"u"}));
  EXPECT_EQ(q.graph.skeleton().vertices, (std::vector<std::string>{"v", "w"}));
  ASSERT_EQ(q.graph.edge_count(), 2u);
  EXPECT_EQ(q.graph.edge(0).id, "e");
  EXPECT_EQ(q.graph.edge(1).id, "g");
  EXPECT_TRUE(validate_kgraph(q.graph).ok);
  const Path eg = path(g, "e.g");
  const auto restricted = q.restrict(g, eg);
  ASSERT_TRUE(restricted.has_value());
  EXPECT_EQ(q.lift(g, *restricted), eg);
  EXPECT_FALSE(q.restrict(g, path(g, "f")).has_value());
  EXPECT_THROW(quotient_graph(g, vertices(g, {"v"})), Error);
}

TEST(Quotient, EverythingRemovedLeavesEmptyGraph) {
  const auto g = fixture("fx2");
  const auto q = quotient_graph(g, vertices(g, {"v"}));
  EXPECT_EQ(q.graph.vertex_count(), 0u);
  EXPECT_EQ(q.graph.rank(), 2u);
}

TEST(RestrictedFamily, Fx4StripsH) {
  const auto g = fixture("fx4");
  const auto fam = restricted_fe_family(g, vertices(g, {"w"}), Degree{2});
  const auto q = quotient_graph(g, vertices(g, {"w"}));
  std::vector<std::vector<std::string>> got;
  for (const auto& E : fam.members) got.push_back(names(q.graph, E));
  EXPECT_EQ(got, (std::vector<std::vector<std::string>>{{"f"}}));
  EXPECT_TRUE(fam.satiated.is_true());
}

TEST(Satiation, ClosureAddsSupersetsAndTruncations) {
  const auto g = fixture("fx4");
  Family family{paths(g, {"e", "f"})};
  const auto closure = satiation_closure(g, family, Degree{2});
  EXPECT_TRUE(closure.members.count(paths(g, {"e", "f", "e.g"})));
  const auto r = is_satiated(g, family, Degree{2});
  ASSERT_TRUE(r.is_false());
  EXPECT_EQ(replay_not_satiated(g, family, *r.witness, Degree{2}), "");
}

TEST(Satiation, S4SubstitutionIsApplied) {
  const auto g = fixture("fx4");
  Family family{paths(g, {"e", "f"}), paths(g, {"g"})};
  const auto closure = satiation_closure(g, family, Degree{2});
  EXPECT_TRUE(closure.members.count(paths(g, {"e.g", "f"})));
}

TEST(Pairs, Fx4Diamond) {
  const auto g = fixture("fx4");
  const auto L = ideal_lattice(g, Degree{2});
  ASSERT_EQ(L.nodes.size(), 4u);
  for (const auto& n : L.nodes) {
    EXPECT_TRUE(n.B.empty());
    EXPECT_TRUE(n.exact);
  }
  EXPECT_EQ(names(g, L.nodes[1].H), std::vector<std::string>{"u"});
  EXPECT_EQ(names(g, L.nodes[2].H), std::vector<std::string>{"w"});
  const std::vector<std::pair<std::size_t, std::size_t>> hasse = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  EXPECT_EQ(L.hasse, hasse);
  EXPECT_TRUE(L.is_partial_order);
  EXPECT_TRUE(L.is_lattice);
  EXPECT_EQ(L.meet[1][2], std::optional<std::size_t>(0));
  EXPECT_EQ(L.join[1][2], std::optional<std::size_t>(3));
}

TEST(Pairs, LeqRequiresInclusion) {
  const auto g = fixture("fx4");
  const auto pairs = enumerate_ideal_pairs(g, Degree{2});
  EXPECT_TRUE(pair_leq(g, pairs[0], pairs[3]));
  EXPECT_FALSE(pair_leq(g, pairs[1], pairs[2]));
  EXPECT_FALSE(pair_leq(g, pairs[3], pairs[0]));
}

TEST(Pairs, LargeUniverseIsCapInsufficient) {
  // One vertex with two blue and four red loops: thousands of capped
  // exhaustive candidates at cap (1, 1).
  const KGraph g = random_kgraph({2, 3, 6, 2});
  ASSERT_EQ(g.vertex_count(), 1u);
  try {
    enumerate_ideal_pairs(g, Degree{1, 1});
    FAIL() << "expected CapTooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapTooLarge);
  }
  const auto fam = restricted_fe_family(g, {}, Degree{1, 1});
  EXPECT_FALSE(fam.members.empty());
  EXPECT_TRUE(fam.satiated.is_unknown());
}
