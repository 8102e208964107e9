#include <gtest/gtest.h>

#include "support.hpp"

using namespace kg;
using namespace kg::testing;

TEST(Degree, LatticeOperations) {
  const Degree a{1, 0}, b{0, 2};
  EXPECT_EQ(a.join(b), (Degree{1, 2}));
  EXPECT_EQ(a.meet(b), (Degree{0, 0}));
  EXPECT_TRUE(a.leq(Degree{1, 1}));
  EXPECT_FALSE(a.leq(b));
  EXPECT_EQ((Degree{2, 3} - Degree{1, 3}), (Degree{1, 0}));
  EXPECT_EQ(Degree::broadcast(3, 2).total(), 6u);
  EXPECT_EQ((Degree{1, 0}).str(), "1,0");
}

TEST(Degree, SubtractionBelowZeroThrows) {
  try {
    (void)(Degree{0, 1} - Degree{1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BoundsViolated);
  }
}

TEST(Degree, BoxEnumerationIsLexicographic) {
  const auto all = degrees_up_to(Degree{1, 1});
  ASSERT_EQ(all.size(), 4u);
  EXPECT_EQ(all[0], (Degree{0, 0}));
  EXPECT_EQ(all[1], (Degree{0, 1}));
  EXPECT_EQ(all[2], (Degree{1, 0}));
  EXPECT_EQ(all[3], (Degree{1, 1}));
  EXPECT_EQ(degrees_between(Degree{1, 0}, Degree{1, 2}).size(), 3u);
}

TEST(Paths, CommutingSquareGivesOnePathPerDegree) {
  const auto g = fixture("fx2");
  const VertexId v = g.vertex_id("v");
  for (const auto& d : degrees_up_to(Degree{2, 2})) EXPECT_EQ(g.paths_of_degree(v, d).size(), 1u) << d.str();
  EXPECT_EQ(g.compose(path(g, "r"), path(g, "b")), g.compose(path(g, "b"), path(g, "r")));
  EXPECT_EQ(g.format(g.compose(path(g, "r"), path(g, "b"))), "b.r");
}

TEST(Paths, FactorizationIsUnique) {
  const auto g = fixture("fx2");
  const Path br = path(g, "b.r");
  const auto [head, tail] = g.factor(br, Degree{0, 1});
  EXPECT_EQ(g.format(head), "r");
  EXPECT_EQ(g.format(tail), "b");
  EXPECT_EQ(g.compose(head, tail), br);
  EXPECT_EQ(g.prefix(br, Degree{1, 0}), path(g, "b"));
  EXPECT_EQ(g.suffix(br, Degree{1, 0}), path(g, "r"));
  EXPECT_EQ(g.segment(br, Degree{0, 0}, Degree{0, 0}), g.identity(g.vertex_id("v")));
}

TEST(Paths, FactorizationRoundTripsOnFixtures) {
  for (const char* name : {"fx1", "fx2", "fx3", "fx4", "fx5", "fx6"}) {
    const auto g = fixture(name);
    const Degree cap = Degree::broadcast(g.rank(), 2);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      for (const auto& p : g.paths_up_to(v, cap))
        for (const auto& m : degrees_up_to(p.degree())) {
          const auto [head, tail] = g.factor(p, m);
          EXPECT_EQ(head.degree(), m);
          EXPECT_EQ(g.compose(head, tail), p) << name << " " << g.format(p);
          EXPECT_EQ(g.parse_path(g.format(p)), p);
        }
  }
}

TEST(Paths, NonComposableThrows) {
  const auto g = fixture("fx3");
  try {
    (void)g.compose(path(g, "b"), path(g, "c"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonComposable);
  }
}

TEST(Paths, FactorOutsideDegreeThrows) {
  const auto g = fixture("fx3");
  EXPECT_THROW((void)g.factor(path(g, "b"), Degree{0, 1}), Error);
}

TEST(Validation, FixturesAreValid) {
  for (const char* name : {"fx1", "fx2", "fx3", "fx4", "fx5", "fx6"}) EXPECT_TRUE(load_fixture(name).report.ok) << name;
}

TEST(Validation, MissingSquareIsReported) {
  const auto doc = parse_kgraph_text("kgraph 2\nvertex v\nedge b : 1 v <- v\nedge r : 2 v <- v\n");
  ASSERT_FALSE(doc.report.ok);
  for (const auto& v : doc.report.violations) EXPECT_EQ(v.kind, ViolationKind::IncompleteSquare);
}

TEST(Validation, DuplicateSquareIsReported) {
  const auto doc = parse_kgraph_text(
      "kgraph 2\nvertex v\nedge b : 1 v <- v\nedge r : 2 v <- v\nsquare b r ~ r b\nsquare b r ~ r b\n");
  ASSERT_FALSE(doc.report.ok);
  EXPECT_EQ(doc.report.violations.front().kind, ViolationKind::DuplicateSquare);
}

TEST(Validation, DanglingEdgeIsReported) {
  const auto doc = parse_kgraph_text("kgraph 1\nvertex v\nedge e : 1 v <- x\n");
  ASSERT_FALSE(doc.report.ok);
  EXPECT_EQ(doc.report.violations.front().kind, ViolationKind::DanglingEdge);
}

TEST(Validation, CubeInconsistencyIsReported) {
  const auto doc = load_fixture("cube_inconsistent");
  ASSERT_FALSE(doc.report.ok);
  for (const auto& v : doc.report.violations) EXPECT_EQ(v.kind, ViolationKind::CubeInconsistent);
}

TEST(Validation, CommutingCubeIsValid) {
  const auto doc = parse_kgraph_text(
      "kgraph 3\nvertex v\nedge a : 1 v <- v\nedge b : 2 v <- v\nedge c : 3 v <- v\n"
      "square a b ~ b a\nsquare a c ~ c a\nsquare b c ~ c b\n");
  EXPECT_TRUE(doc.report.ok);
  EXPECT_EQ(doc.graph.paths_of_degree(0, Degree{1, 1, 1}).size(), 1u);
}

TEST(TextFormat, RoundTripsFixtures) {
  for (const char* name : {"fx1", "fx2", "fx3", "fx4", "fx5", "fx6", "cube_inconsistent"}) {
    const auto doc = load_fixture(name);
    const auto again = parse_kgraph_text(emit_kgraph_text(doc.graph));
    EXPECT_EQ(emit_kgraph_text(again.graph), emit_kgraph_text(doc.graph)) << name;
    EXPECT_EQ(again.graph.skeleton().vertices, doc.graph.skeleton().vertices);
    EXPECT_EQ(again.graph.squares(), doc.graph.squares());
  }
}

TEST(TextFormat, ParsesFx2) {
  const auto g = fixture("fx2");
  EXPECT_EQ(g.rank(), 2u);
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.squares().size(), 1u);
}

TEST(TextFormat, DuplicateIdNamesTheId) {
  try {
    parse_kgraph_text("kgraph 1\nvertex v\nedge e : 1 v <- v\nedge e : 1 v <- v\n");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_NE(std::string(e.what()).find("'e'"), std::string::npos);
    EXPECT_EQ(e.where().line, 4u);
    EXPECT_EQ(e.where().column, 6u);
  }
}

TEST(TextFormat, ReportsPositionAndExpectation) {
  try {
    parse_kgraph_text("kgraph 1\nvertex v\nedge e : 1 v -> v\n");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.where().line, 3u);
    EXPECT_EQ(e.where().column, 14u);
    ASSERT_FALSE(e.expected().empty());
    EXPECT_EQ(e.expected().front(), "'<-'");
  }
  EXPECT_THROW(parse_kgraph_text("vertex v\n"), SyntaxError);
  EXPECT_THROW(parse_kgraph_text("kgraph 2\nvertex v\nedge e : 3 v <- v\n"), SyntaxError);
  EXPECT_THROW(parse_kgraph_text("kgraph 2\nvertex v\nedge e : 1 v <- v\nsquare e x ~ x e\n"), SyntaxError);
  EXPECT_THROW(parse_kgraph_text(""), SyntaxError);
}

TEST(TextFormat, CommentsAndBlankLinesAreIgnored) {
  const auto doc = parse_kgraph_text("# header comment\n\nkgraph 1   # rank\nvertex v # the only vertex\n");
  EXPECT_EQ(doc.graph.vertex_count(), 1u);
  EXPECT_EQ(doc.locations.at("v").line, 4u);
}
