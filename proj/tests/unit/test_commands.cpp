#include <gtest/gtest.h>

#include <json.hpp>

#include "kgraph/commands.hpp"
#include "support.hpp"

using namespace kg;
using namespace kg::testing;
using json = nlohmann::json;

namespace {

CommandResult run(const std::string& fixture_name, RunConfig cfg) { return run_command(load_fixture(fixture_name), cfg); }

RunConfig config(const std::string& command, std::optional<std::string> cap = std::nullopt) {
  RunConfig c;
  c.command = command;
  c.cap = std::move(cap);
  return c;
}

}  // namespace

TEST(Commands, MceOnCommutingLoops) {
  auto cfg = config("mce");
  cfg.paths = {"b", "r"};
  const auto r = run("fx2", cfg);
  ASSERT_EQ(r.status, kExitOk) << r.error;
  const auto j = json::parse(r.output);
  EXPECT_EQ(j["mce"], json::array({"b.r"}));
  EXPECT_EQ(j["tool"], "kgraph");
  EXPECT_EQ(j["version"], kToolVersion);
}

TEST(Commands, ValidateFx5) {
  const auto r = run("fx5", config("validate"));
  ASSERT_EQ(r.status, kExitOk);
  EXPECT_EQ(json::parse(r.output)["ok"], true);
}

TEST(Commands, LatticeFx4) {
  const auto r = run("fx4", config("lattice", "2"));
  ASSERT_EQ(r.status, kExitOk) << r.error;
  const auto j = json::parse(r.output);
  ASSERT_EQ(j["nodes"].size(), 4u);
  EXPECT_EQ(j["hasse"].size(), 4u);
  for (const auto& n : j["nodes"]) EXPECT_EQ(n["certificate"], "exact");
  EXPECT_EQ(j["cap"], json::array({2}));
}

TEST(Commands, LatticeDotIsADiamond) {
  auto cfg = config("lattice", "2");
  cfg.format = "dot";
  const auto r = run("fx4", cfg);
  ASSERT_EQ(r.status, kExitOk);
  EXPECT_NE(r.output.find("n1 [label=\"H={u} B={} [exact]\"]"), std::string::npos);
  EXPECT_NE(r.output.find("n2 -> n3;"), std::string::npos);
}

TEST(Commands, SkeletonDot) {
  const auto dot = emit_dot(fixture("fx1"));
  EXPECT_NE(dot.find("\"v\" -> \"v\" [label=\"f:1\"]"), std::string::npos);
  EXPECT_NE(dot.find("\"v\" -> \"u\""), std::string::npos);
  const auto empty = emit_dot(parse_kgraph_text("kgraph 1\n").graph);
  EXPECT_EQ(empty, "digraph kgraph {\n}\n");
}

TEST(Commands, Errors) {
  EXPECT_EQ(run("fx4", config("nonsense")).status, kExitArgument);
  EXPECT_EQ(run("fx4", config("lattice")).status, kExitArgument);
  EXPECT_EQ(run("fx4", config("lattice", "1,1")).status, kExitArgument);
  auto bad_format = config("cofinal", "2");
  bad_format.format = "dot";
  EXPECT_EQ(run("fx4", bad_format).status, kExitArgument);
  auto bad_vertex = config("boundary", "1");
  bad_vertex.vertex = "zz";
  EXPECT_EQ(run("fx4", bad_vertex).status, kExitArgument);
}

TEST(Commands, RequireExact) {
  auto cfg = config("exhaustive", "1");
  cfg.sets = {"b"};
  cfg.require_exact = true;
  const auto r = run("fx2", cfg);
  EXPECT_EQ(r.status, kExitCapInsufficient);
  EXPECT_EQ(json::parse(r.output)["exhaustive"]["value"], "unknown-at-cap");
  cfg.require_exact = false;
  EXPECT_EQ(run("fx2", cfg).status, kExitOk);
}

TEST(Commands, InvalidGraphIsRefused) {
  const auto doc = parse_kgraph_text("kgraph 2\nvertex v\nedge b : 1 v <- v\nedge r : 2 v <- v\n");
  const auto r = run_command(doc, config("lattice", "1"));
  EXPECT_EQ(r.status, kExitValidation);
  EXPECT_EQ(json::parse(r.output)["validation"]["ok"], false);
  EXPECT_EQ(run_command(doc, config("validate")).status, kExitValidation);
}

TEST(Commands, TextFormatsForGraphs) {
  auto cfg = config("quotient");
  cfg.hset = "u";
  cfg.format = "text";
  const auto r = run("fx4", cfg);
  ASSERT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.output, "kgraph 1\nvertex v\nvertex w\nedge e : 1 v <- w\nedge g : 1 w <- w\n");
}

TEST(Commands, EveryCommandRunsOnFx4) {
  for (const auto& name : command_names()) {
    auto cfg = config(name, "2");
    cfg.vertex = "v";
    cfg.paths = name == "mce" ? std::vector<std::string>{"e", "e.g"} : std::vector<std::string>{"e"};
    cfg.sets = {name == "satiate" ? "e" : "e,f"};  // f leaves the quotient by {u}
    cfg.hset = "u";
    cfg.window = "0:2";
    if (name == "mclosure") continue;  // FX4 has no grading
    const auto r = run("fx4", cfg);
    EXPECT_EQ(r.status, kExitOk) << name << ": " << r.error;
  }
  auto m = config("mclosure");
  m.sets = {"e@1"};
  m.window = "0:2";
  const auto r = run("fx5", m);
  EXPECT_EQ(r.status, kExitOk) << r.error;
  EXPECT_EQ(json::parse(r.output)["source_join_preserved"], true);
}
