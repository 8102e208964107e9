#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kgraph/kgraph_c.h"

namespace {

struct Owned {
  char* s = nullptr;
  ~Owned() { kg_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct GraphHandle {
  kg_graph* g = nullptr;
  ~GraphHandle() { kg_graph_free(g); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finitely presented k-graphs: paths, exhaustive sets, ideal lattices and structure checks"};
  app.set_version_flag("--version", std::string(kg_version()));

  std::string command, file, format = "json";
  std::string cap, vertex, hset, window, shift;
  std::vector<std::string> paths, sets;
  bool assume_c = false, require_exact = false, minimal = false;
  unsigned rank = 1, max_vertices = 5, max_edges = 8;
  std::uint64_t seed = 0;

  app.add_option("command", command,
                 "validate | emit | paths | mce | ext | vee | pi | exhaustive | fe | saturation | sathered | quotient | "
                 "ehfamily | satiate | pairs | lattice | skew | lift | grading | mclosure | boundary | cofinal | loops | "
                 "report | random")
      ->required();
  app.add_option("file", file, "input in the kgraph text format ('-' reads stdin)");
  app.add_option("--cap", cap, "degree cap, per coordinate or one value for all");
  app.add_option("--format", format, "json | dot | text")->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--vertex", vertex, "vertex id");
  app.add_option("--path", paths, "path written as dot-separated edge ids or a vertex id (repeatable)");
  app.add_option("--set", sets, "comma-separated paths; repeat for a family");
  app.add_option("--hset", hset, "comma-separated vertex ids");
  app.add_option("--window", window, "skew-product levels: radius r, or lo:hi with comma-separated corners");
  app.add_option("--shift", shift, "level n for lifting a set");
  app.add_flag("--assume-c", assume_c, "assert condition (C) for the structure report");
  app.add_flag("--require-exact", require_exact, "exit 3 when any reported certificate is unknown at the cap");
  app.add_flag("--minimal", minimal, "list only inclusion-minimal exhaustive sets");
  app.add_option("--rank", rank, "random: rank (1 or 2)");
  app.add_option("--max-vertices", max_vertices, "random: vertex bound");
  app.add_option("--max-edges", max_edges, "random: edge bound");
  app.add_option("--seed", seed, "random: generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : KG_INVALID_ARGUMENT;
  }

  if (command == "random") {
    const nlohmann::json o = {{"rank", rank}, {"max_vertices", max_vertices}, {"max_edges", max_edges}, {"seed", seed}};
    Owned out;
    const kg_status st = kg_random(o.dump().c_str(), &out.s);
    (st == KG_OK ? std::cout : std::cerr) << out.str();
    return st;
  }

  if (file.empty()) {
    std::cerr << "error: command '" << command << "' needs an input file\n";
    return KG_INVALID_ARGUMENT;
  }
  std::stringstream text;
  if (file == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read '" << file << "'\n";
      return KG_INVALID_ARGUMENT;
    }
    text << in.rdbuf();
  }

  GraphHandle graph;
  Owned diagnostic;
  if (const kg_status st = kg_graph_parse(text.str().c_str(), &graph.g, &diagnostic.s); st != KG_OK) {
    std::cerr << file << ":" << diagnostic.str() << "\n";
    return st;
  }

  nlohmann::json options = {{"format", format}, {"assume_c", assume_c}, {"require_exact", require_exact}, {"minimal", minimal}};
  if (!cap.empty()) options["cap"] = cap;
  if (!vertex.empty()) options["vertex"] = vertex;
  if (!paths.empty()) options["paths"] = paths;
  if (!sets.empty()) options["sets"] = sets;
  if (app.count("--hset")) options["hset"] = hset;
  if (!window.empty()) options["window"] = window;
  if (!shift.empty()) options["shift"] = shift;

  Owned out;
  const kg_status st = kg_run(graph.g, command.c_str(), options.dump().c_str(), &out.s);
  switch (st) {
    case KG_OK:
      std::cout << out.str();
      break;
    case KG_CAP_INSUFFICIENT:
      std::cout << out.str();
      std::cerr << "error: some certificates are unknown at cap; raise --cap\n";
      break;
    case KG_VALIDATION_FAILED:
      std::cout << out.str();
      std::cerr << "error: " << file << " fails validation\n";
      break;
    default:
      std::cerr << "error: " << out.str() << "\n";
  }
  return st;
}
