#include "kgraph/commands.hpp"

#include <charconv>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "kgraph/alignment.hpp"
#include "kgraph/structure.hpp"

namespace kg {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto at = text.find(sep, start);
    out.push_back(text.substr(start, at == std::string::npos ? std::string::npos : at - start));
    if (at == std::string::npos) return out;
    start = at + 1;
  }
}

template <typename T>
T parse_number(const std::string& token, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
    throw Error(ErrorCode::InvalidArgument, std::string("bad ") + what + " '" + token + "'");
  return value;
}

template <typename T>
std::vector<T> parse_vector(const std::string& text, std::size_t rank, const char* what) {
  std::vector<T> out;
  for (const auto& token : split(text, ',')) out.push_back(parse_number<T>(token, what));
  if (out.size() == 1 && rank > 1) out.assign(rank, out.front());
  if (out.size() != rank)
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " '" + text + "' needs " + std::to_string(rank) + " coordinates");
  return out;
}

Window parse_window(const std::string& text, std::size_t rank) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const auto r = parse_number<std::int64_t>(text, "window radius");
    if (r < 0) throw Error(ErrorCode::InvalidArgument, "window radius must be non-negative");
    return Window::box(rank, r);
  }
  return {parse_vector<std::int64_t>(text.substr(0, colon), rank, "window corner"),
          parse_vector<std::int64_t>(text.substr(colon + 1), rank, "window corner")};
}

const char* error_slug(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonComposable: return "non-composable";
    case ErrorCode::BoundsViolated: return "bounds-violated";
    case ErrorCode::RangeMismatch: return "range-mismatch";
    case ErrorCode::UnknownId: return "unknown-id";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::NotHereditary: return "not-hereditary";
    case ErrorCode::WindowNotClosed: return "window-not-closed";
    case ErrorCode::NoGrading: return "no-grading";
    case ErrorCode::CapTooLarge: return "cap-too-large";
    case ErrorCode::Syntax: return "syntax";
    case ErrorCode::Validation: return "validation";
    case ErrorCode::Internal: return "internal";
  }
  return "internal";
}

class Run {
 public:
  Run(const KGraphDocument& doc, const RunConfig& cfg) : doc_(doc), cfg_(cfg), g_(doc.graph) {}

  CommandResult execute();

 private:
  const KGraphDocument& doc_;
  const RunConfig& cfg_;
  const KGraph& g_;
  std::optional<Degree> cap_;
  bool uncertain_ = false;
  json out_;

  // --- option access ---
  const Degree& cap() {
    if (!cap_) throw Error(ErrorCode::InvalidArgument, "command '" + cfg_.command + "' requires --cap");
    return *cap_;
  }
  VertexId vertex(const KGraph& g, const std::string& name) const { return g.vertex_id(name); }
  VertexSet vertex_set(const KGraph& g, const std::string& text) const {
    std::vector<VertexId> ids;
    for (const auto& name : split(text, ',')) ids.push_back(g.vertex_id(name));
    return make_vertex_set(std::move(ids));
  }
  VertexSet hset() const { return cfg_.hset ? vertex_set(g_, *cfg_.hset) : VertexSet{}; }
  PathSet path_set(const KGraph& g, const std::string& text) const {
    PathSet out;
    for (const auto& token : split(text, ',')) out.push_back(g.parse_path(token));
    return canonical(std::move(out));
  }
  const std::string& first_set() const {
    if (cfg_.sets.empty()) throw Error(ErrorCode::InvalidArgument, "command '" + cfg_.command + "' requires --set");
    return cfg_.sets.front();
  }
  std::vector<Path> paths(std::size_t n) const {
    if (cfg_.paths.size() != n)
      throw Error(ErrorCode::InvalidArgument, "command '" + cfg_.command + "' takes " + std::to_string(n) + " --path options");
    std::vector<Path> out;
    for (const auto& p : cfg_.paths) out.push_back(g_.parse_path(p));
    return out;
  }
  std::vector<VertexId> vertices_or_all() const {
    if (cfg_.vertex) return {g_.vertex_id(*cfg_.vertex)};
    std::vector<VertexId> all;
    for (VertexId v = 0; v < g_.vertex_count(); ++v) all.push_back(v);
    return all;
  }

  // --- serialization ---
  static json path_list(const KGraph& g, const std::vector<Path>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(g.format(p));
    return a;
  }
  static json vertex_list(const KGraph& g, const std::vector<VertexId>& vs) {
    json a = json::array();
    for (auto v : vs) a.push_back(g.vertex_name(v));
    return a;
  }
  static json family_list(const KGraph& g, const std::vector<PathSet>& sets) {
    json a = json::array();
    for (const auto& s : sets) a.push_back(path_list(g, s));
    return a;
  }
  json status(Certainty c) {
    if (c == Certainty::Unknown) uncertain_ = true;
    return to_string(c);
  }
  json cert(const KGraph& g, const CertifiedBool& c) {
    json j;
    j["value"] = status(c.value);
    if (c.witness) {
      json w;
      w["kind"] = c.witness->kind;
      if (!c.witness->vertices.empty()) w["vertices"] = vertex_list(g, c.witness->vertices);
      if (!c.witness->paths.empty()) w["paths"] = path_list(g, c.witness->paths);
      if (!c.witness->sets.empty()) w["sets"] = family_list(g, c.witness->sets);
      j["witness"] = std::move(w);
    }
    return j;
  }
  static json graph_json(const KGraph& g) {
    json j;
    j["rank"] = g.rank();
    j["vertices"] = g.skeleton().vertices;
    json edges = json::array();
    for (const auto& e : g.skeleton().edges)
      edges.push_back({{"id", e.id}, {"color", e.color}, {"range", e.range}, {"source", e.source}});
    j["edges"] = std::move(edges);
    json squares = json::array();
    for (const auto& s : g.squares()) squares.push_back({s.f, s.g, s.g2, s.f2});
    j["squares"] = std::move(squares);
    return j;
  }
  static json validation_json(const ValidationReport& r) {
    json j;
    j["ok"] = r.ok;
    json vs = json::array();
    for (const auto& v : r.violations) vs.push_back({{"kind", to_string(v.kind)}, {"ids", v.ids}});
    j["violations"] = std::move(vs);
    return j;
  }
  json pair_json(const IdealPair& p, std::optional<std::size_t> id) {
    json j;
    if (id) j["id"] = *id;
    j["H"] = vertex_list(g_, p.H);
    j["B"] = family_list(g_, p.B);
    j["saturated"] = to_string(p.saturated);
    j["satiated"] = to_string(p.satiated);
    j["restricted_family_size"] = p.restricted.size();
    j["certificate"] = p.exact ? "exact" : "unknown-at-cap";
    if (!p.exact) uncertain_ = true;
    return j;
  }

  // --- output of graph-valued results ---
  std::string graph_output(const KGraph& g, json extra);
  void require_format(std::initializer_list<const char*> allowed) const {
    for (const char* f : allowed)
      if (cfg_.format == f) return;
    throw Error(ErrorCode::InvalidArgument, "format '" + cfg_.format + "' is not available for '" + cfg_.command + "'");
  }

  std::string finish();

  // --- commands ---
  std::string validate();
  std::string emit();
  std::string list_paths();
  std::string mce_cmd();
  std::string ext_cmd();
  std::string vee_cmd();
  std::string pi_cmd();
  std::string exhaustive_cmd();
  std::string fe_cmd();
  std::string saturation_cmd();
  std::string sathered_cmd();
  std::string quotient_cmd();
  std::string ehfamily_cmd();
  std::string satiate_cmd();
  std::string pairs_cmd();
  std::string lattice_cmd();
  std::string skew_cmd();
  std::string lift_cmd();
  std::string grading_cmd();
  std::string mclosure_cmd();
  std::string boundary_cmd();
  std::string cofinal_cmd();
  std::string loops_cmd();
  std::string report_cmd();
};

void flatten(const json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    if (j.empty()) out += prefix + " = {}\n";
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    if (j.empty()) out += prefix + " = []\n";
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out += prefix + " = " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

std::string Run::finish() {
  if (cfg_.format == "text") {
    std::string s;
    flatten(out_, "", s);
    return s;
  }
  return out_.dump(2) + "\n";
}

std::string Run::graph_output(const KGraph& g, json extra) {
  if (cfg_.format == "text") return emit_kgraph_text(g);
  if (cfg_.format == "dot") return emit_dot(g);
  out_["graph"] = graph_json(g);
  for (auto it = extra.begin(); it != extra.end(); ++it) out_[it.key()] = it.value();
  return finish();
}

CommandResult Run::execute() {
  static const std::map<std::string, std::string (Run::*)()> table = {
      {"validate", &Run::validate},       {"emit", &Run::emit},           {"paths", &Run::list_paths},
      {"mce", &Run::mce_cmd},             {"ext", &Run::ext_cmd},         {"vee", &Run::vee_cmd},
      {"pi", &Run::pi_cmd},               {"exhaustive", &Run::exhaustive_cmd}, {"fe", &Run::fe_cmd},
      {"saturation", &Run::saturation_cmd}, {"sathered", &Run::sathered_cmd}, {"quotient", &Run::quotient_cmd},
      {"ehfamily", &Run::ehfamily_cmd},   {"satiate", &Run::satiate_cmd}, {"pairs", &Run::pairs_cmd},
      {"lattice", &Run::lattice_cmd},     {"skew", &Run::skew_cmd},       {"lift", &Run::lift_cmd},
      {"grading", &Run::grading_cmd},     {"mclosure", &Run::mclosure_cmd}, {"boundary", &Run::boundary_cmd},
      {"cofinal", &Run::cofinal_cmd},     {"loops", &Run::loops_cmd},     {"report", &Run::report_cmd},
  };
  CommandResult result;
  try {
    const auto it = table.find(cfg_.command);
    if (it == table.end()) throw Error(ErrorCode::InvalidArgument, "unknown command '" + cfg_.command + "'");
    if (cfg_.format != "json" && cfg_.format != "text" && cfg_.format != "dot")
      throw Error(ErrorCode::InvalidArgument, "unknown format '" + cfg_.format + "'");
    if (cfg_.cap) {
      auto coords = parse_vector<std::uint32_t>(*cfg_.cap, g_.rank(), "cap");
      cap_ = Degree(std::move(coords));
    }
    out_["tool"] = "kgraph";
    out_["version"] = kToolVersion;
    out_["schema"] = kSchemaVersion;
    out_["command"] = cfg_.command;
    out_["cap"] = cap_ ? json(std::vector<std::uint32_t>(cap_->coords().begin(), cap_->coords().end())) : json(nullptr);

    if (!doc_.report.ok && cfg_.command != "validate" && cfg_.command != "emit") {
      result.status = kExitValidation;
      result.error = "graph fails validation";
      out_["validation"] = validation_json(doc_.report);
      result.output = finish();
      return result;
    }
    result.output = (this->*(it->second))();
    if (cfg_.command == "validate" && !doc_.report.ok) {
      result.status = kExitValidation;
      result.error = "graph fails validation";
    } else if (cfg_.require_exact && uncertain_) {
      result.status = kExitCapInsufficient;
      result.error = "some certificates are unknown at cap; raise --cap";
    }
  } catch (const Error& e) {
    result.status = exit_code_for(e.code());
    result.error = std::string(error_slug(e.code())) + ": " + e.what();
    result.output.clear();
  } catch (const std::exception& e) {
    result.status = kExitInternal;
    result.error = std::string("internal: ") + e.what();
    result.output.clear();
  }
  return result;
}

// ---------------------------------------------------------------------------

std::string Run::validate() {
  require_format({"json", "text", "dot"});
  if (cfg_.format == "dot") return emit_dot(g_);
  const auto v = validation_json(doc_.report);
  for (auto it = v.begin(); it != v.end(); ++it) out_[it.key()] = it.value();
  out_["rank"] = g_.rank();
  out_["vertices"] = g_.vertex_count();
  out_["edges"] = g_.edge_count();
  out_["squares"] = g_.squares().size();
  return finish();
}

std::string Run::emit() { return graph_output(g_, json::object()); }

std::string Run::list_paths() {
  require_format({"json", "text"});
  json by_vertex = json::object();
  for (VertexId v : vertices_or_all()) by_vertex[g_.vertex_name(v)] = path_list(g_, g_.paths_up_to(v, cap()));
  out_["paths"] = std::move(by_vertex);
  return finish();
}

std::string Run::mce_cmd() {
  require_format({"json", "text"});
  const auto ps = paths(2);
  out_["mce"] = path_list(g_, mce(g_, ps[0], ps[1]));
  json pairs = json::array();
  for (const auto& [alpha, beta] : lambda_min(g_, ps[0], ps[1]))
    pairs.push_back({{"alpha", g_.format(alpha)}, {"beta", g_.format(beta)}});
  out_["lambda_min"] = std::move(pairs);
  return finish();
}

std::string Run::ext_cmd() {
  require_format({"json", "text"});
  const auto ps = paths(1);
  out_["ext"] = path_list(g_, ext(g_, ps[0], path_set(g_, first_set())));
  return finish();
}

std::string Run::vee_cmd() {
  require_format({"json", "text"});
  out_["vee"] = path_list(g_, vee_closure(g_, path_set(g_, first_set())));
  return finish();
}

std::string Run::pi_cmd() {
  require_format({"json", "text"});
  out_["pi"] = path_list(g_, pi_closure(g_, path_set(g_, first_set())));
  return finish();
}

std::string Run::exhaustive_cmd() {
  require_format({"json", "text"});
  const auto E = path_set(g_, first_set());
  const VertexId v = cfg_.vertex ? g_.vertex_id(*cfg_.vertex) : kNone;
  if (v == kNone && E.empty()) throw Error(ErrorCode::InvalidArgument, "an empty set needs --vertex");
  out_["exhaustive"] = cert(g_, v == kNone ? is_exhaustive(g_, E, cap()) : is_exhaustive(g_, v, E, cap()));
  return finish();
}

std::string Run::fe_cmd() {
  require_format({"json", "text"});
  json by_vertex = json::object();
  for (VertexId v : vertices_or_all()) {
    json sets = json::array();
    const auto family = fe_sets(g_, v, cap(), cfg_.minimal);
    for (const auto& m : family.members.at(v)) sets.push_back({{"set", path_list(g_, m.set)}, {"status", status(m.status)}});
    by_vertex[g_.vertex_name(v)] = std::move(sets);
  }
  out_["minimal_only"] = cfg_.minimal;
  out_["fe"] = std::move(by_vertex);
  return finish();
}

std::string Run::saturation_cmd() {
  require_format({"json", "text"});
  if (cfg_.sets.empty() && !cfg_.hset) throw Error(ErrorCode::InvalidArgument, "saturation needs --hset");
  const VertexSet G = hset();
  const auto result = saturation(g_, G, cap());
  out_["input"] = vertex_list(g_, G);
  out_["saturation"] = vertex_list(g_, result.set);
  out_["hereditary"] = is_hereditary(g_, result.set);
  out_["exact"] = cert(g_, result.exact);
  return finish();
}

std::string Run::sathered_cmd() {
  require_format({"json", "text"});
  if (cfg_.hset) {
    const VertexSet H = hset();
    out_["H"] = vertex_list(g_, H);
    out_["hereditary"] = is_hereditary(g_, H);
    if (is_hereditary(g_, H)) out_["saturated"] = cert(g_, is_saturated(g_, H, cap()));
    return finish();
  }
  json sets = json::array();
  for (const auto& s : enumerate_sat_hered(g_, cap()))
    sets.push_back({{"set", vertex_list(g_, s.set)}, {"saturated", status(s.saturated)}});
  out_["sat_hered"] = std::move(sets);
  return finish();
}

std::string Run::quotient_cmd() {
  const VertexSet H = hset();
  const auto q = quotient_graph(g_, H);
  json extra;
  extra["H"] = vertex_list(g_, H);
  extra["validation"] = validation_json(validate_kgraph(q.graph));
  return graph_output(q.graph, std::move(extra));
}

std::string Run::ehfamily_cmd() {
  require_format({"json", "text"});
  const VertexSet H = hset();
  const auto q = quotient_graph(g_, H);
  const auto fam = restricted_fe_family(g_, H, cap());
  out_["H"] = vertex_list(g_, H);
  out_["family"] = family_list(q.graph, {fam.members.begin(), fam.members.end()});
  out_["satiated"] = cert(q.graph, fam.satiated);
  out_["overflow"] = family_list(q.graph, fam.overflow);
  return finish();
}

std::string Run::satiate_cmd() {
  require_format({"json", "text"});
  const VertexSet H = hset();
  const auto q = quotient_graph(g_, H);
  Family family;
  if (cfg_.sets.empty()) {
    family = restricted_fe_family(g_, H, cap()).members;
  } else {
    for (const auto& s : cfg_.sets) {
      auto E = path_set(q.graph, s);
      if (E.empty()) throw Error(ErrorCode::InvalidArgument, "family members must be nonempty");
      family.insert(std::move(E));
    }
  }
  const auto universe = capped_universe(q.graph, cap());
  const auto closure = satiation_closure(q.graph, family, cap(), universe);
  std::vector<PathSet> added;
  for (const auto& E : closure.members)
    if (!family.count(E)) added.push_back(E);
  out_["H"] = vertex_list(g_, H);
  out_["family"] = family_list(q.graph, {family.begin(), family.end()});
  out_["closure"] = family_list(q.graph, {closure.members.begin(), closure.members.end()});
  out_["added"] = family_list(q.graph, added);
  out_["closure_complete"] = status(closure.satiated.value);
  out_["satiated"] = cert(q.graph, is_satiated(q.graph, family, cap(), universe));
  out_["overflow"] = family_list(q.graph, closure.overflow);
  return finish();
}

std::string Run::pairs_cmd() {
  require_format({"json", "text"});
  json pairs = json::array();
  for (const auto& p : enumerate_ideal_pairs(g_, cap())) pairs.push_back(pair_json(p, std::nullopt));
  out_["pairs"] = std::move(pairs);
  return finish();
}

std::string Run::lattice_cmd() {
  const auto L = ideal_lattice(g_, cap());
  if (cfg_.format == "dot") return emit_dot(g_, L);
  json nodes = json::array();
  for (std::size_t i = 0; i < L.nodes.size(); ++i) nodes.push_back(pair_json(L.nodes[i], i));
  out_["nodes"] = std::move(nodes);
  json hasse = json::array();
  for (auto [i, j] : L.hasse) hasse.push_back({i, j});
  out_["hasse"] = std::move(hasse);
  out_["is_partial_order"] = L.is_partial_order;
  out_["is_lattice"] = L.is_lattice;
  auto table = [](const std::vector<std::vector<std::optional<std::size_t>>>& m) {
    json rows = json::array();
    for (const auto& row : m) {
      json r = json::array();
      for (const auto& x : row) r.push_back(x ? json(*x) : json(nullptr));
      rows.push_back(std::move(r));
    }
    return rows;
  };
  out_["meet"] = table(L.meet);
  out_["join"] = table(L.join);
  return finish();
}

std::string Run::skew_cmd() {
  if (!cfg_.window) throw Error(ErrorCode::InvalidArgument, "skew requires --window");
  const auto w = skew_product_window(g_, parse_window(*cfg_.window, g_.rank()));
  json extra;
  extra["window"] = {{"lo", w.window.lo}, {"hi", w.window.hi}};
  extra["validation"] = validation_json(validate_kgraph(w.graph));
  json grading = json::object();
  for (VertexId v = 0; v < w.graph.vertex_count(); ++v) grading[w.graph.vertex_name(v)] = w.grading.b[v];
  extra["grading"] = std::move(grading);
  return graph_output(w.graph, std::move(extra));
}

std::string Run::lift_cmd() {
  require_format({"json", "text"});
  if (!cfg_.window) throw Error(ErrorCode::InvalidArgument, "lift requires --window");
  const auto w = skew_product_window(g_, parse_window(*cfg_.window, g_.rank()));
  const Offset n = cfg_.shift ? parse_vector<std::int64_t>(*cfg_.shift, g_.rank(), "shift") : Offset(g_.rank(), 0);
  const auto E = path_set(g_, first_set());
  const auto lifted = skew_fe_lift(w, E, n);
  out_["set"] = path_list(g_, E);
  out_["shift"] = n;
  out_["lifted"] = path_list(w.graph, lifted);
  if (!lifted.empty()) out_["exhaustive"] = cert(w.graph, is_exhaustive(w.graph, lifted, cap()));
  return finish();
}

std::string Run::grading_cmd() {
  require_format({"json", "text"});
  const auto b = grading_exists(g_);
  if (!b) {
    out_["grading"] = nullptr;
  } else {
    json j = json::object();
    for (VertexId v = 0; v < g_.vertex_count(); ++v) j[g_.vertex_name(v)] = b->b[v];
    out_["grading"] = std::move(j);
  }
  return finish();
}

std::string Run::mclosure_cmd() {
  require_format({"json", "text"});
  std::optional<SkewWindow> w;
  if (cfg_.window) w = skew_product_window(g_, parse_window(*cfg_.window, g_.rank()));
  const KGraph& g = w ? w->graph : g_;
  const std::optional<Grading> grading = w ? std::optional<Grading>(w->grading) : grading_exists(g_);
  const auto E = path_set(g, first_set());
  const auto vee = vee_closure(g, E);
  const auto M = m_closure(g, grading, E);
  std::size_t rounds = 0;
  const auto fixpoint = m_closure_fixpoint(g, grading, E, &rounds);
  auto join_of_sources = [&](const PathSet& S) {
    std::optional<Offset> j;
    for (const auto& p : S) {
      const auto& b = grading->b[p.source()];
      if (!j) j = b;
      else
        for (std::size_t i = 0; i < b.size(); ++i) (*j)[i] = std::max((*j)[i], b[i]);
    }
    return j;
  };
  out_["set"] = path_list(g, E);
  out_["vee"] = path_list(g, vee);
  out_["m_closure"] = path_list(g, M);
  out_["fixpoint"] = path_list(g, fixpoint);
  out_["rounds"] = rounds;
  out_["source_join_preserved"] = join_of_sources(M) == join_of_sources(E);
  return finish();
}

std::string Run::boundary_cmd() {
  require_format({"json", "text"});
  if (!cfg_.vertex) throw Error(ErrorCode::InvalidArgument, "boundary requires --vertex");
  json prefixes = json::array();
  for (const auto& p : boundary_prefixes(g_, g_.vertex_id(*cfg_.vertex), cap())) {
    if (p.status == PrefixStatus::Unknown) uncertain_ = true;
    prefixes.push_back({{"path", g_.format(p.path)}, {"status", to_string(p.status)}});
  }
  out_["vertex"] = *cfg_.vertex;
  out_["prefixes"] = std::move(prefixes);
  return finish();
}

std::string Run::cofinal_cmd() {
  require_format({"json", "text"});
  out_["cofinal"] = cert(g_, cofinality_check(g_, cap()));
  return finish();
}

std::string Run::loops_cmd() {
  require_format({"json", "text"});
  const auto loops = find_loop_with_entrance(g_, cap());
  json by_vertex = json::object();
  for (VertexId v = 0; v < loops.size(); ++v) by_vertex[g_.vertex_name(v)] = cert(g_, loops[v]);
  out_["loops"] = std::move(by_vertex);
  return finish();
}

std::string Run::report_cmd() {
  require_format({"json", "text"});
  const auto r = structure_report(g_, cap(), cfg_.assume_condition_c);
  out_["cofinal"] = cert(g_, r.cofinal);
  out_["all_vertices_reach_loop_with_entrance"] = cert(g_, r.all_vertices_reach_loop_with_entrance);
  out_["lattice_size"] = r.lattice_size ? json(*r.lattice_size) : json(nullptr);
  out_["assumed_condition_C"] = r.assumed_condition_C;
  out_["verdicts"] = {{"simple", r.simple}, {"purely_infinite", r.purely_infinite}, {"kp_candidate", r.kp_candidate}};
  return finish();
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string set_label(const KGraph& g, const PathSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + g.format(s[i]);
  return out + "}";
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "validate", "paths",   "mce",     "ext",   "fe",       "saturation", "sathered", "quotient",
      "ehfamily", "satiate", "pairs",   "lattice", "skew",   "grading",    "mclosure", "boundary",
      "cofinal",  "loops",   "report",  "vee",   "pi",       "exhaustive", "lift",     "emit"};
  return names;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return kExitSyntax;
    case ErrorCode::Validation: return kExitValidation;
    case ErrorCode::Internal: return kExitInternal;
    default: return kExitArgument;
  }
}

CommandResult run_command(const KGraphDocument& doc, const RunConfig& config) { return Run(doc, config).execute(); }

std::string emit_dot(const KGraph& g) {
  std::ostringstream out;
  out << "digraph kgraph {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) out << "  " << quoted(g.vertex_name(v)) << ";\n";
  for (const auto& e : g.skeleton().edges)
    out << "  " << quoted(e.source) << " -> " << quoted(e.range) << " [label=" << quoted(e.id + ":" + std::to_string(e.color))
        << "];\n";
  out << "}\n";
  return out.str();
}

std::string emit_dot(const KGraph& g, const IdealLattice& lattice) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
    const auto& p = lattice.nodes[i];
    std::string h = "{";
    for (std::size_t j = 0; j < p.H.size(); ++j) h += (j ? "," : "") + g.vertex_name(p.H[j]);
    h += "}";
    std::string b = "{";
    for (std::size_t j = 0; j < p.B.size(); ++j) b += (j ? "," : "") + set_label(g, p.B[j]);
    b += "}";
    out << "  n" << i << " [label=" << quoted("H=" + h + " B=" + b + " [" + (p.exact ? "exact" : "unknown-at-cap") + "]")
        << "];\n";
  }
  for (auto [i, j] : lattice.hasse) out << "  n" << i << " -> n" << j << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace kg
