#include "kgraph/kgraph_c.h"

#include <cstdlib>
#include <cstring>
#include <optional>

#include <json.hpp>

#include "kgraph/commands.hpp"
#include "kgraph/random_graph.hpp"
#include "kgraph/text_format.hpp"

struct kg_graph {
  kg::KGraphDocument doc;
};

namespace {

using json = nlohmann::json;

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** slot, const std::string& s) {
  if (slot) *slot = copy_string(s);
}

json parse_options(const char* options_json) {
  if (!options_json || !*options_json) return json::object();
  json j = json::parse(options_json);
  if (!j.is_object()) throw kg::Error(kg::ErrorCode::InvalidArgument, "options must be a JSON object");
  return j;
}

std::optional<std::string> as_text(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  const auto& v = j[key];
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
    }
    return s;
  }
  throw kg::Error(kg::ErrorCode::InvalidArgument, std::string("option '") + key + "' has the wrong type");
}

std::vector<std::string> as_list(const json& j, const char* key) {
  std::vector<std::string> out;
  if (!j.contains(key) || j[key].is_null()) return out;
  if (!j[key].is_array()) throw kg::Error(kg::ErrorCode::InvalidArgument, std::string("option '") + key + "' must be an array");
  for (const auto& item : j[key]) {
    if (item.is_string()) {
      out.push_back(item.get<std::string>());
    } else if (item.is_array()) {
      std::string s;
      for (std::size_t i = 0; i < item.size(); ++i) s += (i ? "," : "") + item[i].get<std::string>();
      out.push_back(s);
    } else {
      throw kg::Error(kg::ErrorCode::InvalidArgument, std::string("option '") + key + "' holds a non-string entry");
    }
  }
  return out;
}

bool as_flag(const json& j, const char* key) { return j.contains(key) && j[key].is_boolean() && j[key].get<bool>(); }

}  // namespace

extern "C" {

const char* kg_version(void) { return kg::kToolVersion; }

const char* kg_status_name(kg_status status) {
  switch (status) {
    case KG_OK: return "ok";
    case KG_VALIDATION_FAILED: return "validation-failed";
    case KG_SYNTAX_ERROR: return "syntax-error";
    case KG_CAP_INSUFFICIENT: return "cap-insufficient";
    case KG_INVALID_ARGUMENT: return "invalid-argument";
    case KG_INTERNAL_ERROR: return "internal-error";
  }
  return "unknown";
}

kg_status kg_graph_parse(const char* text, kg_graph** out, char** diagnostic) {
  if (out) *out = nullptr;
  if (diagnostic) *diagnostic = nullptr;
  if (!text || !out) return KG_INVALID_ARGUMENT;
  try {
    *out = new kg_graph{kg::parse_kgraph_text(text)};
    return KG_OK;
  } catch (const kg::SyntaxError& e) {
    put(diagnostic, e.what());
    return KG_SYNTAX_ERROR;
  } catch (const std::exception& e) {
    put(diagnostic, e.what());
    return KG_INTERNAL_ERROR;
  }
}

void kg_graph_free(kg_graph* graph) { delete graph; }

unsigned kg_graph_rank(const kg_graph* graph) { return graph ? static_cast<unsigned>(graph->doc.graph.rank()) : 0; }

unsigned kg_graph_vertex_count(const kg_graph* graph) {
  return graph ? static_cast<unsigned>(graph->doc.graph.vertex_count()) : 0;
}

int kg_graph_is_valid(const kg_graph* graph) { return graph && graph->doc.report.ok ? 1 : 0; }

kg_status kg_run(const kg_graph* graph, const char* command, const char* options_json, char** output) {
  if (output) *output = nullptr;
  if (!graph || !command || !output) return KG_INVALID_ARGUMENT;
  kg::RunConfig config;
  try {
    const json o = parse_options(options_json);
    config.command = command;
    config.cap = as_text(o, "cap");
    if (auto f = as_text(o, "format")) config.format = *f;
    config.vertex = as_text(o, "vertex");
    config.paths = as_list(o, "paths");
    config.sets = as_list(o, "sets");
    config.hset = as_text(o, "hset");
    config.window = as_text(o, "window");
    config.shift = as_text(o, "shift");
    config.assume_condition_c = as_flag(o, "assume_c");
    config.require_exact = as_flag(o, "require_exact");
    config.minimal = as_flag(o, "minimal");
  } catch (const std::exception& e) {
    put(output, std::string("invalid-argument: ") + e.what());
    return KG_INVALID_ARGUMENT;
  }
  const auto result = kg::run_command(graph->doc, config);
  const bool has_output = result.status == KG_OK || result.status == KG_CAP_INSUFFICIENT ||
                          (result.status == KG_VALIDATION_FAILED && !result.output.empty());
  put(output, has_output ? result.output : result.error);
  return static_cast<kg_status>(result.status);
}

kg_status kg_random(const char* options_json, char** output) {
  if (output) *output = nullptr;
  if (!output) return KG_INVALID_ARGUMENT;
  try {
    const json o = parse_options(options_json);
    kg::RandomGraphOptions opts;
    opts.rank = o.value("rank", 1u);
    opts.max_vertices = o.value("max_vertices", 5u);
    opts.max_edges = o.value("max_edges", 8u);
    opts.seed = o.value("seed", std::uint64_t{0});
    put(output, kg::emit_kgraph_text(kg::random_kgraph(opts)));
    return KG_OK;
  } catch (const kg::Error& e) {
    put(output, e.what());
    return static_cast<kg_status>(kg::exit_code_for(e.code()));
  } catch (const std::exception& e) {
    put(output, e.what());
    return KG_INVALID_ARGUMENT;
  }
}

void kg_string_free(char* s) { std::free(s); }

}  // extern "C"
