#include "support.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kg::testing {

KGraphDocument load_fixture(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name + ".kg");
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::stringstream text;
  text << in.rdbuf();
  return parse_kgraph_text(text.str());
}

KGraph fixture(const std::string& name) { return load_fixture(name).graph; }

Path path(const KGraph& g, const std::string& text) { return g.parse_path(text); }

PathSet paths(const KGraph& g, std::initializer_list<const char*> texts) {
  PathSet out;
  for (const char* t : texts) out.push_back(g.parse_path(t));
  return canonical(std::move(out));
}

VertexSet vertices(const KGraph& g, std::initializer_list<const char*> names) {
  std::vector<VertexId> out;
  for (const char* n : names) out.push_back(g.vertex_id(n));
  return make_vertex_set(std::move(out));
}

std::vector<std::string> names(const KGraph& g, const PathSet& set) {
  std::vector<std::string> out;
  for (const auto& p : set) out.push_back(g.format(p));
  return out;
}

std::vector<std::string> names(const KGraph& g, const VertexSet& set) {
  std::vector<std::string> out;
  for (auto v : set) out.push_back(g.vertex_name(v));
  return out;
}

PathSet brute_mce(const KGraph& g, const Path& mu, const Path& nu) {
  PathSet out;
  if (mu.range() != nu.range()) return out;
  const Degree target = mu.degree().join(nu.degree());
  for (const auto& tau : g.paths_of_degree(mu.range(), target))
    if (g.prefix(tau, mu.degree()) == mu && g.prefix(tau, nu.degree()) == nu) out.push_back(tau);
  return canonical(std::move(out));
}

PathSet brute_ext(const KGraph& g, const Path& mu, const PathSet& E) {
  PathSet out;
  for (const auto& nu : E) {
    if (nu.range() != mu.range()) continue;
    const Degree rest = mu.degree().join(nu.degree()) - mu.degree();
    for (const auto& beta : g.paths_of_degree(mu.source(), rest)) {
      const Path tau = g.compose(mu, beta);
      if (g.prefix(tau, nu.degree()) == nu) out.push_back(beta);
    }
  }
  return canonical(std::move(out));
}

bool brute_exhaustive_up_to(const KGraph& g, VertexId v, const PathSet& E, const Degree& bound) {
  for (const auto& lambda : g.paths_up_to(v, bound)) {
    const bool meets = std::any_of(E.begin(), E.end(), [&](const Path& nu) { return !brute_mce(g, lambda, nu).empty(); });
    if (!meets) return false;
  }
  return true;
}

std::vector<bool> oracle_reach(const KGraph& g, VertexId v) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<VertexId> queue{v};
  seen[v] = true;
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (const auto& e : g.edges())
      if (e.range == x && !seen[e.source]) {
        seen[e.source] = true;
        queue.push_back(e.source);
      }
  }
  return seen;
}

std::vector<VertexSet> classical_sat_hered(const KGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    auto in = [&](VertexId v) { return (mask >> v) & 1u; };
    bool ok = true;
    for (const auto& e : g.edges())
      if (in(e.range) && !in(e.source)) ok = false;
    for (VertexId v = 0; v < n && ok; ++v) {
      if (in(v)) continue;
      bool any = false, all_in = true;
      for (const auto& e : g.edges())
        if (e.range == v) {
          any = true;
          all_in = all_in && in(e.source);
        }
      if (any && all_in) ok = false;
    }
    if (!ok) continue;
    VertexSet H;
    for (VertexId v = 0; v < n; ++v)
      if (in(v)) H.push_back(v);
    out.push_back(H);
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

namespace {

Degree widen(const Degree& cap, const PathSet& E) {
  Degree bound = cap;
  for (const auto& p : E) bound = bound + p.degree();
  return bound;
}

}  // namespace

std::string replay_non_exhaustive(const KGraph& g, VertexId v, const PathSet& E, const Witness& w) {
  if (w.paths.size() != 1) return "witness must hold one path";
  const Path& lambda = w.paths[0];
  if (lambda.range() != v) return "witness path does not start at the vertex";
  for (const auto& nu : E)
    if (!brute_mce(g, lambda, nu).empty()) return "witness path meets " + g.format(nu);
  return {};
}

std::string replay_not_saturated(const KGraph& g, const VertexSet& H, const Witness& w, const Degree& cap) {
  if (w.vertices.size() != 1 || w.sets.size() != 1) return "witness must hold (v, F)";
  const VertexId v = w.vertices[0];
  const PathSet& F = w.sets[0];
  if (contains(H, v)) return "witness vertex lies in H";
  if (F.empty()) return "empty witness set";
  for (const auto& p : F) {
    if (p.range() != v) return "member " + g.format(p) + " does not start at v";
    if (p.is_vertex()) return "member is a vertex";
    if (!contains(H, p.source())) return "member " + g.format(p) + " does not end in H";
  }
  if (!brute_exhaustive_up_to(g, v, F, widen(cap, F))) return "witness set is not exhaustive";
  return {};
}

std::string replay_not_cofinal(const KGraph& g, const Witness& w) {
  if (w.vertices.size() != 1 || w.paths.size() != 1) return "witness must hold (x, w)";
  const Path& x = w.paths[0];
  if (w.kind == "terminal-boundary-path") {
    for (const auto& e : g.edges())
      if (e.range == x.source()) return "x ends at a vertex with edges";
  } else if (w.kind == "periodic-boundary-path") {
    if (g.rank() != 1 || x.is_vertex() || x.range() != x.source()) return "x is not a cycle in a 1-graph";
  } else {
    return "unknown witness kind " + w.kind;
  }
  const auto reach = oracle_reach(g, w.vertices[0]);
  for (const auto& n : degrees_up_to(x.degree()))
    if (reach[g.vertex_at(x, n)]) return "w reaches x(" + n.str() + ")";
  return {};
}

std::string replay_loop_with_entrance(const KGraph& g, VertexId v, const Witness& w) {
  if (w.paths.size() != 2) return "witness must hold (mu, alpha)";
  const Path& mu = w.paths[0];
  const Path& alpha = w.paths[1];
  if (mu.is_vertex() || mu.range() != mu.source()) return "mu is not a loop";
  if (alpha.range() != mu.source()) return "alpha does not start at s(mu)";
  if (!alpha.degree().leq(mu.degree())) return "d(alpha) exceeds d(mu)";
  if (g.segment(mu, g.zero(), alpha.degree()) == alpha) return "alpha is an initial segment of mu";
  if (!oracle_reach(g, v)[mu.source()]) return "the loop is not reachable";
  return {};
}

std::string replay_no_loop(const KGraph& g, VertexId v, const Degree& bound) {
  const auto reach = oracle_reach(g, v);
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    if (!reach[x]) continue;
    for (const auto& mu : g.paths_up_to(x, bound)) {
      if (mu.is_vertex() || mu.source() != x) continue;
      for (const auto& alpha : g.paths_up_to(x, mu.degree()))
        if (g.segment(mu, g.zero(), alpha.degree()) != alpha)
          return "loop " + g.format(mu) + " has entrance " + g.format(alpha);
    }
  }
  return {};
}

std::string replay_not_satiated(const KGraph& gq, const Family& family, const Witness& w, const Degree& cap) {
  if (w.sets.size() != 2) return "witness must hold (source, produced)";
  const PathSet& from = w.sets[0];
  const PathSet& produced = w.sets[1];
  if (family.count(produced)) return "produced set already in the family";
  if (produced.empty()) return "produced set is empty";
  const VertexId v = produced.front().range();
  if (!brute_exhaustive_up_to(gq, v, produced, widen(cap, produced))) return "produced set is not exhaustive";
  auto has_prefix_in = [&](const Path& p, const PathSet& S) {
    return std::any_of(S.begin(), S.end(), [&](const Path& q) { return q.degree().leq(p.degree()) && gq.prefix(p, q.degree()) == q; });
  };
  if (w.kind == "S1") {
    if (!std::includes(produced.begin(), produced.end(), from.begin(), from.end())) return "S1: not a superset";
  } else if (w.kind == "S2") {
    bool found = false;
    for (const auto& mu : gq.paths_up_to(v, cap))
      if (!has_prefix_in(mu, from) && brute_ext(gq, mu, from) == produced) found = true;
    if (!found) return "S2: no mu produces the set";
  } else if (w.kind == "S3") {
    for (const auto& p : produced)
      if (std::none_of(from.begin(), from.end(), [&](const Path& l) { return p.degree().leq(l.degree()) && gq.prefix(l, p.degree()) == p; }))
        return "S3: " + gq.format(p) + " truncates no member";
  } else if (w.kind == "S4") {
    bool found = false;
    for (const auto& lambda : from) {
      bool ok = true;
      for (const auto& m : from)
        if (m != lambda && !std::binary_search(produced.begin(), produced.end(), m)) ok = false;
      for (const auto& p : produced)
        if (!std::binary_search(from.begin(), from.end(), p) &&
            !(lambda.degree().leq(p.degree()) && gq.prefix(p, lambda.degree()) == lambda))
          ok = false;
      if (ok) found = true;
    }
    if (!found) return "S4: not a substitution of one member";
  } else {
    return "unknown rule " + w.kind;
  }
  return {};
}

}  // namespace kg::testing
