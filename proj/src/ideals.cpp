#include "kgraph/ideals.hpp"

#include <algorithm>
#include <deque>

namespace kg {

namespace {

constexpr std::size_t kMaxSubsetVertices = 20;
constexpr std::size_t kMaxClosedFamilies = 256;
constexpr std::size_t kOverflowSamples = 32;
constexpr std::size_t kMaxUniverse = 256;

bool reaches_any(const std::vector<bool>& reach, const VertexSet& S) {
  return std::any_of(S.begin(), S.end(), [&](VertexId v) { return reach[v]; });
}

// Depth-first search over vertices outside `blocked`, looking for a sink or a
// cycle reachable from v.
bool escapes(const KGraph& g, VertexId v, const VertexSet& blocked) {
  enum : std::uint8_t { White, Grey, Black };
  std::vector<std::uint8_t> state(g.vertex_count(), White);
  auto visit = [&](auto&& self, VertexId x) -> bool {
    state[x] = Grey;
    bool has_edge = false;
    for (std::size_t c = 0; c < g.rank(); ++c) {
      for (EdgeId e : g.edges_at(x, c)) {
        has_edge = true;
        const VertexId y = g.edge(e).source;
        if (contains(blocked, y)) continue;
        if (state[y] == Grey) return true;
        if (state[y] == White && self(self, y)) return true;
      }
    }
    state[x] = Black;
    return !has_edge;
  };
  return visit(visit, v);
}

// v is certified to admit no finite exhaustive F in v Lambda S.
bool certified_outside(const KGraph& g, VertexId v, const VertexSet& S, bool hereditary) {
  const auto reach = reachable_from(g, v);
  bool reaches_s_nontrivially = false;
  for (VertexId w = 0; w < g.vertex_count(); ++w)
    if (reach[w] && contains(S, w)) reaches_s_nontrivially = true;
  if (!reaches_s_nontrivially) return true;
  if (!hereditary) return false;
  for (VertexId w = 0; w < g.vertex_count(); ++w)
    if (reach[w] && !reaches_any(reachable_from(g, w), S)) return true;
  // In a 1-graph compatibility is comparability, so a path that stays
  // outside S forever (or dies outside S) defeats every finite F.
  return g.rank() == 1 && escapes(g, v, S);
}

PathSet paths_into(const KGraph& g, VertexId v, const VertexSet& S, const Degree& cap) {
  PathSet out;
  for (auto& p : g.paths_up_to(v, cap))
    if (!p.is_vertex() && contains(S, p.source())) out.push_back(std::move(p));
  return out;
}

// Smallest-cardinality subset of F certified exhaustive; F itself must be.
PathSet minimal_exhaustive_subset(const KGraph& g, VertexId v, const PathSet& F, const Degree& cap) {
  const std::size_t n = F.size();
  if (n > 20) return F;
  for (std::size_t size = 1; size < n; ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      PathSet subset;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) subset.push_back(F[i]);
      if (is_exhaustive(g, v, subset, cap).is_true()) return subset;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return F;
}

bool less_vertex_set(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

VertexId range_of(const PathSet& set) { return set.front().range(); }

PathSet restrict_set(const KGraph& parent, const QuotientGraph& q, const PathSet& set) {
  PathSet out;
  for (const auto& p : set)
    if (auto r = q.restrict(parent, p)) out.push_back(std::move(*r));
  return canonical(std::move(out));
}

PathSet lift_set(const KGraph& parent, const QuotientGraph& q, const PathSet& set) {
  PathSet out;
  for (const auto& p : set) out.push_back(q.lift(parent, p));
  return canonical(std::move(out));
}

Family strip_to_quotient(const KGraph& g, const QuotientGraph& q, const VertexSet& H, const Degree& cap) {
  Family family;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (contains(H, v)) continue;
    const auto sets = fe_sets(g, v, cap);
    for (const auto& member : sets.members.at(v)) {
      auto stripped = restrict_set(g, q, member.set);
      if (!stripped.empty()) family.insert(std::move(stripped));
    }
  }
  return family;
}

}  // namespace

VertexSet make_vertex_set(std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

bool contains(const VertexSet& set, VertexId v) { return std::binary_search(set.begin(), set.end(), v); }

std::vector<bool> reachable_from(const KGraph& g, VertexId v) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack{v};
  seen[v] = true;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (std::size_t c = 0; c < g.rank(); ++c)
      for (EdgeId e : g.edges_at(x, c)) {
        const VertexId y = g.edge(e).source;
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
  }
  return seen;
}

bool is_hereditary(const KGraph& g, const VertexSet& H) {
  for (VertexId v : H)
    if (v >= g.vertex_count()) throw Error(ErrorCode::UnknownId, "vertex index out of range");
  for (const auto& e : g.edges())
    if (contains(H, e.range) && !contains(H, e.source)) return false;
  return true;
}

VertexSet hereditary_closure(const KGraph& g, const VertexSet& G) {
  std::vector<bool> in(g.vertex_count(), false);
  for (VertexId v : G) {
    if (v >= g.vertex_count()) throw Error(ErrorCode::UnknownId, "vertex index out of range");
    const auto reach = reachable_from(g, v);
    for (VertexId w = 0; w < g.vertex_count(); ++w) in[w] = in[w] || reach[w];
  }
  VertexSet out;
  for (VertexId w = 0; w < g.vertex_count(); ++w)
    if (in[w]) out.push_back(w);
  return out;
}

CertifiedBool is_saturated(const KGraph& g, const VertexSet& H, const Degree& cap) {
  if (!is_hereditary(g, H)) throw Error(ErrorCode::NotHereditary, "saturation test requires a hereditary set");
  bool unknown = false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (contains(H, v) || certified_outside(g, v, H, true)) continue;
    const PathSet F = paths_into(g, v, H, cap);
    if (!F.empty() && is_exhaustive(g, v, F, cap).is_true())
      return CertifiedBool::certified_false(cap, Witness{"exhaustive-set-into-H", {v}, {}, {minimal_exhaustive_subset(g, v, F, cap)}});
    unknown = true;
  }
  return unknown ? CertifiedBool::unknown(cap) : CertifiedBool::certified_true(cap);
}

SaturationResult saturation(const KGraph& g, const VertexSet& G, const Degree& cap) {
  VertexSet current = make_vertex_set(G);
  for (VertexId v : current)
    if (v >= g.vertex_count()) throw Error(ErrorCode::UnknownId, "vertex index out of range");
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (contains(current, v)) continue;
      const PathSet F = paths_into(g, v, current, cap);
      if (!F.empty() && is_exhaustive(g, v, F, cap).is_true()) {
        current.insert(std::upper_bound(current.begin(), current.end(), v), v);
        changed = true;
      }
    }
  }
  const bool hereditary = is_hereditary(g, current);
  bool exact = true;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!contains(current, v) && !certified_outside(g, v, current, hereditary)) exact = false;
  return {current, exact ? CertifiedBool::certified_true(cap) : CertifiedBool::unknown(cap)};
}

std::vector<SatHeredSet> enumerate_sat_hered(const KGraph& g, const Degree& cap) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxSubsetVertices) throw Error(ErrorCode::CapTooLarge, "too many vertices for subset enumeration");
  std::vector<SatHeredSet> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexSet H;
    for (VertexId v = 0; v < n; ++v)
      if (mask & (1u << v)) H.push_back(v);
    if (!is_hereditary(g, H)) continue;
    const auto cert = is_saturated(g, H, cap);
    if (!cert.is_false()) out.push_back({std::move(H), cert.value});
  }
  std::sort(out.begin(), out.end(), [](const SatHeredSet& a, const SatHeredSet& b) { return less_vertex_set(a.set, b.set); });
  return out;
}

// ---------------------------------------------------------------------------

Path QuotientGraph::lift(const KGraph& parent, const Path& p) const {
  if (p.is_vertex()) return parent.identity(parent_vertex.at(p.range()));
  std::vector<EdgeId> word;
  for (EdgeId e : p.edges()) word.push_back(parent_edge.at(e));
  return parent.make_path(word);
}

std::optional<Path> QuotientGraph::restrict(const KGraph& parent, const Path& p) const {
  if (p.is_vertex()) {
    auto v = graph.find_vertex(parent.vertex_name(p.range()));
    if (!v) return std::nullopt;
    return graph.identity(*v);
  }
  if (!graph.find_vertex(parent.vertex_name(p.source()))) return std::nullopt;
  std::vector<EdgeId> word;
  for (EdgeId e : p.edges()) word.push_back(*graph.find_edge(parent.edge(e).id));
  return graph.make_path(word);
}

QuotientGraph quotient_graph(const KGraph& g, const VertexSet& H) {
  if (!is_hereditary(g, H)) throw Error(ErrorCode::NotHereditary, "quotient requires a hereditary set");
  Skeleton sk;
  sk.rank = static_cast<std::uint32_t>(g.rank());
  std::vector<VertexId> parent_vertex;
  std::vector<EdgeId> parent_edge;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!contains(H, v)) {
      sk.vertices.push_back(g.vertex_name(v));
      parent_vertex.push_back(v);
    }
  std::vector<bool> kept(g.edge_count(), false);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (contains(H, g.edge(e).source)) continue;
    kept[e] = true;
    sk.edges.push_back(g.skeleton().edges[e]);
    parent_edge.push_back(e);
  }
  std::vector<SquareRule> squares;
  for (const auto& sq : g.squares())
    if (kept[*g.find_edge(sq.f)] && kept[*g.find_edge(sq.g)] && kept[*g.find_edge(sq.g2)] && kept[*g.find_edge(sq.f2)])
      squares.push_back(sq);
  return QuotientGraph{KGraph(std::move(sk), std::move(squares)), std::move(parent_vertex), std::move(parent_edge)};
}

Universe capped_universe(const KGraph& g, const Degree& cap) {
  Universe u;
  for (const auto& [v, members] : fe_family(g, cap).members)
    for (const auto& m : members) u.emplace(m.set, m.status);
  return u;
}

SatiatedFamily restricted_fe_family(const KGraph& g, const VertexSet& H, const Degree& cap) {
  const auto q = quotient_graph(g, H);
  Family family = strip_to_quotient(g, q, H, cap);
  const auto universe = capped_universe(q.graph, cap);
  try {
    auto closure = satiation_closure(q.graph, family, cap, universe);
    auto satiated = is_satiated(q.graph, family, cap, universe);
    return SatiatedFamily{std::move(family), cap, std::move(satiated), std::move(closure.overflow)};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapTooLarge) throw;
    return SatiatedFamily{std::move(family), cap, CertifiedBool::unknown(cap), {}};
  }
}

// ---------------------------------------------------------------------------
// Satiation

namespace {

struct Closure {
  Family members;
  std::vector<PathSet> overflow;
  std::size_t overflow_count = 0;
  // produced set -> (rule, source set)
  std::map<PathSet, std::pair<std::string, PathSet>> provenance;
};

// `closed` is assumed closed already; only consequences of `start` are
// explored.
Closure close_family(const KGraph& g, const Family& closed, const Family& start, const Degree& cap,
                     const Universe& universe) {
  if (universe.size() > kMaxUniverse)
    throw Error(ErrorCode::CapTooLarge, "capped universe has " + std::to_string(universe.size()) +
                                            " exhaustive candidates; lower the cap");
  Closure out;
  out.members = closed;
  std::map<VertexId, std::vector<PathSet>> by_vertex;
  for (const auto& [set, status] : universe) by_vertex[range_of(set)].push_back(set);

  std::deque<PathSet> work;
  for (const auto& s : start)
    if (out.members.insert(s).second) work.push_back(s);

  auto add = [&](PathSet candidate, const char* rule, const PathSet& from) {
    if (!universe.count(candidate)) return;
    if (out.members.insert(candidate).second) {
      out.provenance.emplace(candidate, std::make_pair(std::string(rule), from));
      work.push_back(std::move(candidate));
    }
  };
  auto substitute = [&](const PathSet& G, std::size_t at, const PathSet& F) {
    const Path& lambda = G[at];
    PathSet result;
    for (std::size_t i = 0; i < G.size(); ++i)
      if (i != at) result.push_back(G[i]);
    for (const auto& mu : F) {
      Path p = g.compose(lambda, mu);
      if (!p.degree().leq(cap)) {
        ++out.overflow_count;
        if (out.overflow.size() < kOverflowSamples) {
          for (const auto& m2 : F) result.push_back(g.compose(lambda, m2));
          out.overflow.push_back(canonical(std::move(result)));
        }
        return;
      }
      result.push_back(std::move(p));
    }
    add(canonical(std::move(result)), "S4", G);
  };

  while (!work.empty()) {
    const PathSet G = work.front();
    work.pop_front();
    const VertexId v = range_of(G);

    for (const auto& E : by_vertex[v])
      if (std::includes(E.begin(), E.end(), G.begin(), G.end())) add(E, "S1", G);

    for (const auto& mu : g.paths_up_to(v, cap)) {
      const bool in_g_lambda = std::any_of(G.begin(), G.end(), [&](const Path& l) { return g.has_prefix(mu, l); });
      if (in_g_lambda) continue;
      auto X = ext(g, mu, G);
      if (!X.empty()) add(std::move(X), "S2", G);
    }

    // Truncations: every choice 0 < n <= d(lambda) per member.
    std::vector<std::vector<Path>> choices;
    for (const auto& lambda : G) {
      std::vector<Path> opts;
      for (const auto& n : degrees_up_to(lambda.degree()))
        if (!n.is_zero()) opts.push_back(g.prefix(lambda, n));
      choices.push_back(std::move(opts));
    }
    std::vector<std::size_t> idx(G.size(), 0);
    while (true) {
      PathSet t;
      for (std::size_t i = 0; i < G.size(); ++i) t.push_back(choices[i][idx[i]]);
      add(canonical(std::move(t)), "S3", G);
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
      if (i == idx.size()) break;
    }

    const std::vector<PathSet> snapshot(out.members.begin(), out.members.end());
    for (std::size_t i = 0; i < G.size(); ++i)
      for (const auto& F : snapshot)
        if (range_of(F) == G[i].source()) substitute(G, i, F);
    for (const auto& M : snapshot)
      for (std::size_t i = 0; i < M.size(); ++i)
        if (M[i].source() == v) substitute(M, i, G);
  }
  return out;
}

}  // namespace

SatiatedFamily satiation_closure(const KGraph& gq, const Family& family, const Degree& cap, const Universe& universe) {
  auto closure = close_family(gq, {}, family, cap, universe);
  SatiatedFamily out{closure.members, cap, {}, std::move(closure.overflow)};
  out.satiated = closure.overflow_count ? CertifiedBool::unknown(cap) : CertifiedBool::certified_true(cap);
  return out;
}

SatiatedFamily satiation_closure(const KGraph& gq, const Family& family, const Degree& cap) {
  return satiation_closure(gq, family, cap, capped_universe(gq, cap));
}

CertifiedBool is_satiated(const KGraph& gq, const Family& family, const Degree& cap, const Universe& universe) {
  const auto closure = close_family(gq, {}, family, cap, universe);
  bool uncertified_addition = false;
  for (const auto& [produced, origin] : closure.provenance) {
    if (family.count(produced)) continue;
    if (universe.at(produced) == Certainty::True)
      return CertifiedBool::certified_false(cap, Witness{origin.first, {}, {}, {origin.second, produced}});
    uncertified_addition = true;
  }
  if (uncertified_addition || closure.overflow_count) return CertifiedBool::unknown(cap);
  return CertifiedBool::certified_true(cap);
}

CertifiedBool is_satiated(const KGraph& gq, const Family& family, const Degree& cap) {
  return is_satiated(gq, family, cap, capped_universe(gq, cap));
}

// ---------------------------------------------------------------------------
// Pairs and lattice

std::vector<IdealPair> enumerate_ideal_pairs(const KGraph& g, const Degree& cap) {
  std::vector<IdealPair> out;
  for (const auto& sh : enumerate_sat_hered(g, cap)) {
    const auto q = quotient_graph(g, sh.set);
    const auto universe = capped_universe(q.graph, cap);
    const Family restricted = strip_to_quotient(g, q, sh.set, cap);

    Family lifted_restricted;
    for (const auto& E : restricted) lifted_restricted.insert(lift_set(g, q, E));

    IdealPair base;
    base.H = sh.set;
    base.restricted = lifted_restricted;
    base.saturated = sh.saturated;
    base.satiated = is_satiated(q.graph, restricted, cap, universe).value;
    base.exact = sh.saturated == Certainty::True;
    out.push_back(base);

    std::vector<PathSet> extra;
    for (const auto& [set, status] : universe)
      if (!restricted.count(set)) extra.push_back(set);

    // Closed families above the restricted one, identified by their B part.
    std::set<std::vector<PathSet>> seen{{}};
    // Each family is closed; the flag records overflow on the way to it.
    const auto base_closure = close_family(q.graph, {}, restricted, cap, universe);
    std::deque<std::pair<Family, bool>> work{{base_closure.members, base_closure.overflow_count > 0}};
    while (!work.empty()) {
      const auto [current, overflowed] = work.front();
      work.pop_front();
      for (const auto& d : extra) {
        if (current.count(d)) continue;
        const auto closure = close_family(q.graph, current, {d}, cap, universe);
        std::vector<PathSet> B;
        for (const auto& E : closure.members)
          if (!restricted.count(E)) B.push_back(E);
        if (!seen.insert(B).second) continue;
        if (seen.size() > kMaxClosedFamilies)
          throw Error(ErrorCode::CapTooLarge, "too many candidate families above H; lower the cap");
        const bool lost = overflowed || closure.overflow_count > 0;
        work.emplace_back(closure.members, lost);

        IdealPair pair;
        pair.H = sh.set;
        pair.restricted = lifted_restricted;
        pair.saturated = sh.saturated;
        pair.satiated = lost ? Certainty::Unknown : Certainty::True;
        bool members_certified = true;
        for (const auto& E : B) {
          members_certified = members_certified && universe.at(E) == Certainty::True;
          pair.B.push_back(lift_set(g, q, E));
        }
        std::sort(pair.B.begin(), pair.B.end());
        pair.exact = sh.saturated == Certainty::True && pair.satiated == Certainty::True && members_certified;
        out.push_back(std::move(pair));
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const IdealPair& a, const IdealPair& b) {
    if (a.H != b.H) return less_vertex_set(a.H, b.H);
    if (a.B.size() != b.B.size()) return a.B.size() < b.B.size();
    return a.B < b.B;
  });
  return out;
}

bool pair_leq(const KGraph& g, const IdealPair& p1, const IdealPair& p2) {
  if (!std::includes(p2.H.begin(), p2.H.end(), p1.H.begin(), p1.H.end())) return false;
  for (const auto& E : p1.B) {
    if (contains(p2.H, range_of(E))) continue;
    PathSet stripped;
    for (const auto& p : E)
      if (!contains(p2.H, p.source())) stripped.push_back(p);
    if (stripped.empty()) return false;
    if (p2.restricted.count(stripped)) continue;
    if (std::find(p2.B.begin(), p2.B.end(), stripped) != p2.B.end()) continue;
    return false;
  }
  (void)g;
  return true;
}

IdealLattice ideal_lattice(const KGraph& g, const Degree& cap) {
  IdealLattice L{enumerate_ideal_pairs(g, cap), cap, {}, {}, {}, {}, true, true};
  const std::size_t n = L.nodes.size();
  L.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) L.leq[i][j] = pair_leq(g, L.nodes[i], L.nodes[j]);

  for (std::size_t i = 0; i < n; ++i) {
    if (!L.leq[i][i]) L.is_partial_order = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && L.leq[i][j] && L.leq[j][i]) L.is_partial_order = false;
      for (std::size_t k = 0; k < n; ++k)
        if (L.leq[i][j] && L.leq[j][k] && !L.leq[i][k]) L.is_partial_order = false;
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !L.leq[i][j]) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k)
        if (k != i && k != j && L.leq[i][k] && L.leq[k][j]) covered = false;
      if (covered) L.hasse.emplace_back(i, j);
    }

  auto extremal = [&](std::size_t i, std::size_t j, bool lower) -> std::optional<std::size_t> {
    std::vector<std::size_t> bounds;
    for (std::size_t k = 0; k < n; ++k)
      if (lower ? (L.leq[k][i] && L.leq[k][j]) : (L.leq[i][k] && L.leq[j][k])) bounds.push_back(k);
    for (std::size_t m : bounds) {
      const bool best = std::all_of(bounds.begin(), bounds.end(),
                                    [&](std::size_t b) { return lower ? L.leq[b][m] : L.leq[m][b]; });
      if (best) return m;
    }
    return std::nullopt;
  };
  L.meet.assign(n, std::vector<std::optional<std::size_t>>(n));
  L.join.assign(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      L.meet[i][j] = extremal(i, j, true);
      L.join[i][j] = extremal(i, j, false);
      if (!L.meet[i][j] || !L.join[i][j]) L.is_lattice = false;
    }
  return L;
}

}  // namespace kg
