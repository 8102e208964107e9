#include "kgraph/structure.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "kgraph/ideals.hpp"

namespace kg {

namespace {

constexpr std::size_t kClosureLimit = 100000;
constexpr std::size_t kFixpointRounds = 64;

Offset edge_degree(const KGraph& g, EdgeId e) {
  Offset d(g.rank(), 0);
  d[g.edge(e).color] = 1;
  return d;
}

Offset shifted(Offset n, const Offset& d, std::int64_t sign) {
  for (std::size_t i = 0; i < n.size(); ++i) n[i] += sign * d[i];
  return n;
}

Offset to_offset(const Degree& d) {
  Offset out;
  for (auto c : d.coords()) out.push_back(static_cast<std::int64_t>(c));
  return out;
}

bool has_edges(const KGraph& g, VertexId v) {
  for (std::size_t c = 0; c < g.rank(); ++c)
    if (!g.edges_at(v, c).empty()) return true;
  return false;
}

std::vector<std::vector<bool>> reach_matrix(const KGraph& g) {
  std::vector<std::vector<bool>> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.push_back(reachable_from(g, v));
  return out;
}

// y lies on a cycle: some edge at y has a source that reaches y.
bool on_cycle(const KGraph& g, const std::vector<std::vector<bool>>& reach, VertexId y) {
  for (std::size_t c = 0; c < g.rank(); ++c)
    for (EdgeId e : g.edges_at(y, c))
      if (reach[g.edge(e).source][y]) return true;
  return false;
}

// Shortest cycle at y, by breadth-first search from y toward sources.
Path shortest_cycle(const KGraph& g, VertexId y) {
  std::vector<EdgeId> via(g.vertex_count(), kNone);
  std::deque<VertexId> queue{y};
  std::vector<bool> seen(g.vertex_count(), false);
  EdgeId closing = kNone;
  VertexId closing_from = kNone;
  while (!queue.empty() && closing == kNone) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (std::size_t c = 0; c < g.rank() && closing == kNone; ++c)
      for (EdgeId e : g.edges_at(x, c)) {
        const VertexId s = g.edge(e).source;
        if (s == y) {
          closing = e;
          closing_from = x;
          break;
        }
        if (!seen[s]) {
          seen[s] = true;
          via[s] = e;
          queue.push_back(s);
        }
      }
  }
  std::vector<EdgeId> word{closing};
  for (VertexId x = closing_from; x != y; x = g.edge(via[x]).range) word.insert(word.begin(), via[x]);
  return g.make_path(word);
}

std::vector<VertexId> vertices_along(const KGraph& g, const Path& x) {
  std::set<VertexId> out;
  for (const auto& n : degrees_up_to(x.degree())) out.insert(g.vertex_at(x, n));
  return {out.begin(), out.end()};
}

}  // namespace

std::string format_offset(const Offset& n) {
  std::string s;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(n[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------

bool grading_valid(const KGraph& g, const Grading& grading) {
  if (grading.b.size() != g.vertex_count()) return false;
  for (const auto& b : grading.b)
    if (b.size() != g.rank()) return false;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    if (grading.b[edge.source] != shifted(grading.b[edge.range], edge_degree(g, e), 1)) return false;
  }
  return true;
}

std::optional<Grading> grading_exists(const KGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::pair<EdgeId, bool>>> incident(n);  // (edge, vertex is its range)
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    incident[g.edge(e).range].emplace_back(e, true);
    incident[g.edge(e).source].emplace_back(e, false);
  }
  Grading grading{std::vector<Offset>(n)};
  std::vector<bool> assigned(n, false);
  for (VertexId root = 0; root < n; ++root) {
    if (assigned[root]) continue;
    grading.b[root] = Offset(g.rank(), 0);
    assigned[root] = true;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (const auto& [e, at_range] : incident[x]) {
        const auto& edge = g.edge(e);
        const VertexId y = at_range ? edge.source : edge.range;
        const Offset want = shifted(grading.b[x], edge_degree(g, e), at_range ? 1 : -1);
        if (!assigned[y]) {
          grading.b[y] = want;
          assigned[y] = true;
          queue.push_back(y);
        } else if (grading.b[y] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return grading;
}

// ---------------------------------------------------------------------------

Window Window::box(std::size_t rank, std::int64_t radius) {
  return {Offset(rank, -radius), Offset(rank, radius)};
}

bool Window::contains(const Offset& n) const {
  if (n.size() != lo.size()) return false;
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] < lo[i] || n[i] > hi[i]) return false;
  return true;
}

std::vector<Offset> Window::levels() const {
  std::vector<Offset> out;
  Offset n = lo;
  while (true) {
    out.push_back(n);
    std::size_t i = n.size();
    while (i > 0) {
      --i;
      if (n[i] < hi[i]) {
        ++n[i];
        break;
      }
      n[i] = lo[i];
      if (i == 0) return out;
    }
    if (n.empty()) return out;
  }
}

std::optional<VertexId> SkewWindow::lifted_vertex(VertexId v, const Offset& n) const {
  if (!window.contains(n)) return std::nullopt;
  return graph.find_vertex(base.vertex_name(v) + "@" + format_offset(n));
}

std::optional<EdgeId> SkewWindow::lifted_edge(EdgeId e, const Offset& n) const {
  if (!window.contains(n)) return std::nullopt;
  return graph.find_edge(base.edge(e).id + "@" + format_offset(n));
}

SkewWindow skew_product_window(const KGraph& g, const Window& window) {
  if (window.lo.size() != g.rank() || window.hi.size() != g.rank())
    throw Error(ErrorCode::InvalidArgument, "window rank differs from graph rank");
  for (std::size_t i = 0; i < g.rank(); ++i)
    if (window.lo[i] > window.hi[i]) throw Error(ErrorCode::InvalidArgument, "window lower corner exceeds upper corner");

  const auto levels = window.levels();
  Skeleton sk;
  sk.rank = static_cast<std::uint32_t>(g.rank());
  Grading grading;
  for (const auto& n : levels)
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      sk.vertices.push_back(g.vertex_name(v) + "@" + format_offset(n));
      grading.b.push_back(n);
    }
  std::set<std::string> kept;
  for (const auto& n : levels)
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto& edge = g.edge(e);
      const Offset r = shifted(n, edge_degree(g, e), -1);
      if (!window.contains(r)) continue;
      EdgeSpec spec{edge.id + "@" + format_offset(n), edge.color + 1, g.vertex_name(edge.range) + "@" + format_offset(r),
                    g.vertex_name(edge.source) + "@" + format_offset(n)};
      kept.insert(spec.id);
      sk.edges.push_back(std::move(spec));
    }
  std::vector<SquareRule> squares;
  for (const auto& sq : g.squares()) {
    const Offset dg = edge_degree(g, *g.find_edge(sq.g));
    const Offset df2 = edge_degree(g, *g.find_edge(sq.f2));
    for (const auto& n : levels) {
      SquareRule lifted{sq.f + "@" + format_offset(shifted(n, dg, -1)), sq.g + "@" + format_offset(n),
                        sq.g2 + "@" + format_offset(shifted(n, df2, -1)), sq.f2 + "@" + format_offset(n)};
      if (kept.count(lifted.f) && kept.count(lifted.g) && kept.count(lifted.g2) && kept.count(lifted.f2))
        squares.push_back(std::move(lifted));
    }
  }
  return SkewWindow{g, window, KGraph(std::move(sk), std::move(squares)), std::move(grading)};
}

PathSet skew_fe_lift(const SkewWindow& w, const PathSet& E, const Offset& n) {
  PathSet out;
  for (const auto& lambda : E) {
    if (lambda.is_vertex()) {
      auto v = w.lifted_vertex(lambda.range(), n);
      if (!v) throw Error(ErrorCode::WindowNotClosed, "level " + format_offset(n) + " is outside the window");
      out.push_back(w.graph.identity(*v));
      continue;
    }
    Offset level = shifted(n, to_offset(lambda.degree()), 1);
    std::vector<EdgeId> word(lambda.edges().size());
    for (std::size_t i = word.size(); i-- > 0;) {
      const EdgeId e = lambda.edges()[i];
      auto lifted = w.lifted_edge(e, level);
      if (!lifted || !w.window.contains(shifted(level, edge_degree(w.base, e), -1)))
        throw Error(ErrorCode::WindowNotClosed,
                    "edge " + w.base.edge(e).id + " at level " + format_offset(level) + " is outside the window");
      word[i] = *lifted;
      level = shifted(level, edge_degree(w.base, e), -1);
    }
    out.push_back(w.graph.make_path(word));
  }
  return canonical(std::move(out));
}

// ---------------------------------------------------------------------------

PathSet m_closure(const KGraph& g, const std::optional<Grading>& grading, const PathSet& E) {
  if (!grading) throw Error(ErrorCode::NoGrading, "M(E) requires a grading");
  if (!grading_valid(g, *grading)) throw Error(ErrorCode::NoGrading, "supplied grading fails d(e) = b(s(e)) - b(r(e))");
  const PathSet vee = vee_closure(g, E);
  std::vector<Path> suffixes;
  for (const auto& lambda : vee)
    for (const auto& n : degrees_up_to(lambda.degree()))
      if (n != lambda.degree()) suffixes.push_back(g.suffix(lambda, n));
  suffixes = canonical(std::move(suffixes));

  std::set<Path> closed(vee.begin(), vee.end());
  std::vector<Path> work(vee.begin(), vee.end());
  while (!work.empty()) {
    const Path m = std::move(work.back());
    work.pop_back();
    for (const auto& tail : suffixes) {
      if (tail.range() != m.source()) continue;
      Path p = g.compose(m, tail);
      if (closed.insert(p).second) {
        if (closed.size() > kClosureLimit) throw Error(ErrorCode::CapTooLarge, "M(E) exceeded size limit");
        work.push_back(std::move(p));
      }
    }
  }
  return PathSet(closed.begin(), closed.end());
}

PathSet m_closure_fixpoint(const KGraph& g, const std::optional<Grading>& grading, const PathSet& E, std::size_t* rounds) {
  PathSet current = canonical(E);
  for (std::size_t i = 1; i <= kFixpointRounds; ++i) {
    PathSet next = m_closure(g, grading, current);
    if (next == current) {
      if (rounds) *rounds = i;
      return current;
    }
    current = std::move(next);
  }
  throw Error(ErrorCode::CapTooLarge, "M(E) iteration did not stabilize");
}

// ---------------------------------------------------------------------------

const char* to_string(PrefixStatus s) {
  switch (s) {
    case PrefixStatus::Extensible: return "extensible";
    case PrefixStatus::Terminal: return "terminal";
    case PrefixStatus::Unknown: return "unknown";
  }
  return "?";
}

std::vector<BoundaryPrefix> boundary_prefixes(const KGraph& g, VertexId v, const Degree& depth) {
  if (v >= g.vertex_count()) throw Error(ErrorCode::UnknownId, "vertex index out of range");
  std::map<VertexId, std::vector<PathSet>> certified;
  auto certified_at = [&](VertexId x) -> const std::vector<PathSet>& {
    auto it = certified.find(x);
    if (it != certified.end()) return it->second;
    std::vector<PathSet> sets;
    const auto family = fe_sets(g, x, depth, true);
    for (const auto& m : family.members.at(x))
      if (m.status == Certainty::True) sets.push_back(m.set);
    return certified.emplace(x, std::move(sets)).first->second;
  };

  std::vector<BoundaryPrefix> out;
  for (const auto& lambda : g.paths_up_to(v, depth)) {
    bool refuted = false;
    for (const auto& n : degrees_up_to(lambda.degree())) {
      const Path tail = g.suffix(lambda, n);
      for (const auto& E : certified_at(tail.range()))
        if (ext(g, tail, E).empty()) refuted = true;
      if (refuted) break;
    }
    if (refuted) continue;
    PrefixStatus status = PrefixStatus::Unknown;
    if (!has_edges(g, lambda.source()))
      status = PrefixStatus::Terminal;
    else if (!certified_at(lambda.source()).empty())
      status = PrefixStatus::Extensible;
    out.push_back({lambda, status, depth});
  }
  return out;
}

CertifiedBool cofinality_check(const KGraph& g, const Degree& cap) {
  const std::size_t n = g.vertex_count();
  const auto reach = reach_matrix(g);
  auto never_reaching = [&](const std::vector<VertexId>& along) {
    for (VertexId w = 0; w < n; ++w)
      if (std::none_of(along.begin(), along.end(), [&](VertexId y) { return reach[w][y]; })) return std::optional(w);
    return std::optional<VertexId>();
  };

  // A path into a vertex with no edges is a boundary path.
  for (VertexId u = 0; u < n; ++u) {
    if (has_edges(g, u) || !never_reaching({u})) continue;
    std::optional<std::pair<Path, VertexId>> best;
    for (VertexId r = 0; r < n; ++r)
      for (const auto& x : g.paths_up_to(r, cap)) {
        if (x.source() != u) continue;
        auto w = never_reaching(vertices_along(g, x));
        if (!w) continue;
        if (!best || x.degree().total() > best->first.degree().total()) best.emplace(x, *w);
      }
    return CertifiedBool::certified_false(cap, Witness{"terminal-boundary-path", {best->second}, {best->first}, {}});
  }

  if (g.rank() == 1) {
    for (VertexId y = 0; y < n; ++y) {
      if (!on_cycle(g, reach, y)) continue;
      const Path mu = shortest_cycle(g, y);
      if (auto w = never_reaching(vertices_along(g, mu)))
        return CertifiedBool::certified_false(cap, Witness{"periodic-boundary-path", {*w}, {mu}, {}});
    }
  }

  // Any boundary path ends at, or keeps revisiting, one of these vertices.
  std::vector<VertexId> required;
  for (VertexId y = 0; y < n; ++y) {
    if (!has_edges(g, y) || on_cycle(g, reach, y)) {
      required.push_back(y);
      continue;
    }
    PathSet all;
    for (auto& p : g.paths_up_to(y, cap))
      if (!p.is_vertex()) all.push_back(std::move(p));
    if (!is_exhaustive(g, y, all, cap).is_true()) required.push_back(y);
  }
  for (VertexId v = 0; v < n; ++v)
    for (VertexId y : required)
      if (!reach[v][y]) return CertifiedBool::unknown(cap);
  return CertifiedBool::certified_true(cap);
}

std::vector<CertifiedBool> find_loop_with_entrance(const KGraph& g, const Degree& cap) {
  const std::size_t n = g.vertex_count();
  const auto reach = reach_matrix(g);

  std::vector<std::optional<Witness>> local(n);
  for (VertexId x = 0; x < n; ++x) {
    for (const auto& mu : g.paths_up_to(x, cap)) {
      if (mu.is_vertex() || mu.source() != x) continue;
      for (const auto& alpha : g.paths_up_to(x, mu.degree()))
        if (g.prefix(mu, alpha.degree()) != alpha) {
          local[x] = Witness{"loop-with-entrance", {x}, {mu, alpha}, {}};
          break;
        }
      if (local[x]) break;
    }
  }

  std::vector<CertifiedBool> out;
  for (VertexId v = 0; v < n; ++v) {
    std::optional<Witness> found;
    bool branching = false, cyclic_branch = false;
    for (VertexId x = 0; x < n; ++x) {
      if (!reach[v][x]) continue;
      if (!found && local[x]) found = local[x];
      std::size_t edges = 0;
      for (std::size_t c = 0; c < g.rank(); ++c) {
        edges += g.edges_at(x, c).size();
        if (g.edges_at(x, c).size() > 1) branching = true;
      }
      if (edges > 1 && on_cycle(g, reach, x)) cyclic_branch = true;
    }
    if (found)
      out.push_back(CertifiedBool::certified_true(cap, *found));
    else if (!branching)
      out.push_back(CertifiedBool::certified_false(cap, Witness{"unique-paths-of-each-degree", {v}, {}, {}}));
    else if (g.rank() == 1 && !cyclic_branch)
      out.push_back(CertifiedBool::certified_false(cap, Witness{"no-branching-cycle", {v}, {}, {}}));
    else
      out.push_back(CertifiedBool::unknown(cap));
  }
  return out;
}

// ---------------------------------------------------------------------------

StructureReport structure_report(const KGraph& g, const Degree& cap, bool assumed_condition_C) {
  StructureReport r;
  r.cofinal = cofinality_check(g, cap);
  r.assumed_condition_C = assumed_condition_C;

  const auto loops = find_loop_with_entrance(g, cap);
  r.all_vertices_reach_loop_with_entrance = CertifiedBool::certified_true(cap);
  for (VertexId v = 0; v < loops.size(); ++v) {
    if (loops[v].is_false()) {
      r.all_vertices_reach_loop_with_entrance = CertifiedBool::certified_false(cap, Witness{"vertex-without-loop", {v}, {}, {}});
      break;
    }
    if (loops[v].is_unknown()) r.all_vertices_reach_loop_with_entrance = CertifiedBool::unknown(cap);
  }

  try {
    r.lattice_size = ideal_lattice(g, cap).nodes.size();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapTooLarge) throw;
  }

  const bool cofinal = r.cofinal.is_true();
  const bool loops_everywhere = r.all_vertices_reach_loop_with_entrance.is_true();
  if (r.cofinal.is_false())
    r.simple = "no";
  else if (!assumed_condition_C)
    r.simple = "not-evaluated";
  else
    r.simple = cofinal ? "conditional-yes" : "not-established";

  if (!assumed_condition_C)
    r.purely_infinite = "not-evaluated";
  else
    r.purely_infinite = cofinal && loops_everywhere ? "conditional-yes" : "not-established";

  if (r.cofinal.is_false())
    r.kp_candidate = "no";
  else if (!assumed_condition_C)
    r.kp_candidate = "not-evaluated";
  else
    r.kp_candidate = r.simple == "conditional-yes" && r.purely_infinite == "conditional-yes" ? "conditional-yes" : "not-established";
  return r;
}

}  // namespace kg
