#include "kgraph/kgraph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kg {

const char* to_string(Certainty c) {
  switch (c) {
    case Certainty::True: return "true";
    case Certainty::False: return "false";
    case Certainty::Unknown: return "unknown-at-cap";
  }
  return "unknown-at-cap";
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::IncompleteSquare: return "incomplete-square";
    case ViolationKind::DuplicateSquare: return "duplicate-square";
    case ViolationKind::CubeInconsistent: return "cube-inconsistent";
    case ViolationKind::DanglingEdge: return "dangling-edge";
    case ViolationKind::MalformedSquare: return "malformed-square";
  }
  return "unknown";
}

std::strong_ordering Path::operator<=>(const Path& other) const {
  if (auto c = degree_ <=> other.degree_; c != 0) return c;
  if (auto c = std::lexicographical_compare_three_way(edges_.begin(), edges_.end(), other.edges_.begin(),
                                                      other.edges_.end());
      c != 0)
    return c;
  if (auto c = range_ <=> other.range_; c != 0) return c;
  return source_ <=> other.source_;
}

std::vector<Path> canonical(std::vector<Path> paths) {
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  return paths;
}

namespace {

bool valid_identifier(const std::string& id) {
  if (id.empty()) return false;
  for (char c : id)
    if (c == '.' || c == '#' || c == ':' || c == '~' || static_cast<unsigned char>(c) <= ' ') return false;
  return id != "<-";
}

}  // namespace

KGraph::KGraph(Skeleton skeleton, std::vector<SquareRule> squares)
    : skeleton_(std::move(skeleton)), squares_(std::move(squares)), rank_(skeleton_.rank) {
  if (rank_ == 0) throw Error(ErrorCode::InvalidArgument, "rank must be at least 1");
  for (const auto& name : skeleton_.vertices) {
    if (!valid_identifier(name)) throw Error(ErrorCode::InvalidArgument, "invalid vertex id '" + name + "'");
    if (!vertex_index_.emplace(name, static_cast<VertexId>(vertices_.size())).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate vertex id '" + name + "'");
    vertices_.push_back(name);
  }
  at_.assign(vertices_.size(), std::vector<std::vector<EdgeId>>(rank_));
  for (const auto& spec : skeleton_.edges) {
    if (!valid_identifier(spec.id)) throw Error(ErrorCode::InvalidArgument, "invalid edge id '" + spec.id + "'");
    if (vertex_index_.count(spec.id) || edge_index_.count(spec.id))
      throw Error(ErrorCode::InvalidArgument, "duplicate id '" + spec.id + "'");
    if (spec.color < 1 || spec.color > rank_)
      throw Error(ErrorCode::InvalidArgument, "edge '" + spec.id + "' has color outside 1.." + std::to_string(rank_));
    Edge e{spec.id, spec.color - 1, kNone, kNone};
    if (auto it = vertex_index_.find(spec.range); it != vertex_index_.end()) e.range = it->second;
    if (auto it = vertex_index_.find(spec.source); it != vertex_index_.end()) e.source = it->second;
    if (e.range == kNone || e.source == kNone) dangling_ = true;
    const auto id = static_cast<EdgeId>(edges_.size());
    edge_index_.emplace(spec.id, id);
    if (e.range != kNone && e.source != kNone) at_[e.range][e.color].push_back(id);
    edges_.push_back(std::move(e));
  }
  for (const auto& sq : squares_) {
    EdgeId ids[4];
    const std::string* names[4] = {&sq.f, &sq.g, &sq.g2, &sq.f2};
    for (int i = 0; i < 4; ++i) {
      auto it = edge_index_.find(*names[i]);
      if (it == edge_index_.end())
        throw Error(ErrorCode::UnknownId, "square references unknown edge '" + *names[i] + "'");
      ids[i] = it->second;
    }
    partner_.try_emplace(pair_key(ids[0], ids[1]), ids[2], ids[3]);
    partner_.try_emplace(pair_key(ids[2], ids[3]), ids[0], ids[1]);
  }
}

std::optional<VertexId> KGraph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> KGraph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

VertexId KGraph::vertex_id(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw Error(ErrorCode::UnknownId, "unknown vertex '" + std::string(name) + "'");
}

std::span<const EdgeId> KGraph::edges_at(VertexId v, std::size_t color) const { return at_.at(v).at(color); }

std::optional<std::pair<EdgeId, EdgeId>> KGraph::square_partner(EdgeId f, EdgeId g) const {
  auto it = partner_.find(pair_key(f, g));
  if (it == partner_.end()) return std::nullopt;
  return it->second;
}

Path KGraph::identity(VertexId v) const {
  if (v >= vertices_.size()) throw Error(ErrorCode::UnknownId, "vertex index out of range");
  return Path(v, v, zero(), {});
}

Path KGraph::edge_path(EdgeId e) const {
  const auto& ed = edges_.at(e);
  return Path(ed.range, ed.source, Degree::unit(rank_, ed.color), {e});
}

std::vector<EdgeId> KGraph::reorder(std::vector<EdgeId> word, std::span<const std::uint32_t> colors) const {
  for (std::size_t i = 0; i < colors.size(); ++i) {
    std::size_t j = i;
    while (j < word.size() && edges_[word[j]].color != colors[i]) ++j;
    if (j == word.size()) throw Error(ErrorCode::Internal, "color word mismatch during reordering");
    for (std::size_t t = j; t > i; --t) {
      auto swapped = square_partner(word[t - 1], word[t]);
      if (!swapped)
        throw Error(ErrorCode::Validation,
                    "no square for pair (" + edges_[word[t - 1]].id + ", " + edges_[word[t]].id + ")");
      word[t - 1] = swapped->first;
      word[t] = swapped->second;
    }
  }
  return word;
}

Path KGraph::make_path(std::span<const EdgeId> edges) const {
  if (edges.empty()) throw Error(ErrorCode::InvalidArgument, "empty edge sequence has no range");
  Degree d(rank_);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges_.at(edges[i]);
    if (e.range == kNone || e.source == kNone)
      throw Error(ErrorCode::Validation, "edge '" + e.id + "' has a dangling endpoint");
    if (i + 1 < edges.size() && e.source != edges_.at(edges[i + 1]).range)
      throw Error(ErrorCode::NonComposable,
                  "edges '" + e.id + "' and '" + edges_[edges[i + 1]].id + "' are not composable");
    ++d[e.color];
  }
  std::vector<std::uint32_t> colors;
  colors.reserve(edges.size());
  for (std::size_t c = 0; c < rank_; ++c) colors.insert(colors.end(), d[c], static_cast<std::uint32_t>(c));
  auto word = reorder(std::vector<EdgeId>(edges.begin(), edges.end()), colors);
  return Path(edges_[edges.front()].range, edges_[edges.back()].source, std::move(d), std::move(word));
}

Path KGraph::compose(const Path& p, const Path& q) const {
  if (p.source() != q.range())
    throw Error(ErrorCode::NonComposable, "s(p) = " + vertex_name(p.source()) + " but r(q) = " + vertex_name(q.range()));
  if (p.is_vertex()) return q;
  if (q.is_vertex()) return p;
  std::vector<EdgeId> word(p.edges().begin(), p.edges().end());
  word.insert(word.end(), q.edges().begin(), q.edges().end());
  return make_path(word);
}

std::pair<Path, Path> KGraph::factor(const Path& p, const Degree& m) const {
  if (!m.leq(p.degree())) throw Error(ErrorCode::BoundsViolated, "factor degree exceeds d(p)");
  const Degree rest = p.degree() - m;
  std::vector<std::uint32_t> colors;
  for (std::size_t c = 0; c < rank_; ++c) colors.insert(colors.end(), m[c], static_cast<std::uint32_t>(c));
  const std::size_t split = colors.size();
  for (std::size_t c = 0; c < rank_; ++c) colors.insert(colors.end(), rest[c], static_cast<std::uint32_t>(c));
  auto word = reorder(std::vector<EdgeId>(p.edges().begin(), p.edges().end()), colors);
  std::vector<EdgeId> head(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(split));
  std::vector<EdgeId> tail(word.begin() + static_cast<std::ptrdiff_t>(split), word.end());
  const VertexId mid = head.empty() ? p.range() : edges_[head.back()].source;
  return {Path(p.range(), mid, m, std::move(head)), Path(mid, p.source(), rest, std::move(tail))};
}

Path KGraph::prefix(const Path& p, const Degree& m) const { return factor(p, m).first; }

Path KGraph::suffix(const Path& p, const Degree& m) const { return factor(p, m).second; }

Path KGraph::segment(const Path& p, const Degree& m, const Degree& n) const {
  if (!m.leq(n) || !n.leq(p.degree()))
    throw Error(ErrorCode::BoundsViolated, "segment requires m <= n <= d(p)");
  return suffix(prefix(p, n), m);
}

VertexId KGraph::vertex_at(const Path& p, const Degree& n) const { return prefix(p, n).source(); }

bool KGraph::has_prefix(const Path& p, const Path& q) const {
  if (p.range() != q.range() || !q.degree().leq(p.degree())) return false;
  if (q.is_vertex()) return true;
  return prefix(p, q.degree()) == q;
}

std::vector<Path> KGraph::paths_of_degree(VertexId v, const Degree& n) const {
  if (v >= vertices_.size()) throw Error(ErrorCode::UnknownId, "vertex index out of range");
  std::vector<Path> out;
  if (n.is_zero()) {
    out.push_back(identity(v));
    return out;
  }
  std::vector<std::uint32_t> colors;
  for (std::size_t c = 0; c < rank_; ++c) colors.insert(colors.end(), n[c], static_cast<std::uint32_t>(c));
  std::vector<EdgeId> word;
  // Color-ascending composable words are exactly the normal forms.
  auto extend = [&](auto&& self, VertexId at, std::size_t pos) -> void {
    if (pos == colors.size()) {
      out.push_back(Path(v, at, n, word));
      return;
    }
    for (EdgeId e : at_[at][colors[pos]]) {
      word.push_back(e);
      self(self, edges_[e].source, pos + 1);
      word.pop_back();
    }
  };
  extend(extend, v, 0);
  return out;
}

std::vector<Path> KGraph::paths_up_to(VertexId v, const Degree& cap) const {
  std::vector<Path> out;
  for (const auto& n : degrees_up_to(cap)) {
    auto layer = paths_of_degree(v, n);
    out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }
  return out;
}

std::string KGraph::format(const Path& p) const {
  if (p.is_vertex()) return vertex_name(p.range());
  std::string s;
  for (std::size_t i = 0; i < p.edges().size(); ++i) {
    if (i) s += '.';
    s += edges_[p.edges()[i]].id;
  }
  return s;
}

Path KGraph::parse_path(std::string_view text) const {
  if (auto v = find_vertex(text)) return identity(*v);
  std::vector<EdgeId> word;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto dot = text.find('.', start);
    auto token = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    auto e = find_edge(token);
    if (!e) throw Error(ErrorCode::UnknownId, "unknown edge '" + std::string(token) + "' in path '" + std::string(text) + "'");
    word.push_back(*e);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return make_path(word);
}

// ---------------------------------------------------------------------------

ValidationReport validate_kgraph(const KGraph& g) {
  ValidationReport report;
  auto& out = report.violations;
  const auto& edges = g.edges();
  for (const auto& e : edges)
    if (e.range == kNone || e.source == kNone) out.push_back({ViolationKind::DanglingEdge, {e.id}});

  auto usable = [&](EdgeId e) { return edges[e].range != kNone && edges[e].source != kNone; };
  std::map<std::pair<EdgeId, EdgeId>, int> sides;
  for (const auto& sq : g.squares()) {
    const EdgeId f = *g.find_edge(sq.f), gg = *g.find_edge(sq.g), g2 = *g.find_edge(sq.g2), f2 = *g.find_edge(sq.f2);
    if (!usable(f) || !usable(gg) || !usable(g2) || !usable(f2)) continue;
    const auto &F = edges[f], &G = edges[gg], &G2 = edges[g2], &F2 = edges[f2];
    const bool well_formed = F.color != G.color && F.source == G.range && G2.source == F2.range &&
                             F.range == G2.range && G.source == F2.source && F.color == F2.color &&
                             G.color == G2.color;
    if (!well_formed) {
      out.push_back({ViolationKind::MalformedSquare, {sq.f, sq.g, sq.g2, sq.f2}});
      continue;
    }
    ++sides[{f, gg}];
    ++sides[{g2, f2}];
  }

  bool squares_ok = true;
  for (EdgeId f = 0; f < edges.size(); ++f) {
    if (!usable(f)) continue;
    for (std::size_t c = 0; c < g.rank(); ++c) {
      if (c == edges[f].color) continue;
      for (EdgeId gg : g.edges_at(edges[f].source, c)) {
        auto it = sides.find({f, gg});
        const int n = it == sides.end() ? 0 : it->second;
        if (n == 0) {
          out.push_back({ViolationKind::IncompleteSquare, {edges[f].id, edges[gg].id}});
          squares_ok = false;
        } else if (n > 1) {
          out.push_back({ViolationKind::DuplicateSquare, {edges[f].id, edges[gg].id}});
          squares_ok = false;
        }
      }
    }
  }

  if (squares_ok && g.rank() >= 3) {
    auto swap_at = [&](std::vector<EdgeId> w, std::size_t i) {
      auto p = g.square_partner(w[i], w[i + 1]);
      w[i] = p->first;
      w[i + 1] = p->second;
      return w;
    };
    for (EdgeId a = 0; a < edges.size(); ++a) {
      if (!usable(a)) continue;
      for (std::size_t cb = 0; cb < g.rank(); ++cb) {
        if (cb == edges[a].color) continue;
        for (EdgeId b : g.edges_at(edges[a].source, cb)) {
          for (std::size_t cc = 0; cc < g.rank(); ++cc) {
            if (cc == edges[a].color || cc == cb) continue;
            for (EdgeId c : g.edges_at(edges[b].source, cc)) {
              const std::vector<EdgeId> w{a, b, c};
              const auto left = swap_at(swap_at(swap_at(w, 0), 1), 0);
              const auto right = swap_at(swap_at(swap_at(w, 1), 0), 1);
              if (left != right) out.push_back({ViolationKind::CubeInconsistent, {edges[a].id, edges[b].id, edges[c].id}});
            }
          }
        }
      }
    }
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  report.ok = out.empty();
  return report;
}

}  // namespace kg
