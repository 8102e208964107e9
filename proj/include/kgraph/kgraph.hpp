#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kgraph/degree.hpp"
#include "kgraph/error.hpp"

namespace kg {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// ---------------------------------------------------------------------------
// Presentation data
// ---------------------------------------------------------------------------

struct EdgeSpec {
  std::string id;
  std::uint32_t color = 1;  // 1..k as written in the text format
  std::string range;
  std::string source;
};

struct Skeleton {
  std::uint32_t rank = 1;
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
};

/// Asserts f g = g2 f2, where s(f) = r(g) and s(g2) = r(f2).
struct SquareRule {
  std::string f, g, g2, f2;
  bool operator==(const SquareRule&) const = default;
};

// ---------------------------------------------------------------------------
// Paths
// ---------------------------------------------------------------------------

/// A morphism stored in color-ascending normal form. Only KGraph builds
/// non-trivial paths, so every Path value is normalized.
class Path {
 public:
  Path() = default;

  VertexId range() const { return range_; }
  VertexId source() const { return source_; }
  const Degree& degree() const { return degree_; }
  std::span<const EdgeId> edges() const { return edges_; }
  bool is_vertex() const { return edges_.empty(); }

  /// Canonical order: degree, then edge sequence, then range.
  std::strong_ordering operator<=>(const Path& other) const;
  bool operator==(const Path& other) const = default;

 private:
  friend class KGraph;
  Path(VertexId r, VertexId s, Degree d, std::vector<EdgeId> e)
      : range_(r), source_(s), degree_(std::move(d)), edges_(std::move(e)) {}

  VertexId range_ = kNone;
  VertexId source_ = kNone;
  Degree degree_;
  std::vector<EdgeId> edges_;
};

// ---------------------------------------------------------------------------
// Certified answers
// ---------------------------------------------------------------------------

enum class Certainty { True, False, Unknown };
const char* to_string(Certainty c);

/// Evidence attached to a certified answer. Which fields are populated
/// depends on the producing procedure; `kind` names it.
struct Witness {
  std::string kind;
  std::vector<VertexId> vertices;
  std::vector<Path> paths;
  std::vector<std::vector<Path>> sets;
};

struct CertifiedBool {
  Certainty value = Certainty::Unknown;
  std::optional<Witness> witness;
  Degree cap;

  static CertifiedBool certified_true(Degree cap, std::optional<Witness> w = {}) {
    return {Certainty::True, std::move(w), std::move(cap)};
  }
  static CertifiedBool certified_false(Degree cap, Witness w) {
    return {Certainty::False, std::move(w), std::move(cap)};
  }
  static CertifiedBool unknown(Degree cap) { return {Certainty::Unknown, std::nullopt, std::move(cap)}; }

  bool is_true() const { return value == Certainty::True; }
  bool is_false() const { return value == Certainty::False; }
  bool is_unknown() const { return value == Certainty::Unknown; }
};

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

enum class ViolationKind { IncompleteSquare, DuplicateSquare, CubeInconsistent, DanglingEdge, MalformedSquare };
const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<std::string> ids;
  auto operator<=>(const Violation&) const = default;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

// ---------------------------------------------------------------------------
// KGraph
// ---------------------------------------------------------------------------

/// A finitely presented k-graph: a k-colored skeleton plus the commuting
/// squares that identify the two factorizations of each bi-colored path.
/// Immutable once built.
class KGraph {
 public:
  struct Edge {
    std::string id;
    std::uint32_t color;  // 0-based
    VertexId range;
    VertexId source;
  };

  /// Throws Error(InvalidArgument/UnknownId) when ids collide, colors fall
  /// outside 1..k, or a square names an unknown edge. Edges with unknown
  /// endpoints are kept and reported by validate_kgraph.
  KGraph(Skeleton skeleton, std::vector<SquareRule> squares);

  std::size_t rank() const { return rank_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Skeleton& skeleton() const { return skeleton_; }
  const std::vector<SquareRule>& squares() const { return squares_; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;
  VertexId vertex_id(std::string_view name) const;

  /// Edges e with r(e) = v and the given 0-based color.
  std::span<const EdgeId> edges_at(VertexId v, std::size_t color) const;

  /// Partner of the bi-colored composable pair (f, g) under the squares.
  std::optional<std::pair<EdgeId, EdgeId>> square_partner(EdgeId f, EdgeId g) const;

  bool has_dangling_edges() const { return dangling_; }

  // --- path arithmetic -----------------------------------------------------

  Path identity(VertexId v) const;
  Path edge_path(EdgeId e) const;
  /// Normalizes an arbitrary composable edge sequence. Throws NonComposable.
  Path make_path(std::span<const EdgeId> edges) const;
  Path compose(const Path& p, const Path& q) const;
  /// Unique (mu, nu) with p = mu nu and d(mu) = m.
  std::pair<Path, Path> factor(const Path& p, const Degree& m) const;
  /// p(m, n). Throws BoundsViolated unless m <= n <= d(p).
  Path segment(const Path& p, const Degree& m, const Degree& n) const;
  /// p(0, m).
  Path prefix(const Path& p, const Degree& m) const;
  /// p(m, d(p)).
  Path suffix(const Path& p, const Degree& m) const;
  /// Vertex p(n).
  VertexId vertex_at(const Path& p, const Degree& n) const;
  /// True iff p = q p' for some p'.
  bool has_prefix(const Path& p, const Path& q) const;

  std::vector<Path> paths_of_degree(VertexId v, const Degree& n) const;
  std::vector<Path> paths_up_to(VertexId v, const Degree& cap) const;

  /// Reorders an edge word to the given color word using square swaps.
  std::vector<EdgeId> reorder(std::vector<EdgeId> word, std::span<const std::uint32_t> colors) const;

  // --- naming --------------------------------------------------------------

  /// "b.r" for non-trivial paths, the vertex id for identities.
  std::string format(const Path& p) const;
  /// Accepts a vertex id or edge ids joined by '.', in any composable order.
  Path parse_path(std::string_view text) const;

  Degree zero() const { return Degree(rank_); }

 private:
  static std::uint64_t pair_key(EdgeId f, EdgeId g) { return (std::uint64_t(f) << 32) | g; }

  Skeleton skeleton_;
  std::vector<SquareRule> squares_;
  std::size_t rank_;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  std::vector<std::vector<std::vector<EdgeId>>> at_;  // [vertex][color]
  std::unordered_map<std::uint64_t, std::pair<EdgeId, EdgeId>> partner_;
  bool dangling_ = false;
};

/// Checks completeness and uniqueness of the squares and, for k >= 3,
/// cube consistency. Violations are sorted.
ValidationReport validate_kgraph(const KGraph& g);

/// Sorted, duplicate-free copy.
std::vector<Path> canonical(std::vector<Path> paths);

}  // namespace kg
