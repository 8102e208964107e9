#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kgraph/alignment.hpp"
#include "kgraph/kgraph.hpp"

namespace kg {

/// Integer k-vector, used for grading values and skew-product levels.
using Offset = std::vector<std::int64_t>;

std::string format_offset(const Offset& n);

// ---------------------------------------------------------------------------
// Gradings
// ---------------------------------------------------------------------------

/// b indexed by vertex id, with d(e) = b(s(e)) - b(r(e)) for every edge.
struct Grading {
  std::vector<Offset> b;
};

bool grading_valid(const KGraph& g, const Grading& grading);

/// Potentials by breadth-first search over the undirected skeleton, rooted at
/// 0 on the smallest vertex of each component. Absent iff some undirected
/// cycle has nonzero degree sum.
std::optional<Grading> grading_exists(const KGraph& g);

// ---------------------------------------------------------------------------
// Skew products
// ---------------------------------------------------------------------------

/// The box of levels lo <= n <= hi.
struct Window {
  Offset lo, hi;

  static Window box(std::size_t rank, std::int64_t radius);
  bool contains(const Offset& n) const;
  std::vector<Offset> levels() const;
};

/// Finite piece of the skew product: vertices (v, n) named "v@n", edges
/// (e, n) named "e@n" with source (s(e), n) and range (r(e), n - d(e)).
/// Edges whose range level falls outside the window are left out.
struct SkewWindow {
  KGraph base;
  Window window;
  KGraph graph;
  /// b(v, n) = n.
  Grading grading;

  std::optional<VertexId> lifted_vertex(VertexId v, const Offset& n) const;
  std::optional<EdgeId> lifted_edge(EdgeId e, const Offset& n) const;
};

/// Throws InvalidArgument for a window of the wrong rank or with lo > hi.
SkewWindow skew_product_window(const KGraph& g, const Window& window);

/// E x {n} = {(lambda, n + d(lambda))}: the lifted paths start at (r(E), n).
/// Throws WindowNotClosed when a lifted edge is outside the window.
PathSet skew_fe_lift(const SkewWindow& w, const PathSet& E, const Offset& n);

// ---------------------------------------------------------------------------
// M(E)
// ---------------------------------------------------------------------------

/// Products lambda_1 lambda_2(n_2, d(lambda_2)) ... lambda_m(n_m, d(lambda_m))
/// with every lambda_i in the vee closure of E. Throws NoGrading when the
/// grading is absent or fails the edge identity, CapTooLarge past the size
/// limit.
PathSet m_closure(const KGraph& g, const std::optional<Grading>& grading, const PathSet& E);

/// Iterates E -> M(E) to a fixed point. `rounds` receives the iteration count.
PathSet m_closure_fixpoint(const KGraph& g, const std::optional<Grading>& grading, const PathSet& E,
                           std::size_t* rounds = nullptr);

// ---------------------------------------------------------------------------
// Boundary paths, cofinality, loops
// ---------------------------------------------------------------------------

enum class PrefixStatus { Extensible, Terminal, Unknown };
const char* to_string(PrefixStatus s);

struct BoundaryPrefix {
  Path path;
  PrefixStatus status = PrefixStatus::Unknown;
  Degree depth;
};

/// Paths of degree <= depth at v that avoid no certified exhaustive set met
/// along the way. Terminal: the source has no edges, so the path is itself a
/// boundary path. Unknown: the source has edges but no certified exhaustive
/// set within depth.
std::vector<BoundaryPrefix> boundary_prefixes(const KGraph& g, VertexId v, const Degree& depth);

/// False with witness (x, w) when x is a boundary path (a path into a vertex
/// with no edges, or a cycle repeated forever in a 1-graph) and w reaches no
/// vertex of x. True when every vertex reaches every vertex that lies on a
/// cycle or can end a finite boundary path.
CertifiedBool cofinality_check(const KGraph& g, const Degree& cap);

/// Per vertex: True with witness (mu, alpha) when a loop with an entrance of
/// degree <= cap is reachable. False when every reachable vertex has at most
/// one edge of each color, or, for 1-graphs, when no reachable cycle has a
/// vertex with two edges.
std::vector<CertifiedBool> find_loop_with_entrance(const KGraph& g, const Degree& cap);

struct StructureReport {
  CertifiedBool cofinal;
  CertifiedBool all_vertices_reach_loop_with_entrance;
  std::optional<std::size_t> lattice_size;
  bool assumed_condition_C = false;
  /// "conditional-yes", "no", "not-established" or "not-evaluated".
  std::string simple, purely_infinite, kp_candidate;
};

StructureReport structure_report(const KGraph& g, const Degree& cap, bool assumed_condition_C);

}  // namespace kg
