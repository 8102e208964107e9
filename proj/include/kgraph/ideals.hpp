#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "kgraph/alignment.hpp"
#include "kgraph/kgraph.hpp"

namespace kg {

/// Sorted, duplicate-free vertex ids.
using VertexSet = std::vector<VertexId>;

VertexSet make_vertex_set(std::vector<VertexId> vertices);
bool contains(const VertexSet& set, VertexId v);

/// Vertices w with v Lambda w nonempty (including v).
std::vector<bool> reachable_from(const KGraph& g, VertexId v);

// ---------------------------------------------------------------------------
// Hereditary and saturated sets
// ---------------------------------------------------------------------------

/// Every edge with range in H has its source in H. Throws UnknownId.
bool is_hereditary(const KGraph& g, const VertexSet& H);

/// Least hereditary superset, by edge reachability toward sources.
VertexSet hereditary_closure(const KGraph& g, const VertexSet& G);

/// Bounded saturation test of a hereditary H.
///
/// For each v outside H:
///  - v is certified not to be forced into H when some vertex reachable from
///    v cannot reach H (then no set landing in H is exhaustive at v);
///  - otherwise the largest candidate v Lambda^{<= cap} H is tested; if it is
///    certified exhaustive, an inclusion-minimal exhaustive subset is the
///    witness (v, F) that H is not saturated.
/// Throws NotHereditary.
CertifiedBool is_saturated(const KGraph& g, const VertexSet& H, const Degree& cap);

struct SaturationResult {
  VertexSet set;
  /// True when every vertex left out is certified not to belong.
  CertifiedBool exact;
};

/// Least fixed point of adding vertices v that admit a certified exhaustive
/// F in v Lambda^{<= cap} G'.
SaturationResult saturation(const KGraph& g, const VertexSet& G, const Degree& cap);

struct SatHeredSet {
  VertexSet set;
  Certainty saturated;  // True or Unknown
};

/// Hereditary sets whose saturation test is not certified false, in
/// (size, lexicographic) order. Includes the empty set and all vertices.
std::vector<SatHeredSet> enumerate_sat_hered(const KGraph& g, const Degree& cap);

// ---------------------------------------------------------------------------
// Quotients and restricted families
// ---------------------------------------------------------------------------

/// The sub-k-graph of paths whose source avoids H. Paths carry over by
/// edge id; `lift` and `restrict` translate between the two graphs.
struct QuotientGraph {
  KGraph graph;
  std::vector<VertexId> parent_vertex;
  std::vector<EdgeId> parent_edge;

  Path lift(const KGraph& parent, const Path& p) const;
  /// The same morphism in the quotient, if its source lies outside H.
  std::optional<Path> restrict(const KGraph& parent, const Path& p) const;
};

/// Throws NotHereditary.
QuotientGraph quotient_graph(const KGraph& g, const VertexSet& H);

/// A family of finite exhaustive sets, each identified by its member paths.
using Family = std::set<PathSet>;

/// The capped exhaustive candidates of a graph, with their certificate.
using Universe = std::map<PathSet, Certainty>;
Universe capped_universe(const KGraph& g, const Degree& cap);

struct SatiatedFamily {
  Family members;
  Degree cap;
  CertifiedBool satiated;
  /// Substitution products that left the capped universe.
  std::vector<PathSet> overflow;
};

/// {E \ EH : E a capped exhaustive set of g}, expressed on the quotient.
/// `satiated` is the closure test of the result on the quotient, Unknown when
/// the quotient's universe is past the closure limit.
SatiatedFamily restricted_fe_family(const KGraph& g, const VertexSet& H, const Degree& cap);

/// Closure under supersets, extensions, truncations and single-path
/// substitutions inside the capped universe of gq. Throws CapTooLarge when the
/// universe has more than 256 sets.
SatiatedFamily satiation_closure(const KGraph& gq, const Family& family, const Degree& cap);
SatiatedFamily satiation_closure(const KGraph& gq, const Family& family, const Degree& cap, const Universe& universe);

/// True when the closure adds nothing; False with the added set as witness
/// when the addition is a certified exhaustive set; Unknown when the only
/// additions are uncertified or a substitution leaves the cap.
CertifiedBool is_satiated(const KGraph& gq, const Family& family, const Degree& cap);
CertifiedBool is_satiated(const KGraph& gq, const Family& family, const Degree& cap, const Universe& universe);

// ---------------------------------------------------------------------------
// Ideal pairs and their lattice
// ---------------------------------------------------------------------------

/// Index (H, B) of a gauge-invariant ideal. Path sets use the parent graph's
/// ids; `restricted` holds the capped restricted family for H.
struct IdealPair {
  VertexSet H;
  std::vector<PathSet> B;
  Family restricted;
  Certainty saturated = Certainty::Unknown;
  Certainty satiated = Certainty::Unknown;
  /// All certificates True.
  bool exact = false;
};

/// Pairs sorted by (|H|, H, B). Throws CapTooLarge past the closure limit or
/// past 256 candidate families above one H.
std::vector<IdealPair> enumerate_ideal_pairs(const KGraph& g, const Degree& cap);

/// (H1, B1) below (H2, B2): H1 within H2, and each E in B1 with r(E) outside
/// H2 loses its H2-sourced paths into the restricted family of H2 or B2.
bool pair_leq(const KGraph& g, const IdealPair& p1, const IdealPair& p2);

struct IdealLattice {
  std::vector<IdealPair> nodes;
  Degree cap;
  /// leq[i][j] iff nodes[i] below nodes[j].
  std::vector<std::vector<bool>> leq;
  /// Covering relations (i, j): i below j with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> hasse;
  /// meet[i][j] / join[i][j], absent when no greatest lower / least upper
  /// bound exists among the nodes.
  std::vector<std::vector<std::optional<std::size_t>>> meet, join;
  bool is_partial_order = true;
  bool is_lattice = true;
};

IdealLattice ideal_lattice(const KGraph& g, const Degree& cap);

}  // namespace kg
