#pragma once

#include <map>
#include <vector>

#include "kgraph/kgraph.hpp"

namespace kg {

/// Canonically sorted, duplicate-free set of paths.
using PathSet = std::vector<Path>;

struct MinPair {
  Path alpha;
  Path beta;
  auto operator<=>(const MinPair&) const = default;
  bool operator==(const MinPair&) const = default;
};

/// Minimal common extensions: paths of degree d(mu) v d(nu) extending both.
PathSet mce(const KGraph& g, const Path& mu, const Path& nu);

/// Pairs (alpha, beta) with mu alpha = nu beta in mce(mu, nu).
std::vector<MinPair> lambda_min(const KGraph& g, const Path& mu, const Path& nu);

/// Continuations beta of mu such that mu beta is a minimal common extension
/// of mu with some member of E. E must share the range of mu.
PathSet ext(const KGraph& g, const Path& mu, const PathSet& E);

/// Least superset of E closed under pairwise mce.
PathSet vee_closure(const KGraph& g, const PathSet& E);

/// Least superset of G containing lambda alpha whenever lambda, mu, sigma are
/// members, d(lambda) = d(mu), s(lambda) = s(mu), (alpha, beta) in
/// lambda_min(mu, sigma).
PathSet pi_closure(const KGraph& g, const PathSet& G);

/// Bounded exhaustiveness test of E at vertex v.
///
/// Searches v Lambda^{<= cap} breadth-first by degree. Paths in E Lambda are
/// pruned; a path with ext(lambda, E) empty is a witness of
/// non-exhaustiveness. If no unpruned path has an extension beyond the cap the
/// search is complete and exhaustiveness is certified.
///
/// Throws InvalidArgument if E contains the identity at v, RangeMismatch if a
/// member does not start at v.
CertifiedBool is_exhaustive(const KGraph& g, VertexId v, const PathSet& E, const Degree& cap);

/// As above with v = r(E). Throws InvalidArgument if E is empty.
CertifiedBool is_exhaustive(const KGraph& g, const PathSet& E, const Degree& cap);

struct FEMember {
  PathSet set;
  Certainty status;  // True or Unknown; certified non-exhaustive sets are dropped
  bool operator==(const FEMember&) const = default;
};

/// Capped finite exhaustive sets, indexed by range vertex.
struct FEFamily {
  Degree cap;
  std::map<VertexId, std::vector<FEMember>> members;

  std::size_t size() const;
  /// All member sets across vertices in canonical order.
  std::vector<PathSet> sets() const;
};

/// Largest number of non-identity candidate paths fe_sets will enumerate
/// subsets of.
inline constexpr std::size_t kMaxFECandidates = 18;

/// Every nonempty E in v Lambda^{<= cap} \ {v} not certified non-exhaustive.
/// With `minimal_only`, keeps the inclusion-minimal members.
/// Throws CapTooLarge above kMaxFECandidates candidates.
FEFamily fe_sets(const KGraph& g, VertexId v, const Degree& cap, bool minimal_only = false);

/// fe_sets at every vertex.
FEFamily fe_family(const KGraph& g, const Degree& cap);

}  // namespace kg
