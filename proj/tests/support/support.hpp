#pragma once

#include <string>
#include <vector>

#include "kgraph/ideals.hpp"
#include "kgraph/structure.hpp"
#include "kgraph/text_format.hpp"

namespace kg::testing {

KGraphDocument load_fixture(const std::string& name);
KGraph fixture(const std::string& name);

Path path(const KGraph& g, const std::string& text);
PathSet paths(const KGraph& g, std::initializer_list<const char*> texts);
VertexSet vertices(const KGraph& g, std::initializer_list<const char*> names);
std::vector<std::string> names(const KGraph& g, const PathSet& set);
std::vector<std::string> names(const KGraph& g, const VertexSet& set);

// --- Oracles, written from the definitions without the library's search code.

/// Paths of degree d(mu) v d(nu) at r(mu) with both as prefixes.
PathSet brute_mce(const KGraph& g, const Path& mu, const Path& nu);
/// beta with mu beta in brute_mce(mu, nu) for some nu in E.
PathSet brute_ext(const KGraph& g, const Path& mu, const PathSet& E);
/// Every path at v of degree <= bound has a common extension with E.
bool brute_exhaustive_up_to(const KGraph& g, VertexId v, const PathSet& E, const Degree& bound);

/// Reachability over skeleton edges from range to source.
std::vector<bool> oracle_reach(const KGraph& g, VertexId v);

/// 1-graph saturated hereditary sets from the classical rule: a vertex with
/// at least one edge whose edges all have sources in H lies in H.
std::vector<VertexSet> classical_sat_hered(const KGraph& g);

// --- Witness replays. Each returns an empty string on success, else why
// the witness does not check out.

std::string replay_non_exhaustive(const KGraph& g, VertexId v, const PathSet& E, const Witness& w);
std::string replay_not_saturated(const KGraph& g, const VertexSet& H, const Witness& w, const Degree& cap);
std::string replay_not_cofinal(const KGraph& g, const Witness& w);
std::string replay_loop_with_entrance(const KGraph& g, VertexId v, const Witness& w);
/// For a false loop verdict: no loop with an entrance of degree <= bound is
/// reachable from v.
std::string replay_no_loop(const KGraph& g, VertexId v, const Degree& bound);
std::string replay_not_satiated(const KGraph& gq, const Family& family, const Witness& w, const Degree& cap);

}  // namespace kg::testing
