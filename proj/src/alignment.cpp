#include "kgraph/alignment.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace kg {

namespace {

constexpr std::size_t kClosureLimit = 100000;

void require_same_range(const Path& mu, const Path& nu) {
  if (mu.range() != nu.range()) throw Error(ErrorCode::RangeMismatch, "paths have different ranges");
}

// Paths sorted by total degree first, so scans are breadth-first.
std::vector<Path> breadth_first(std::vector<Path> paths) {
  std::stable_sort(paths.begin(), paths.end(),
                   [](const Path& a, const Path& b) { return a.degree().total() < b.degree().total(); });
  return paths;
}

bool extends_past(const KGraph& g, const Path& p, const Degree& cap) {
  for (std::size_t c = 0; c < g.rank(); ++c)
    if (p.degree()[c] >= cap[c] && !g.edges_at(p.source(), c).empty()) return true;
  return false;
}

}  // namespace

PathSet mce(const KGraph& g, const Path& mu, const Path& nu) {
  require_same_range(mu, nu);
  const Degree target = mu.degree().join(nu.degree());
  PathSet out;
  for (const auto& tail : g.paths_of_degree(mu.source(), target - mu.degree())) {
    Path tau = g.compose(mu, tail);
    if (g.has_prefix(tau, nu)) out.push_back(std::move(tau));
  }
  return canonical(std::move(out));
}

std::vector<MinPair> lambda_min(const KGraph& g, const Path& mu, const Path& nu) {
  std::vector<MinPair> out;
  for (const auto& tau : mce(g, mu, nu))
    out.push_back({g.suffix(tau, mu.degree()), g.suffix(tau, nu.degree())});
  std::sort(out.begin(), out.end());
  return out;
}

PathSet ext(const KGraph& g, const Path& mu, const PathSet& E) {
  PathSet out;
  for (const auto& nu : E)
    for (const auto& tau : mce(g, mu, nu)) out.push_back(g.suffix(tau, mu.degree()));
  return canonical(std::move(out));
}

PathSet vee_closure(const KGraph& g, const PathSet& E) {
  std::set<Path> closed(E.begin(), E.end());
  std::vector<Path> work(closed.begin(), closed.end());
  while (!work.empty()) {
    Path x = std::move(work.back());
    work.pop_back();
    std::vector<Path> partners(closed.begin(), closed.end());
    for (const auto& y : partners) {
      if (y.range() != x.range()) continue;
      for (auto& z : mce(g, x, y)) {
        if (closed.insert(z).second) {
          if (closed.size() > kClosureLimit) throw Error(ErrorCode::CapTooLarge, "vee closure exceeded size limit");
          work.push_back(std::move(z));
        }
      }
    }
  }
  return PathSet(closed.begin(), closed.end());
}

PathSet pi_closure(const KGraph& g, const PathSet& G) {
  std::set<Path> closed(G.begin(), G.end());
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Path> snapshot(closed.begin(), closed.end());
    for (const auto& lambda : snapshot) {
      for (const auto& mu : snapshot) {
        if (lambda.degree() != mu.degree() || lambda.source() != mu.source()) continue;
        for (const auto& sigma : snapshot) {
          if (sigma.range() != mu.range()) continue;
          for (const auto& [alpha, beta] : lambda_min(g, mu, sigma)) {
            if (closed.insert(g.compose(lambda, alpha)).second) {
              changed = true;
              if (closed.size() > kClosureLimit) throw Error(ErrorCode::CapTooLarge, "pi closure exceeded size limit");
            }
          }
        }
      }
    }
  }
  return PathSet(closed.begin(), closed.end());
}

CertifiedBool is_exhaustive(const KGraph& g, VertexId v, const PathSet& E, const Degree& cap) {
  for (const auto& nu : E) {
    if (nu.range() != v) throw Error(ErrorCode::RangeMismatch, "member '" + g.format(nu) + "' does not start at " + g.vertex_name(v));
    if (nu.is_vertex()) throw Error(ErrorCode::InvalidArgument, "exhaustive-set candidates exclude the vertex identity");
  }
  bool open = false;
  for (const auto& lambda : breadth_first(g.paths_up_to(v, cap))) {
    const bool pruned = std::any_of(E.begin(), E.end(), [&](const Path& nu) { return g.has_prefix(lambda, nu); });
    if (pruned) continue;
    const bool compatible = std::any_of(E.begin(), E.end(), [&](const Path& nu) { return !mce(g, lambda, nu).empty(); });
    if (!compatible) return CertifiedBool::certified_false(cap, Witness{"avoiding-path", {}, {lambda}, {}});
    if (extends_past(g, lambda, cap)) open = true;
  }
  return open ? CertifiedBool::unknown(cap) : CertifiedBool::certified_true(cap);
}

CertifiedBool is_exhaustive(const KGraph& g, const PathSet& E, const Degree& cap) {
  if (E.empty()) throw Error(ErrorCode::InvalidArgument, "cannot infer the range of an empty set");
  return is_exhaustive(g, E.front().range(), E, cap);
}

std::size_t FEFamily::size() const {
  std::size_t n = 0;
  for (const auto& [v, sets] : members) n += sets.size();
  return n;
}

std::vector<PathSet> FEFamily::sets() const {
  std::vector<PathSet> out;
  for (const auto& [v, sets] : members)
    for (const auto& m : sets) out.push_back(m.set);
  return out;
}

FEFamily fe_sets(const KGraph& g, VertexId v, const Degree& cap, bool minimal_only) {
  FEFamily family{cap, {}};
  const auto universe = breadth_first(g.paths_up_to(v, cap));
  std::vector<Path> candidates;
  for (const auto& p : g.paths_up_to(v, cap))
    if (!p.is_vertex()) candidates.push_back(p);
  if (candidates.size() > kMaxFECandidates)
    throw Error(ErrorCode::CapTooLarge, std::to_string(candidates.size()) + " candidate paths at " + g.vertex_name(v) +
                                            " exceed the enumeration limit; lower the cap");
  auto& out = family.members[v];
  if (candidates.empty()) return family;

  // Per universe path: which candidates it extends, which it is compatible with.
  struct Row {
    std::uint32_t prefix_of = 0;
    std::uint32_t compatible = 0;
    bool open = false;
  };
  std::vector<Row> rows;
  rows.reserve(universe.size());
  for (const auto& lambda : universe) {
    Row row;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (g.has_prefix(lambda, candidates[i])) row.prefix_of |= 1u << i;
      if (!mce(g, lambda, candidates[i]).empty()) row.compatible |= 1u << i;
    }
    row.open = extends_past(g, lambda, cap);
    rows.push_back(row);
  }

  std::vector<std::uint32_t> kept;
  const std::uint32_t full = candidates.size() == 32 ? ~0u : ((1u << candidates.size()) - 1);
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    bool open = false, refuted = false;
    for (const auto& row : rows) {
      if (row.prefix_of & mask) continue;
      if (!(row.compatible & mask)) {
        refuted = true;
        break;
      }
      open = open || row.open;
    }
    if (refuted) continue;
    kept.push_back(mask);
    PathSet set;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (mask & (1u << i)) set.push_back(candidates[i]);
    out.push_back({canonical(std::move(set)), open ? Certainty::Unknown : Certainty::True});
  }

  if (minimal_only) {
    std::vector<FEMember> minimal;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      const bool has_smaller = std::any_of(kept.begin(), kept.end(), [&](std::uint32_t other) {
        return other != kept[i] && (other & kept[i]) == other;
      });
      if (!has_smaller) minimal.push_back(out[i]);
    }
    out = std::move(minimal);
  }
  std::sort(out.begin(), out.end(), [](const FEMember& a, const FEMember& b) { return a.set < b.set; });
  return family;
}

FEFamily fe_family(const KGraph& g, const Degree& cap) {
  FEFamily family{cap, {}};
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto one = fe_sets(g, v, cap);
    family.members[v] = std::move(one.members[v]);
  }
  return family;
}

}  // namespace kg
