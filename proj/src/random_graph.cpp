#include "kgraph/random_graph.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace kg {

namespace {

constexpr int kMaxAttempts = 10000;

std::uint32_t below(std::mt19937_64& rng, std::uint32_t n) { return static_cast<std::uint32_t>(rng() % n); }

void shuffle(std::mt19937_64& rng, std::vector<std::pair<std::string, std::string>>& items) {
  for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(rng, static_cast<std::uint32_t>(i))]);
}

}  // namespace

KGraph random_kgraph(const RandomGraphOptions& o) {
  if (o.rank != 1 && o.rank != 2) throw Error(ErrorCode::InvalidArgument, "random graphs are available for rank 1 and 2");
  if (o.max_vertices == 0) throw Error(ErrorCode::InvalidArgument, "need at least one vertex");
  std::mt19937_64 rng(o.seed);

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Skeleton sk;
    sk.rank = o.rank;
    const std::uint32_t n = 1 + below(rng, o.max_vertices);
    for (std::uint32_t v = 0; v < n; ++v) sk.vertices.push_back("v" + std::to_string(v));
    const std::uint32_t m = below(rng, o.max_edges + 1);
    std::uint32_t blue = 0, red = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
      const std::uint32_t color = o.rank == 1 ? 1 : 1 + below(rng, 2);
      const std::string id = color == 1 ? (o.rank == 1 ? "e" : "b") + std::to_string(blue++) : "r" + std::to_string(red++);
      sk.edges.push_back({id, color, sk.vertices[below(rng, n)], sk.vertices[below(rng, n)]});
    }
    if (o.rank == 1) return KGraph(std::move(sk), {});

    // (range, source) -> two-edge paths by color order.
    std::map<std::pair<std::string, std::string>, std::vector<std::pair<std::string, std::string>>> br, rb;
    for (const auto& f : sk.edges)
      for (const auto& g : sk.edges) {
        if (f.source != g.range || f.color == g.color) continue;
        (f.color == 1 ? br : rb)[{f.range, g.source}].emplace_back(f.id, g.id);
      }
    bool balanced = br.size() == rb.size();
    for (const auto& [key, paths] : br) balanced = balanced && rb.count(key) && rb[key].size() == paths.size();
    if (!balanced) continue;
    std::vector<SquareRule> squares;
    for (auto& [key, paths] : br) {
      auto partners = rb[key];
      shuffle(rng, partners);
      for (std::size_t i = 0; i < paths.size(); ++i)
        squares.push_back({paths[i].first, paths[i].second, partners[i].first, partners[i].second});
    }
    KGraph g(std::move(sk), std::move(squares));
    if (validate_kgraph(g).ok) return g;
  }
  throw Error(ErrorCode::Internal, "no valid random graph found");
}

}  // namespace kg
