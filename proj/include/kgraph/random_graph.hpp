#pragma once

#include <cstdint>

#include "kgraph/kgraph.hpp"

namespace kg {

struct RandomGraphOptions {
  std::uint32_t rank = 1;  // 1 or 2
  std::uint32_t max_vertices = 5;
  std::uint32_t max_edges = 8;
  std::uint64_t seed = 0;
};

/// Seeded random valid k-graph. Rank 2 draws colored edges until every
/// (range, source) pair has as many blue-red as red-blue paths, then pairs
/// them up with a seeded bijection. Throws InvalidArgument for other ranks.
KGraph random_kgraph(const RandomGraphOptions& options);

}  // namespace kg
