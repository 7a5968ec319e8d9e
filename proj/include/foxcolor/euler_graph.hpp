#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "foxcolor/bigint.hpp"
#include "foxcolor/gauss_code.hpp"

namespace foxcolor {

/// Directed multigraph with parallel edges and loops. Edge ids are indices
/// into `edges`; parallel edges stay distinguishable.
struct DirectedMultigraph {
  std::vector<Label> vertices;
  std::vector<std::pair<Label, Label>> edges;  // (tail, head)

  std::size_t index_of(Label v) const;
  std::size_t out_degree(Label v) const;
  std::size_t in_degree(Label v) const;
};

/// One vertex per crossing. The arc passing over crossing c, running from
/// the under-pass at `from` to the under-pass at `to`, contributes the edges
/// from -> c and to -> c. Requires an alternating code with k >= 2.
DirectedMultigraph build_euler_graph(const GaussCode& code);

/// BEST theorem: arborescences into `root` times prod (outdeg - 1)!.
/// Throws NotEulerian or Disconnected.
BigInt euler_circuit_count_best(const DirectedMultigraph& g);
BigInt euler_circuit_count_best(const DirectedMultigraph& g, Label root);

/// Largest graph euler_circuit_count_bruteforce accepts.
inline constexpr std::size_t kMaxBruteForceEdges = 16;

/// Backtracking count of closed trails using every edge once, up to
/// rotation (each circuit is counted from edge 0).
BigInt euler_circuit_count_bruteforce(const DirectedMultigraph& g);

/// Cut vertices of the underlying undirected multigraph, where each loop is
/// its own block: a vertex counts when it lies in two or more blocks.
std::set<Label> articulation_vertices(const DirectedMultigraph& g);

}  // namespace foxcolor
