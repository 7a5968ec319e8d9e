#include "foxcolor/euler_graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "foxcolor/arc_matrix.hpp"
#include "foxcolor/error.hpp"
#include "foxcolor/exact_linalg.hpp"

namespace foxcolor {

std::size_t DirectedMultigraph::index_of(Label v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  if (it == vertices.end()) {
    throw Error(ErrorKind::IndexOutOfRange, "no vertex " + std::to_string(v));
  }
  return static_cast<std::size_t>(it - vertices.begin());
}

std::size_t DirectedMultigraph::out_degree(Label v) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [v](const auto& e) { return e.first == v; }));
}

std::size_t DirectedMultigraph::in_degree(Label v) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [v](const auto& e) { return e.second == v; }));
}

DirectedMultigraph build_euler_graph(const GaussCode& code) {
  if (code.k() <= 1) throw Error(ErrorKind::TooSmall, "Euler graph needs k >= 2");
  if (!is_alternating(code)) throw Error(ErrorKind::NotAlternating, code.str());
  const ArcTable arcs = compute_arcs(code);
  const std::size_t n = code.size();
  DirectedMultigraph g;
  g.vertices = code.labels();
  for (const Arc& arc : arcs.arcs) {
    const Label over = arc.over_labels.front();
    const Label from = code[(arc.start + n - 1) % n].label;
    const Label to = code[arc.end].label;
    g.edges.emplace_back(from, over);
    g.edges.emplace_back(to, over);
  }
  return g;
}

namespace {

bool weakly_connected(const DirectedMultigraph& g) {
  const std::size_t n = g.vertices.size();
  if (n <= 1) return true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::size_t components = n;
  for (const auto& [tail, head] : g.edges) {
    const std::size_t a = find(g.index_of(tail));
    const std::size_t b = find(g.index_of(head));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

void require_eulerian(const DirectedMultigraph& g) {
  for (Label v : g.vertices) {
    if (g.in_degree(v) != g.out_degree(v)) {
      throw Error(ErrorKind::NotEulerian, "vertex " + std::to_string(v) + " has in-degree " +
                                              std::to_string(g.in_degree(v)) + ", out-degree " +
                                              std::to_string(g.out_degree(v)));
    }
  }
  if (!weakly_connected(g)) throw Error(ErrorKind::Disconnected, "graph is not connected");
}

}  // namespace

BigInt euler_circuit_count_best(const DirectedMultigraph& g) {
  if (g.vertices.empty()) throw Error(ErrorKind::Disconnected, "graph has no vertices");
  return euler_circuit_count_best(g, g.vertices.front());
}

BigInt euler_circuit_count_best(const DirectedMultigraph& g, Label root) {
  require_eulerian(g);
  const std::size_t n = g.vertices.size();
  const std::size_t r = g.index_of(root);
  // Out-degree Laplacian; loops cancel between the degree and adjacency terms.
  IntMatrix laplacian(n, n);
  for (const auto& [tail, head] : g.edges) {
    const std::size_t t = g.index_of(tail);
    const std::size_t h = g.index_of(head);
    laplacian(t, t) += 1;
    laplacian(t, h) -= 1;
  }
  BigInt count = det(laplacian.without(r, r));
  for (Label v : g.vertices) {
    for (std::size_t f = 2; f < g.out_degree(v); ++f) count *= f;
  }
  return count;
}

BigInt euler_circuit_count_bruteforce(const DirectedMultigraph& g) {
  if (g.edges.size() > kMaxBruteForceEdges) {
    throw Error(ErrorKind::TooLarge, std::to_string(g.edges.size()) + " edges exceed " +
                                         std::to_string(kMaxBruteForceEdges));
  }
  if (!weakly_connected(g)) throw Error(ErrorKind::Disconnected, "graph is not connected");
  if (g.edges.empty()) return 0;

  const std::size_t m = g.edges.size();
  std::vector<std::vector<std::size_t>> out_edges(g.vertices.size());
  for (std::size_t e = 0; e < m; ++e) out_edges[g.index_of(g.edges[e].first)].push_back(e);
  const std::size_t origin = g.index_of(g.edges[0].first);

  std::uint64_t count = 0;
  std::vector<bool> used(m, false);
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t at, std::size_t depth) {
    if (depth == m) {
      if (at == origin) ++count;
      return;
    }
    for (std::size_t e : out_edges[at]) {
      if (used[e]) continue;
      used[e] = true;
      walk(g.index_of(g.edges[e].second), depth + 1);
      used[e] = false;
    }
  };
  used[0] = true;
  walk(g.index_of(g.edges[0].second), 1);
  return count;
}

std::set<Label> articulation_vertices(const DirectedMultigraph& g) {
  if (!weakly_connected(g)) throw Error(ErrorKind::Disconnected, "graph is not connected");
  const std::size_t n = g.vertices.size();
  // Undirected adjacency without loops; loops are tallied separately.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);  // (neighbour, edge id)
  std::vector<std::size_t> loops(n, 0);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const std::size_t a = g.index_of(g.edges[e].first);
    const std::size_t b = g.index_of(g.edges[e].second);
    if (a == b) {
      ++loops[a];
      continue;
    }
    adj[a].emplace_back(b, e);
    adj[b].emplace_back(a, e);
  }

  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnseen), low(n, 0), blocks(n, 0);
  std::size_t clock = 0;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t v, std::size_t via_edge) {
    disc[v] = low[v] = clock++;
    for (const auto& [u, e] : adj[v]) {
      if (e == via_edge) continue;
      if (disc[u] == kUnseen) {
        dfs(u, e);
        low[v] = std::min(low[v], low[u]);
        if (low[u] >= disc[v]) ++blocks[v];  // u's subtree closes a block at v
      } else {
        low[v] = std::min(low[v], disc[u]);
      }
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (disc[v] != kUnseen) continue;
    dfs(v, kUnseen);
  }
  std::set<Label> out;
  for (std::size_t v = 0; v < n; ++v) {
    // Every non-root vertex with a tree edge also sits in its parent's block.
    const bool has_parent_block = disc[v] != 0 && !adj[v].empty();
    const std::size_t total = blocks[v] + (has_parent_block ? 1 : 0) + loops[v];
    if (total >= 2) out.insert(g.vertices[v]);
  }
  return out;
}

}  // namespace foxcolor
