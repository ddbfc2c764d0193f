#pragma once
// Undirected simple graphs over integer node ids, plus the BFS utilities the
// clustering and decomposition code leans on.  Node ids are arbitrary
// non-negative ints; internally we index nodes 0..n-1 in ascending id order so
// every traversal is order-deterministic.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace locald {

class Graph {
 public:
  Graph() = default;

  // Build from an explicit node set and edge list (ids, deduplicated,
  // self-loops rejected).  Nodes mentioned only in `nodes` may be isolated.
  Graph(std::vector<int> nodes, const std::vector<std::pair<int, int>>& edges);

  int n() const { return static_cast<int>(ids_.size()); }
  long long m() const { return edge_count_; }

  const std::vector<int>& ids() const { return ids_; }       // ascending
  bool has_node(int id) const { return index_of(id) >= 0; }
  int index_of(int id) const;                                // -1 if absent
  int id_of(int idx) const { return ids_[idx]; }

  // Neighbor ids, ascending.
  const std::vector<int>& neighbors(int id) const;
  const std::vector<int>& neighbors_by_index(int idx) const { return adj_[idx]; }
  int degree(int id) const { return static_cast<int>(neighbors(id).size()); }
  int max_degree() const;
  bool has_edge(int a, int b) const;

  // Induced subgraph on the given ids (ids not present are ignored).
  Graph induced(const std::vector<int>& keep) const;

  // Edge-list file format: one "u v" pair per line, '#' starts a comment.
  static Graph load_edge_list(const std::string& path);
  void save_edge_list(const std::string& path) const;

 private:
  std::vector<int> ids_;                 // sorted ascending
  std::vector<std::vector<int>> adj_;    // by index, neighbor ids sorted
  long long edge_count_ = 0;
  // id -> index lookup; ids are arbitrary so keep a sorted array + binary search
};

// Single-source BFS distances (index-aligned with g.ids()); -1 = unreachable.
std::vector<int> bfs_distances(const Graph& g, int source_id,
                               int radius = -1 /* -1 = unbounded */);

// Multi-source variant: distance to nearest listed source.
std::vector<int> bfs_distances(const Graph& g, const std::vector<int>& source_ids,
                               int radius = -1);

// Exact diameter of the connected component containing `id` (induced metric).
int component_diameter(const Graph& g, int id);

// Diameter of each connected component of g[subset]; returns per-component
// (representative id, diameter), representative = smallest id in component.
std::vector<std::pair<int, int>> component_diameters(const Graph& g,
                                                     const std::vector<int>& subset);

// Connected components of g restricted to `subset` (whole graph if empty
// optional), each component sorted ascending, components ordered by smallest id.
std::vector<std::vector<int>> connected_components(
    const Graph& g, const std::optional<std::vector<int>>& subset = std::nullopt);

}  // namespace locald
