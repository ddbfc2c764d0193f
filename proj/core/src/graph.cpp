#include "locald/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace locald {

Graph::Graph(std::vector<int> nodes, const std::vector<std::pair<int, int>>& edges) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  ids_ = std::move(nodes);
  adj_.assign(ids_.size(), {});

  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a == b) throw std::invalid_argument("self-loop rejected");
    if (a > b) std::swap(a, b);
    int ia = index_of(a), ib = index_of(b);
    if (ia < 0 || ib < 0) throw std::invalid_argument("edge endpoint not in node set");
    if (!seen.insert({a, b}).second) continue;
    adj_[ia].push_back(b);
    adj_[ib].push_back(a);
  }
  edge_count_ = static_cast<long long>(seen.size());
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::index_of(int id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return -1;
  return static_cast<int>(it - ids_.begin());
}

const std::vector<int>& Graph::neighbors(int id) const {
  int idx = index_of(id);
  if (idx < 0) throw std::out_of_range("no such node: " + std::to_string(id));
  return adj_[idx];
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
  return d;
}

bool Graph::has_edge(int a, int b) const {
  int ia = index_of(a);
  if (ia < 0) return false;
  return std::binary_search(adj_[ia].begin(), adj_[ia].end(), b);
}

Graph Graph::induced(const std::vector<int>& keep) const {
  std::vector<int> nodes;
  for (int id : keep)
    if (has_node(id)) nodes.push_back(id);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  std::vector<std::pair<int, int>> edges;
  for (int id : nodes) {
    for (int nb : neighbors(id)) {
      if (nb > id && std::binary_search(nodes.begin(), nodes.end(), nb))
        edges.push_back({id, nb});
    }
  }
  return Graph(std::move(nodes), edges);
}

Graph Graph::load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<int> nodes;
  std::vector<std::pair<int, int>> edges;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    long long a, b;
    if (!(ls >> a)) continue;  // blank/comment line
    if (!(ls >> b)) {
      // a bare id declares an isolated node
      nodes.push_back(static_cast<int>(a));
      continue;
    }
    nodes.push_back(static_cast<int>(a));
    nodes.push_back(static_cast<int>(b));
    edges.push_back({static_cast<int>(a), static_cast<int>(b)});
  }
  return Graph(std::move(nodes), edges);
}

void Graph::save_edge_list(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (int i = 0; i < n(); ++i) {
    if (adj_[i].empty()) out << ids_[i] << "\n";
    for (int nb : adj_[i])
      if (nb > ids_[i]) out << ids_[i] << " " << nb << "\n";
  }
}

std::vector<int> bfs_distances(const Graph& g, int source_id, int radius) {
  return bfs_distances(g, std::vector<int>{source_id}, radius);
}

std::vector<int> bfs_distances(const Graph& g, const std::vector<int>& source_ids,
                               int radius) {
  std::vector<int> dist(g.n(), -1);
  std::deque<int> q;
  for (int sid : source_ids) {
    int idx = g.index_of(sid);
    if (idx < 0) throw std::out_of_range("bfs source not in graph");
    if (dist[idx] != 0) {
      dist[idx] = 0;
      q.push_back(idx);
    }
  }
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    if (radius >= 0 && dist[u] >= radius) continue;
    for (int nb : g.neighbors_by_index(u)) {
      int v = g.index_of(nb);
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<std::vector<int>> connected_components(
    const Graph& g, const std::optional<std::vector<int>>& subset) {
  std::vector<char> in(g.n(), subset ? 0 : 1);
  if (subset) {
    for (int id : *subset) {
      int idx = g.index_of(id);
      if (idx >= 0) in[idx] = 1;
    }
  }
  std::vector<char> seen(g.n(), 0);
  std::vector<std::vector<int>> comps;
  for (int i = 0; i < g.n(); ++i) {
    if (!in[i] || seen[i]) continue;
    std::vector<int> comp;
    std::deque<int> q{i};
    seen[i] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      comp.push_back(g.id_of(u));
      for (int nb : g.neighbors_by_index(u)) {
        int v = g.index_of(nb);
        if (in[v] && !seen[v]) {
          seen[v] = 1;
          q.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

int component_diameter(const Graph& g, int id) {
  auto comps = connected_components(g);
  for (const auto& c : comps) {
    if (!std::binary_search(c.begin(), c.end(), id)) continue;
    Graph h = g.induced(c);
    int diam = 0;
    for (int s : c) {
      auto dist = bfs_distances(h, s);
      for (int d : dist) diam = std::max(diam, d);
    }
    return diam;
  }
  throw std::out_of_range("node not in graph");
}

std::vector<std::pair<int, int>> component_diameters(const Graph& g,
                                                     const std::vector<int>& subset) {
  Graph h = g.induced(subset);
  std::vector<std::pair<int, int>> out;
  for (const auto& c : connected_components(h)) {
    Graph hc = h.induced(c);
    int diam = 0;
    for (int s : c) {
      auto dist = bfs_distances(hc, s);
      for (int d : dist) diam = std::max(diam, d);
    }
    out.push_back({c.front(), diam});
  }
  return out;
}

}  // namespace locald
