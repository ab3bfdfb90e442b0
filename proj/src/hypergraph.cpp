#include "hjkit/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hjkit {

Hypergraph Hypergraph::make(int k, std::vector<std::string> ids,
                            std::vector<std::vector<int>> edge_list) {
  Hypergraph H;
  H.k = k;
  H.vertex_ids = std::move(ids);
  for (auto& e : edge_list) std::sort(e.begin(), e.end());
  std::sort(edge_list.begin(), edge_list.end());
  edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
  H.edges = std::move(edge_list);
  H.validate();
  return H;
}

void Hypergraph::validate() const {
  if (k < 2) throw std::invalid_argument("hypergraph uniformity must be >= 2");
  std::set<std::string> seen;
  for (const auto& id : vertex_ids) {
    if (id.empty()) throw std::invalid_argument("empty vertex id");
    if (!seen.insert(id).second) throw std::invalid_argument("duplicate vertex id '" + id + "'");
  }
  for (const auto& e : edges) {
    if (e.size() != static_cast<size_t>(k)) {
      throw std::invalid_argument("edge of wrong size (uniformity " + std::to_string(k) + ")");
    }
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] >= n_vertices()) throw std::invalid_argument("edge vertex out of range");
      if (i > 0 && e[i - 1] >= e[i]) {
        throw std::invalid_argument("edge tuple not strictly ascending");
      }
    }
  }
}

int Hypergraph::index_of(const std::string& id) const {
  for (size_t i = 0; i < vertex_ids.size(); ++i) {
    if (vertex_ids[i] == id) return static_cast<int>(i);
  }
  return -1;
}

bool Hypergraph::has_edge(std::vector<int> tuple) const {
  std::sort(tuple.begin(), tuple.end());
  return std::binary_search(edges.begin(), edges.end(), tuple);
}

std::vector<int> Hypergraph::degrees() const {
  std::vector<int> deg(static_cast<size_t>(n_vertices()), 0);
  for (const auto& e : edges) {
    for (int v : e) ++deg[static_cast<size_t>(v)];
  }
  return deg;
}

std::vector<int> Hypergraph::edges_at(int v) const {
  std::vector<int> out;
  for (size_t i = 0; i < edges.size(); ++i) {
    if (std::binary_search(edges[i].begin(), edges[i].end(), v)) {
      out.push_back(static_cast<int>(i));
    }
  }
  return out;
}

namespace {

std::vector<std::string> numeric_ids(int n) {
  std::vector<std::string> ids;
  ids.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) ids.push_back(std::to_string(i));
  return ids;
}

}  // namespace

Hypergraph fano_plane() {
  return Hypergraph::make(3, numeric_ids(7),
                          {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                           {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

Hypergraph single_edge(int k) {
  std::vector<int> e;
  for (int i = 0; i < k; ++i) e.push_back(i);
  return Hypergraph::make(k, numeric_ids(k), {e});
}

Hypergraph path_two_edges() {
  return Hypergraph::make(3, numeric_ids(5), {{0, 1, 2}, {2, 3, 4}});
}

Hypergraph complete_3uniform(int n) {
  std::vector<std::vector<int>> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) edges.push_back({a, b, c});
    }
  }
  return Hypergraph::make(3, numeric_ids(n), std::move(edges));
}

}  // namespace hjkit
