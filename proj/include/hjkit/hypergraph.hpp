#pragma once

#include <map>
#include <string>
#include <vector>

namespace hjkit {

// Finite k-uniform hypergraph. Vertex ids are opaque strings held in a fixed
// order; edges are ascending index tuples, stored sorted lexicographically and
// deduplicated, so two builds of the same hypergraph serialize identically.
struct Hypergraph {
  int k = 0;
  std::vector<std::string> vertex_ids;
  std::vector<std::vector<int>> edges;

  static Hypergraph make(int k, std::vector<std::string> ids,
                         std::vector<std::vector<int>> edge_list);

  void validate() const;
  int n_vertices() const { return static_cast<int>(vertex_ids.size()); }
  int n_edges() const { return static_cast<int>(edges.size()); }
  int index_of(const std::string& id) const;  // -1 when absent
  bool has_edge(std::vector<int> tuple) const;  // tuple sorted internally
  std::vector<int> degrees() const;
  std::vector<int> edges_at(int v) const;  // edge indices containing v, ascending
};

// Fixtures.
Hypergraph fano_plane();           // 7 points, 7 lines; linear, chromatic number 3
Hypergraph single_edge(int k);     // vertices 1..k, one edge
Hypergraph path_two_edges();       // {1,2,3}, {3,4,5}
Hypergraph complete_3uniform(int n);

}  // namespace hjkit
