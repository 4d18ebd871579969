#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace symdepth {

/// Simple undirected graph on vertices 0..n-1 (vertex j maps to variable
/// x{j+1}). Dense bitset adjacency; the supported envelope is n <= 64.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const;
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);

  /// Open neighborhood of v as a bitmask.
  std::uint64_t neighbors(int v) const;
  std::uint64_t closed_neighbors(int v) const;
  int degree(int v) const;

  /// All edges, each pair sorted, list sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;
  std::uint64_t vertex_mask() const;

  bool operator==(const Graph&) const = default;

private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// Result of deleting a vertex set: the induced subgraph on the complement,
/// relabeled to 0..n-|A|-1, plus the map new label -> old label.
struct VertexDeletion {
  Graph graph;
  std::vector<int> old_label;
};
VertexDeletion delete_vertices(const Graph& g, const std::vector<int>& a);

/// Chordality with a witness: a perfect elimination ordering when chordal,
/// an induced cycle of length >= 4 otherwise.
struct ChordalityResult {
  bool chordal = false;
  std::vector<int> elimination_order;
  std::vector<int> induced_cycle;
};
ChordalityResult is_chordal(const Graph& g);

/// Vertices whose open neighborhood is a clique.
std::vector<int> simplicial_vertices(const Graph& g);

/// All minimal vertex covers, i.e. the complements of the maximal independent
/// sets, enumerated via maximal cliques of the complement graph. Family
/// sorted by size then lexicographically.
std::vector<std::vector<int>> minimal_vertex_covers(const Graph& g);

/// A family of stars given by their centers; valid when the closed
/// neighborhoods of the centers are pairwise disjoint.
struct StarPacking {
  std::vector<int> centers;
};

bool is_star_packing(const Graph& g, const StarPacking& p);

struct StarPackingResult {
  int value = 0;
  StarPacking witness;
};

/// Star packing number: the maximum number of pairwise disjoint stars,
/// computed as a maximum independent set of the square graph by exact
/// branch and bound.
StarPackingResult star_packing_number(const Graph& g);

/// Vertices adjacent iff at graph distance 1 or 2.
Graph square_graph(const Graph& g);

bool is_forest(const Graph& g);

}  // namespace symdepth
