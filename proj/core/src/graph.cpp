#include "symdepth/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace symdepth {

namespace {

constexpr int kMaxVertices = 64;

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

void check_vertex(const Graph& g, int v, const char* op) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument(std::string(op) + ": vertex " + std::to_string(v) +
                                " out of range");
}

int checked_vertex_count(int n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("Graph: vertex count must be in [0, 64]");
  return n;
}

}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(checked_vertex_count(n)), 0) {}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

int Graph::edge_count() const {
  int total = 0;
  for (std::uint64_t row : adj_) total += std::popcount(row);
  return total / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(*this, u, "has_edge");
  check_vertex(*this, v, "has_edge");
  return (adj_[static_cast<std::size_t>(u)] & bit(v)) != 0;
}

void Graph::add_edge(int u, int v) {
  check_vertex(*this, u, "add_edge");
  check_vertex(*this, v, "add_edge");
  if (u == v) throw std::invalid_argument("add_edge: self-loop rejected");
  adj_[static_cast<std::size_t>(u)] |= bit(v);
  adj_[static_cast<std::size_t>(v)] |= bit(u);
}

std::uint64_t Graph::neighbors(int v) const {
  check_vertex(*this, v, "neighbors");
  return adj_[static_cast<std::size_t>(v)];
}

std::uint64_t Graph::closed_neighbors(int v) const { return neighbors(v) | bit(v); }

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    std::uint64_t later = adj_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1);
    while (later) {
      int v = std::countr_zero(later);
      later &= later - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

std::uint64_t Graph::vertex_mask() const {
  return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

VertexDeletion delete_vertices(const Graph& g, const std::vector<int>& a) {
  std::uint64_t removed = 0;
  for (int v : a) {
    check_vertex(g, v, "delete_vertices");
    removed |= bit(v);
  }
  VertexDeletion out;
  std::vector<int> new_label(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (removed & bit(v)) continue;
    new_label[static_cast<std::size_t>(v)] = static_cast<int>(out.old_label.size());
    out.old_label.push_back(v);
  }
  out.graph = Graph(static_cast<int>(out.old_label.size()));
  for (auto [u, v] : g.edges()) {
    if ((removed & bit(u)) || (removed & bit(v))) continue;
    out.graph.add_edge(new_label[static_cast<std::size_t>(u)],
                       new_label[static_cast<std::size_t>(v)]);
  }
  return out;
}

namespace {

bool is_clique(const Graph& g, std::uint64_t mask) {
  std::uint64_t rest = mask;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if ((mask & ~bit(v)) & ~g.neighbors(v)) return false;
  }
  return true;
}

/// Shortest w-p path inside `allowed` (both endpoints included), as a vertex
/// list from w to p; empty when disconnected.
std::vector<int> bfs_path(const Graph& g, int w, int p, std::uint64_t allowed) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()), -1);
  std::uint64_t seen = bit(w);
  std::vector<int> frontier{w};
  while (!frontier.empty() && !(seen & bit(p))) {
    std::vector<int> next;
    for (int u : frontier) {
      std::uint64_t fresh = g.neighbors(u) & allowed & ~seen;
      while (fresh) {
        int v = std::countr_zero(fresh);
        fresh &= fresh - 1;
        parent[static_cast<std::size_t>(v)] = u;
        seen |= bit(v);
        next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  if (!(seen & bit(p))) return {};
  std::vector<int> path;
  for (int v = p; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

/// An induced cycle of length >= 4 in a non-chordal graph: a vertex v with
/// nonadjacent neighbors w, p joined by a shortest path that avoids the rest
/// of N[v]. Shortest paths are induced, so the cycle v-w-...-p is chordless.
std::vector<int> find_induced_cycle(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::uint64_t nbrs = g.neighbors(v);
    std::uint64_t ws = nbrs;
    while (ws) {
      int w = std::countr_zero(ws);
      ws &= ws - 1;
      std::uint64_t ps = nbrs & ~g.neighbors(w) & ~(bit(w) | (bit(w) - 1));
      while (ps) {
        int p = std::countr_zero(ps);
        ps &= ps - 1;
        std::uint64_t allowed =
            g.vertex_mask() & ~bit(v) & ~(g.neighbors(v) & ~bit(w) & ~bit(p));
        std::vector<int> path = bfs_path(g, w, p, allowed);
        if (path.empty()) continue;
        std::vector<int> cycle{v};
        cycle.insert(cycle.end(), path.begin(), path.end());
        return cycle;
      }
    }
  }
  return {};
}

}  // namespace

ChordalityResult is_chordal(const Graph& g) {
  const int n = g.vertex_count();
  ChordalityResult out;
  if (n == 0) {
    out.chordal = true;
    return out;
  }

  // Maximum cardinality search; ties broken toward the smallest index.
  std::vector<int> visit_order;
  visit_order.reserve(static_cast<std::size_t>(n));
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::uint64_t visited = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (visited & bit(v)) continue;
      if (best == -1 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)])
        best = v;
    }
    visited |= bit(best);
    visit_order.push_back(best);
    std::uint64_t fresh = g.neighbors(best) & ~visited;
    while (fresh) {
      int v = std::countr_zero(fresh);
      fresh &= fresh - 1;
      ++weight[static_cast<std::size_t>(v)];
    }
  }

  // Reverse visit order is a perfect elimination ordering iff G is chordal:
  // each vertex's earlier-visited neighbors must form a clique.
  std::uint64_t earlier = 0;
  std::vector<std::uint64_t> earlier_nbrs(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    earlier_nbrs[static_cast<std::size_t>(i)] = g.neighbors(visit_order[static_cast<std::size_t>(i)]) & earlier;
    earlier |= bit(visit_order[static_cast<std::size_t>(i)]);
  }
  bool ok = true;
  for (int i = n - 1; i >= 0 && ok; --i) {
    ok = is_clique(g, earlier_nbrs[static_cast<std::size_t>(i)]);
  }

  if (ok) {
    out.chordal = true;
    out.elimination_order.assign(visit_order.rbegin(), visit_order.rend());
  } else {
    out.induced_cycle = find_induced_cycle(g);
  }
  return out;
}

std::vector<int> simplicial_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (is_clique(g, g.neighbors(v))) out.push_back(v);
  }
  return out;
}

namespace {

void bron_kerbosch(const Graph& comp, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   std::vector<std::uint64_t>& cliques) {
  if (p == 0 && x == 0) {
    cliques.push_back(r);
    return;
  }
  // Pivot with the most candidates eliminated.
  std::uint64_t px = p | x;
  int pivot = -1, best_cover = -1;
  std::uint64_t rest = px;
  while (rest) {
    int u = std::countr_zero(rest);
    rest &= rest - 1;
    int cover = std::popcount(p & comp.neighbors(u));
    if (cover > best_cover) {
      best_cover = cover;
      pivot = u;
    }
  }
  std::uint64_t candidates = p & ~comp.neighbors(pivot);
  while (candidates) {
    int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    bron_kerbosch(comp, r | bit(v), p & comp.neighbors(v), x & comp.neighbors(v), cliques);
    p &= ~bit(v);
    x |= bit(v);
  }
}

std::vector<int> mask_to_vertices(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> minimal_vertex_covers(const Graph& g) {
  const int n = g.vertex_count();
  Graph comp(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) comp.add_edge(u, v);
    }
  }
  std::vector<std::uint64_t> independent_sets;
  bron_kerbosch(comp, 0, g.vertex_mask(), 0, independent_sets);

  std::vector<std::vector<int>> covers;
  covers.reserve(independent_sets.size());
  for (std::uint64_t s : independent_sets) {
    covers.push_back(mask_to_vertices(g.vertex_mask() & ~s));
  }
  std::sort(covers.begin(), covers.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return covers;
}

bool is_star_packing(const Graph& g, const StarPacking& p) {
  std::uint64_t used = 0;
  for (int c : p.centers) {
    check_vertex(g, c, "is_star_packing");
    std::uint64_t closed = g.closed_neighbors(c);
    if (used & closed) return false;
    used |= closed;
  }
  return true;
}

namespace {

struct MisSearch {
  const Graph* g = nullptr;
  int best = 0;

  void expand(std::uint64_t candidates, int size) {
    if (size + std::popcount(candidates) <= best) return;
    if (candidates == 0) {
      best = size;
      return;
    }
    // Branch on the candidate of maximum degree within the candidate set.
    int v = -1, best_deg = -1;
    std::uint64_t rest = candidates;
    while (rest) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      int d = std::popcount(g->neighbors(u) & candidates);
      if (d > best_deg) {
        best_deg = d;
        v = u;
      }
    }
    if (best_deg == 0) {
      // Candidates are pairwise nonadjacent: take them all.
      best = size + std::popcount(candidates);
      return;
    }
    expand(candidates & ~g->closed_neighbors(v), size + 1);
    expand(candidates & ~bit(v), size);
  }
};

std::uint64_t greedy_independent_set(const Graph& g, std::uint64_t candidates) {
  std::uint64_t remaining = candidates, chosen = 0;
  while (remaining) {
    int v = -1, best_deg = g.vertex_count() + 1;
    std::uint64_t rest = remaining;
    while (rest) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      int d = std::popcount(g.neighbors(u) & remaining);
      if (d < best_deg) {
        best_deg = d;
        v = u;
      }
    }
    chosen |= bit(v);
    remaining &= ~g.closed_neighbors(v);
  }
  return chosen;
}

/// Exact maximum-independent-set size among `candidates`. The greedy set
/// seeds the bound, so the search only has to beat (not rediscover) it.
int mis_size(const Graph& g, std::uint64_t candidates) {
  MisSearch search;
  search.g = &g;
  search.best = std::popcount(greedy_independent_set(g, candidates));
  search.expand(candidates, 0);
  return search.best;
}

}  // namespace

Graph square_graph(const Graph& g) {
  Graph sq(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::uint64_t reach = g.neighbors(v);
    std::uint64_t nbrs = g.neighbors(v);
    while (nbrs) {
      int u = std::countr_zero(nbrs);
      nbrs &= nbrs - 1;
      reach |= g.neighbors(u);
    }
    reach &= ~bit(v);
    std::uint64_t later = reach >> (v + 1) << (v + 1);
    while (later) {
      int u = std::countr_zero(later);
      later &= later - 1;
      sq.add_edge(v, u);
    }
  }
  return sq;
}

StarPackingResult star_packing_number(const Graph& g) {
  Graph sq = square_graph(g);
  StarPackingResult out;
  out.value = mis_size(sq, sq.vertex_mask());
  // Lexicographically smallest witness: take each vertex in index order iff a
  // full-size packing still exists among the later, still-compatible vertices.
  std::uint64_t candidates = sq.vertex_mask();
  int needed = out.value;
  for (int v = 0; v < g.vertex_count() && needed > 0; ++v) {
    if (!(candidates & bit(v))) continue;
    std::uint64_t tail = candidates & ~sq.closed_neighbors(v) & ~(bit(v) | (bit(v) - 1));
    if (mis_size(sq, tail) >= needed - 1) {
      out.witness.centers.push_back(v);
      candidates = tail;
      --needed;
    } else {
      candidates &= ~bit(v);
    }
  }
  return out;
}

bool is_forest(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::uint64_t seen = 0;
  for (int root = 0; root < n; ++root) {
    if (seen & bit(root)) continue;
    std::vector<int> stack{root};
    seen |= bit(root);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      std::uint64_t nbrs = g.neighbors(u);
      while (nbrs) {
        int v = std::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        if (v == parent[static_cast<std::size_t>(u)]) continue;
        if (seen & bit(v)) return false;
        seen |= bit(v);
        parent[static_cast<std::size_t>(v)] = u;
        stack.push_back(v);
      }
    }
  }
  return true;
}

}  // namespace symdepth
