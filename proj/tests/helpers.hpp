#pragma once

// Brute-force oracles for the unit tests: everything here recomputes the
// quantity under test by direct enumeration, so agreement with the library
// is evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "symdepth/graph.hpp"
#include "symdepth/monomial.hpp"
#include "symdepth/monomial_ideal.hpp"

namespace testutil {

inline symdepth::Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return symdepth::Graph::from_edges(n, edges);
}

inline symdepth::Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return symdepth::Graph::from_edges(n, edges);
}

inline symdepth::Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return symdepth::Graph::from_edges(n, edges);
}

/// All exponent vectors with entries in [0, bound], odometer order.
inline std::vector<symdepth::Monomial> monomials_up_to(int n, int bound) {
  std::vector<symdepth::Monomial> out;
  std::vector<int> e(n, 0);
  while (true) {
    out.emplace_back(e);
    int j = 0;
    for (; j < n; ++j) {
      if (e[j] < bound) {
        ++e[j];
        break;
      }
      e[j] = 0;
    }
    if (j == n) break;
  }
  return out;
}

/// Membership in I^s by direct splitting: some generator divides m and the
/// quotient lies in I^{s-1}.
inline bool brute_power_member(const symdepth::MonomialIdeal& ideal, const symdepth::Monomial& m,
                               int s) {
  if (s <= 0) return true;
  for (const auto& g : ideal.generators()) {
    if (!g.divides(m)) continue;
    std::vector<int> rest(ideal.dimension());
    for (int j = 0; j < ideal.dimension(); ++j) rest[j] = m.exponent(j) - g.exponent(j);
    if (brute_power_member(ideal, symdepth::Monomial(rest), s - 1)) return true;
  }
  return false;
}

inline bool subset_is_cover(const symdepth::Graph& g, std::uint64_t set) {
  for (auto [u, v] : g.edges())
    if (!((set >> u) & 1) && !((set >> v) & 1)) return false;
  return true;
}

/// Inclusion-minimal vertex covers by scanning all 2^n subsets.
inline std::vector<std::vector<int>> brute_minimal_covers(const symdepth::Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::uint64_t> covers;
  for (std::uint64_t set = 0; set < (1ull << n); ++set)
    if (subset_is_cover(g, set)) covers.push_back(set);
  std::vector<std::vector<int>> out;
  for (std::uint64_t c : covers) {
    bool minimal = true;
    for (std::uint64_t d : covers)
      if (d != c && (d & c) == d) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if ((c >> v) & 1) verts.push_back(v);
    out.push_back(std::move(verts));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

/// Symbolic-power membership straight from the definition: for every minimal
/// vertex cover C, the total degree of m on C is at least s.
inline bool brute_symbolic_member(const symdepth::Graph& g, int s, const symdepth::Monomial& m) {
  if (s <= 0) return true;
  if (g.edge_count() == 0) return false;
  for (const auto& cover : brute_minimal_covers(g)) {
    int total = 0;
    for (int v : cover) total += m.exponent(v);
    if (total < s) return false;
  }
  return true;
}

/// Star-packing number by scanning all center sets for pairwise-disjoint
/// closed neighborhoods.
inline int brute_alpha2(const symdepth::Graph& g) {
  const int n = g.vertex_count();
  int best = 0;
  for (std::uint64_t set = 0; set < (1ull << n); ++set) {
    std::uint64_t used = 0;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (!((set >> v) & 1)) continue;
      std::uint64_t ball = g.closed_neighbors(v);
      if (used & ball) ok = false;
      used |= ball;
    }
    if (ok) best = std::max(best, static_cast<int>(__builtin_popcountll(set)));
  }
  return best;
}

/// Lexicographically smallest maximum star packing, as a sorted center list.
inline std::vector<int> brute_alpha2_witness(const symdepth::Graph& g) {
  const int n = g.vertex_count();
  const int target = brute_alpha2(g);
  std::vector<int> best;
  for (std::uint64_t set = 0; set < (1ull << n); ++set) {
    if (__builtin_popcountll(set) != target) continue;
    std::uint64_t used = 0;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (!((set >> v) & 1)) continue;
      std::uint64_t ball = g.closed_neighbors(v);
      if (used & ball) ok = false;
      used |= ball;
    }
    if (!ok) continue;
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if ((set >> v) & 1) verts.push_back(v);
    if (best.empty() || verts < best) best = verts;
  }
  return best;
}

/// Chordality by looking for an induced cycle of length >= 4: every vertex
/// subset whose induced subgraph is connected and 2-regular is a cycle.
inline bool brute_is_chordal(const symdepth::Graph& g) {
  const int n = g.vertex_count();
  for (std::uint64_t set = 0; set < (1ull << n); ++set) {
    const int size = __builtin_popcountll(set);
    if (size < 4) continue;
    bool two_regular = true;
    for (int v = 0; v < n && two_regular; ++v) {
      if (!((set >> v) & 1)) continue;
      if (__builtin_popcountll(g.neighbors(v) & set) != 2) two_regular = false;
    }
    if (!two_regular) continue;
    // connectivity of the induced subgraph
    int start = __builtin_ctzll(set);
    std::uint64_t seen = 1ull << start, frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      for (int v = 0; v < n; ++v)
        if ((frontier >> v) & 1) next |= g.neighbors(v) & set;
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen == set) return false;  // induced cycle found
  }
  return true;
}

}  // namespace testutil
