#include "symdepth/generators.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace symdepth {

Graph erdos_renyi(int n, double edge_probability, Rng& rng) {
  if (edge_probability < 0.0 || edge_probability > 1.0)
    throw std::invalid_argument("erdos_renyi: probability outside [0, 1]");
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.bernoulli(edge_probability)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph prufer_decode(int n, const std::vector<int>& sequence) {
  if (n < 1) throw std::invalid_argument("prufer_decode: n must be >= 1");
  std::size_t expected = n >= 2 ? static_cast<std::size_t>(n - 2) : 0;
  if (sequence.size() != expected)
    throw std::invalid_argument("prufer_decode: sequence length must be n-2");
  for (int s : sequence) {
    if (s < 0 || s >= n) throw std::invalid_argument("prufer_decode: label out of range");
  }
  Graph g(n);
  if (n == 1) return g;

  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int s : sequence) ++degree[static_cast<std::size_t>(s)];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
  }
  for (int s : sequence) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    g.add_edge(leaf, s);
    if (--degree[static_cast<std::size_t>(s)] == 1) leaves.insert(s);
  }
  int a = *leaves.begin();
  int b = *std::next(leaves.begin());
  g.add_edge(a, b);
  return g;
}

Graph random_tree(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
  std::vector<int> seq;
  for (int i = 0; i + 2 < n; ++i) seq.push_back(rng.uniform_int(0, n - 1));
  return prufer_decode(n, seq);
}

Graph random_chordal(int n, Rng& rng) {
  if (n < 0) throw std::invalid_argument("random_chordal: n must be >= 0");
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    if (rng.bernoulli(0.15)) continue;  // v starts its own component
    int anchor = rng.uniform_int(0, v - 1);
    std::uint64_t clique = std::uint64_t{1} << anchor;
    std::uint64_t candidates = g.neighbors(anchor) & ((std::uint64_t{1} << v) - 1);
    while (candidates != 0 && rng.bernoulli(0.5)) {
      std::vector<int> pool;
      std::uint64_t rest = candidates;
      while (rest) {
        pool.push_back(std::countr_zero(rest));
        rest &= rest - 1;
      }
      int w = pool[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(pool.size()) - 1))];
      clique |= std::uint64_t{1} << w;
      candidates &= g.neighbors(w);
    }
    std::uint64_t rest = clique;
    while (rest) {
      g.add_edge(v, std::countr_zero(rest));
      rest &= rest - 1;
    }
  }
  return g;
}

std::uint64_t labeled_graph_count(int n) {
  if (n < 0 || n > 11) throw std::invalid_argument("labeled_graph_count: n must be in [0, 11]");
  int pairs = n * (n - 1) / 2;
  return std::uint64_t{1} << pairs;
}

Graph labeled_graph(int n, std::uint64_t code) {
  if (code >= labeled_graph_count(n))
    throw std::invalid_argument("labeled_graph: code out of range");
  Graph g(n);
  int k = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++k) {
      if (code & (std::uint64_t{1} << k)) g.add_edge(u, v);
    }
  }
  return g;
}

std::uint64_t labeled_tree_count(int n) {
  if (n < 1 || n > 11) throw std::invalid_argument("labeled_tree_count: n must be in [1, 11]");
  std::uint64_t count = 1;
  for (int i = 0; i + 2 < n; ++i) count *= static_cast<std::uint64_t>(n);
  return count;
}

Graph labeled_tree(int n, std::uint64_t code) {
  if (code >= labeled_tree_count(n))
    throw std::invalid_argument("labeled_tree: code out of range");
  std::vector<int> seq;
  for (int i = 0; i + 2 < n; ++i) {
    seq.push_back(static_cast<int>(code % static_cast<std::uint64_t>(n)));
    code /= static_cast<std::uint64_t>(n);
  }
  return prufer_decode(n, seq);
}

MonomialIdeal random_monomial_ideal(int n, int max_generators, int max_exponent, Rng& rng) {
  if (n < 1 || max_generators < 1 || max_exponent < 1)
    throw std::invalid_argument("random_monomial_ideal: parameters must be positive");
  int count = rng.uniform_int(1, max_generators);
  std::vector<Monomial> gens;
  for (int i = 0; i < count; ++i) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    do {
      for (int j = 0; j < n; ++j) exps[static_cast<std::size_t>(j)] = rng.uniform_int(0, max_exponent);
    } while (std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; }));
    gens.emplace_back(exps);
  }
  return MonomialIdeal::from_generators(n, std::move(gens));
}

DepthCertificate random_valid_certificate(const MonomialIdeal& ideal, Rng& rng) {
  const int n = ideal.dimension();
  std::vector<bool> degree_safe(static_cast<std::size_t>(n), true);
  for (const Monomial& g : ideal.generators()) {
    for (int j = 0; j < n; ++j) {
      if (g.exponent(j) > 1) degree_safe[static_cast<std::size_t>(j)] = false;
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) order[static_cast<std::size_t>(j)] = j;
  for (int j = n - 1; j > 0; --j)
    std::swap(order[static_cast<std::size_t>(j)],
              order[static_cast<std::size_t>(rng.uniform_int(0, j))]);

  DepthCertificate cert;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int center : order) {
    if (used[static_cast<std::size_t>(center)]) continue;
    std::vector<int> witnesses;
    std::vector<bool> local_used(used);
    local_used[static_cast<std::size_t>(center)] = true;
    bool viable = true;
    for (const Monomial& g : ideal.generators()) {
      if (g.exponent(center) < 1) continue;
      bool covered = false;
      for (int w : witnesses) {
        if (g.exponent(w) >= 1) {
          covered = true;
          break;
        }
      }
      if (covered) continue;
      std::vector<int> options;
      for (int j = 0; j < n; ++j) {
        if (g.exponent(j) >= 1 && degree_safe[static_cast<std::size_t>(j)] &&
            !local_used[static_cast<std::size_t>(j)])
          options.push_back(j);
      }
      if (options.empty()) {
        viable = false;
        break;
      }
      int w = options[static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<int>(options.size()) - 1))];
      witnesses.push_back(w);
      local_used[static_cast<std::size_t>(w)] = true;
    }
    if (!viable) continue;
    cert.rows.push_back(CertificateRow{center, witnesses});
    used = local_used;
    if (rng.bernoulli(0.25)) break;  // vary the certificate size
  }
  return cert;
}

}  // namespace symdepth
