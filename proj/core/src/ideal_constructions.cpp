#include "symdepth/ideal_constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace symdepth {

MonomialIdeal edge_ideal(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Monomial> gens;
  for (auto [u, v] : g.edges()) {
    gens.push_back(Monomial::variable(n, u) * Monomial::variable(n, v));
  }
  return MonomialIdeal::from_generators(n, std::move(gens));
}

namespace {

void degree_s_monomials(const std::vector<int>& cover, std::size_t from, int remaining,
                        std::vector<int>& exponents, std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.emplace_back(exponents);
    return;
  }
  if (from == cover.size()) return;
  if (from + 1 == cover.size()) {
    int j = cover[from];
    exponents[static_cast<std::size_t>(j)] += remaining;
    out.emplace_back(exponents);
    exponents[static_cast<std::size_t>(j)] -= remaining;
    return;
  }
  int j = cover[from];
  for (int take = remaining; take >= 0; --take) {
    exponents[static_cast<std::size_t>(j)] += take;
    degree_s_monomials(cover, from + 1, remaining - take, exponents, out);
    exponents[static_cast<std::size_t>(j)] -= take;
  }
}

}  // namespace

MonomialIdeal prime_power(const std::vector<int>& cover, int s, int n) {
  if (cover.empty()) throw std::invalid_argument("prime_power: empty vertex cover");
  if (s < 1) throw std::invalid_argument("prime_power: s must be >= 1");
  std::vector<int> sorted(cover);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("prime_power: repeated vertex in cover");
  if (sorted.front() < 0 || sorted.back() >= n)
    throw std::invalid_argument("prime_power: vertex out of range");

  std::vector<Monomial> gens;
  std::vector<int> exponents(static_cast<std::size_t>(n), 0);
  degree_s_monomials(sorted, 0, s, exponents, gens);
  return MonomialIdeal::from_generators(n, std::move(gens));
}

CoverPrimeDecomposition cover_prime_decomposition(const Graph& g) {
  CoverPrimeDecomposition out;
  out.covers = minimal_vertex_covers(g);
  for (const std::vector<int>& c : out.covers) {
    if (c.empty()) continue;  // edgeless graph: the empty cover has no prime
    out.primes.push_back(prime_power(c, 1, g.vertex_count()));
  }
  return out;
}

MonomialIdeal symbolic_power(const Graph& g, int s, std::optional<int> generator_cap) {
  const int n = g.vertex_count();
  if (s <= 0) return MonomialIdeal::unit_ideal(n);
  if (g.edge_count() == 0) return MonomialIdeal::zero(n);
  std::vector<MonomialIdeal> powers;
  for (const std::vector<int>& c : minimal_vertex_covers(g)) {
    powers.push_back(prime_power(c, s, n));
  }
  return intersect_all(powers, n, generator_cap);
}

MonomialIdeal mixed_ideal(const Graph& h, const Graph& h_prime, int s,
                          std::optional<int> generator_cap) {
  if (h.vertex_count() != h_prime.vertex_count())
    throw std::invalid_argument("mixed_ideal: graphs must share a vertex set");
  if (s < 1) throw std::invalid_argument("mixed_ideal: s must be >= 1");
  for (auto [u, v] : h.edges()) {
    if (h_prime.has_edge(u, v))
      throw std::invalid_argument("mixed_ideal: edge sets must be disjoint");
  }
  return symbolic_power(h, s, generator_cap) + edge_ideal(h_prime);
}

}  // namespace symdepth
