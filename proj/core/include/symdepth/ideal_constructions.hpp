#pragma once

#include <optional>
#include <vector>

#include "symdepth/graph.hpp"
#include "symdepth/monomial_ideal.hpp"

namespace symdepth {

/// Edge ideal I(G): one squarefree quadratic generator per edge; the zero
/// ideal when G has no edges.
MonomialIdeal edge_ideal(const Graph& g);

/// s-th power of the prime of a vertex cover: all monomials of total degree s
/// supported on the cover. Membership is a degree sum over the cover, which
/// is the independent test used to validate the intersection pipeline.
MonomialIdeal prime_power(const std::vector<int>& cover, int s, int n);

/// The minimal vertex covers of G together with their variable primes; the
/// intersection of the primes is the edge ideal.
struct CoverPrimeDecomposition {
  std::vector<std::vector<int>> covers;
  std::vector<MonomialIdeal> primes;
};
CoverPrimeDecomposition cover_prime_decomposition(const Graph& g);

/// Symbolic power I(G)^{(s)}: the intersection of prime_power(C, s) over all
/// minimal vertex covers C, folded in cover order with minimalization at each
/// step. By convention the unit ideal for s <= 0; the zero ideal for edgeless
/// G and s >= 1. The cap bounds intermediate generator counts.
MonomialIdeal symbolic_power(const Graph& g, int s, std::optional<int> generator_cap = 5000);

/// I(H)^{(s)} + I(H') for graphs on a shared vertex set with disjoint edge
/// sets (checked).
MonomialIdeal mixed_ideal(const Graph& h, const Graph& h_prime, int s,
                          std::optional<int> generator_cap = 5000);

}  // namespace symdepth
