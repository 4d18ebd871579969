#pragma once

#include <cstdint>
#include <vector>

#include "symdepth/certificate.hpp"
#include "symdepth/graph.hpp"
#include "symdepth/monomial_ideal.hpp"
#include "symdepth/rng.hpp"

namespace symdepth {

/// Each of the C(n,2) pairs independently with the given probability, pairs
/// drawn in lexicographic order.
Graph erdos_renyi(int n, double edge_probability, Rng& rng);

/// Uniform labeled tree on n >= 1 vertices via a random Prüfer sequence.
Graph random_tree(int n, Rng& rng);

/// Random chordal graph: vertices arrive one at a time, each attached to a
/// clique grown greedily inside the neighborhood of a random anchor among the
/// earlier vertices (possibly to nothing). Reverse arrival order is a perfect
/// elimination ordering by construction.
Graph random_chordal(int n, Rng& rng);

/// Decode a Prüfer sequence of length n-2 into its labeled tree. n = 1 and
/// n = 2 take the empty sequence.
Graph prufer_decode(int n, const std::vector<int>& sequence);

/// Exhaustive labeled graphs on n vertices: codes are bitmasks over the
/// C(n,2) pairs in lexicographic order, so code 0 is edgeless and
/// labeled_graph_count(n) - 1 is complete. Requires n <= 11.
std::uint64_t labeled_graph_count(int n);
Graph labeled_graph(int n, std::uint64_t code);

/// Exhaustive labeled trees on n >= 1 vertices, indexed by writing the code
/// in base n as a Prüfer sequence. Requires n <= 11.
std::uint64_t labeled_tree_count(int n);
Graph labeled_tree(int n, std::uint64_t code);

/// Random monomial ideal: up to max_generators non-unit monomials with
/// exponents in [0, max_exponent], minimalized.
MonomialIdeal random_monomial_ideal(int n, int max_generators, int max_exponent, Rng& rng);

/// A random certificate that check_certificate is guaranteed to accept
/// against the ideal: witnesses are drawn from the variables that appear with
/// degree <= 1 in every generator, and a row is kept only when those can
/// cover all generators its center divides. May be empty (q = 0).
DepthCertificate random_valid_certificate(const MonomialIdeal& ideal, Rng& rng);

}  // namespace symdepth
