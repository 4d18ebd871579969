#pragma once

#include <optional>
#include <vector>

#include "symdepth/field.hpp"
#include "symdepth/graph.hpp"
#include "symdepth/report.hpp"

namespace symdepth {

/// depth S/I(G)^{(s)} against the packing bound α₂(G) - s + 1. The bound is
/// guaranteed when G is chordal (any s), and for every graph at s = 1 (the
/// edge-ideal bound depth >= α₂) and s = 2; everything else is exploratory
/// and labeled so. require_chordal makes a non-chordal input an error.
VerificationReport check_symbolic_depth_bound(const Graph& g, int s, bool require_chordal,
                                              const FieldSpec& field = {},
                                              std::optional<int> generator_cap = 5000);

/// depth S/(I(H)^{(s)} + I(H')) against α₂(H ∪ H') - s + 1. Requires H and
/// the union chordal and the edge sets disjoint; violations of the
/// hypotheses are errors, not verdicts.
VerificationReport check_mixed_bound(const Graph& h, const Graph& h_prime, int s,
                                     const FieldSpec& field = {},
                                     std::optional<int> generator_cap = 5000);

/// The colon identity (I^{(k)} : xy) = (I^{(k-1)} : x) ∩ (I^{(k-1)} : y) for
/// an edge xy and k >= 2, checked as exact ideal equality.
bool check_colon_identity(const Graph& g, int u, int v, int k,
                          std::optional<int> generator_cap = 5000);

enum class DeletionLemma {
  /// A inside the union of closed neighborhoods of W:
  /// α₂(G∖A) >= α₂(G) - |W|.
  kClosedNeighborhoods,
  /// W = {x1..xd} a clique, A inside the union of open neighborhoods of W
  /// with N(x1)∖W ⊆ A and x1 ∉ A: α₂(G∖A) >= α₂(G) - d + 1.
  kCliqueOpenNeighborhoods,
};

/// Exact packing numbers before and after deleting A. In the report the
/// depth column carries α₂(G∖A), the achieved left-hand side.
VerificationReport check_packing_deletion_lemmas(const Graph& g, const std::vector<int>& w,
                                                 const std::vector<int>& a, DeletionLemma mode);

/// Exact equality of ordinary and symbolic powers of the edge ideal of a
/// forest; cyclic inputs are rejected.
bool check_forest_power_coincidence(const Graph& g, int s,
                                    std::optional<int> generator_cap = 5000);

}  // namespace symdepth
