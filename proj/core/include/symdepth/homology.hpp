#pragma once

#include <vector>

#include "symdepth/exact_rank.hpp"
#include "symdepth/field.hpp"
#include "symdepth/simplicial_complex.hpp"

namespace symdepth {

/// Ranks of reduced simplicial homology over the field, indexed from -1:
/// result[d+1] is the rank of H̃_d. The augmented chain complex runs down to
/// the empty face, so the irrelevant complex {∅} has H̃_{-1} = 1 and the void
/// complex has no homology at all (empty result).
std::vector<int> reduced_homology_ranks(const SimplicialComplex& k, const FieldSpec& f);

/// Boundary matrix from (d)-dimensional faces to (d-1)-dimensional faces of
/// the complex, rows indexed by the smaller faces; exposed for tests.
DenseMatrix boundary_matrix(const SimplicialComplex& k, int d);

}  // namespace symdepth
