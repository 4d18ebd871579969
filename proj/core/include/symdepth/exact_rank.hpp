#pragma once

#include <vector>

#include "symdepth/field.hpp"

namespace symdepth {

using DenseMatrix = std::vector<std::vector<long long>>;

/// Exact matrix rank over the given field. Characteristic 0 runs
/// fraction-free (Bareiss) elimination over the integers, escalating to
/// arbitrary precision if intermediate minors outgrow machine words;
/// characteristic p runs ordinary elimination with modular inverses.
int exact_rank(const DenseMatrix& m, const FieldSpec& field);

}  // namespace symdepth
