#include "symdepth/homology.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace symdepth {

DenseMatrix boundary_matrix(const SimplicialComplex& k, int d) {
  if (d < 0) throw std::invalid_argument("boundary_matrix: dimension must be >= 0");
  std::vector<std::uint64_t> domain = k.faces_with_vertex_count(d + 1);
  std::vector<std::uint64_t> codomain = k.faces_with_vertex_count(d);
  DenseMatrix m(codomain.size(), std::vector<long long>(domain.size(), 0));
  for (std::size_t col = 0; col < domain.size(); ++col) {
    std::uint64_t face = domain[col];
    std::uint64_t rest = face;
    int sign = 1;
    while (rest) {
      std::uint64_t low = rest & (~rest + 1);
      rest ^= low;
      std::uint64_t sub = face ^ low;
      auto it = std::lower_bound(codomain.begin(), codomain.end(), sub);
      // Downward closure guarantees the subface is present.
      m[static_cast<std::size_t>(it - codomain.begin())][col] = sign;
      sign = -sign;
    }
  }
  return m;
}

std::vector<int> reduced_homology_ranks(const SimplicialComplex& k, const FieldSpec& f) {
  if (k.is_void()) return {};
  const int dim = k.dimension();
  // chain_dim[d+1] = number of faces with d+1 vertices, d from -1 to dim.
  std::vector<int> chain_dim(static_cast<std::size_t>(dim + 2), 0);
  std::vector<int> boundary_rank(static_cast<std::size_t>(dim + 3), 0);
  for (int d = -1; d <= dim; ++d) {
    chain_dim[static_cast<std::size_t>(d + 1)] =
        static_cast<int>(k.faces_with_vertex_count(d + 1).size());
  }
  for (int d = 0; d <= dim; ++d) {
    boundary_rank[static_cast<std::size_t>(d + 1)] = exact_rank(boundary_matrix(k, d), f);
  }
  std::vector<int> ranks(static_cast<std::size_t>(dim + 2), 0);
  for (int d = -1; d <= dim; ++d) {
    ranks[static_cast<std::size_t>(d + 1)] = chain_dim[static_cast<std::size_t>(d + 1)] -
                                             boundary_rank[static_cast<std::size_t>(d + 1)] -
                                             boundary_rank[static_cast<std::size_t>(d + 2)];
  }
  return ranks;
}

}  // namespace symdepth
