#pragma once

#include <cstdint>
#include <vector>

#include "symdepth/monomial_ideal.hpp"

namespace symdepth {

/// A finite simplicial complex on a universe of labeled vertices. Faces are
/// stored as bitmasks over positions in the universe. The void complex (no
/// faces whatsoever) and the irrelevant complex {∅} are distinct values: the
/// former has no faces, the latter contains exactly the empty face.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// `faces` are bitmasks over positions in `universe`; the family must be
  /// closed under taking subsets (checked lazily via is_downward_closed).
  SimplicialComplex(std::vector<int> universe, std::vector<std::uint64_t> faces);

  static SimplicialComplex void_complex(std::vector<int> universe);
  static SimplicialComplex irrelevant_complex(std::vector<int> universe);

  const std::vector<int>& universe() const { return universe_; }
  bool is_void() const { return faces_.empty(); }
  bool is_irrelevant() const { return faces_.size() == 1 && faces_[0] == 0; }

  /// Dimension of the complex: -1 for {∅}, and by convention -2 for the void
  /// complex (it has no faces at all).
  int dimension() const;

  /// All faces with exactly `k` vertices, sorted ascending as masks.
  std::vector<std::uint64_t> faces_with_vertex_count(int k) const;

  std::size_t face_count() const { return faces_.size(); }
  bool has_face(std::uint64_t mask) const;
  bool is_downward_closed() const;

 private:
  std::vector<int> universe_;
  std::vector<std::uint64_t> faces_;  // sorted, deduplicated
};

/// The upper-Koszul complex of I at multidegree b: vertices are the support
/// of b, and a subset τ is a face exactly when x^(b-τ) lies in I. Void when
/// x^b itself is not in I.
SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const std::vector<int>& b);

}  // namespace symdepth
