#include "symdepth/simplicial_complex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "symdepth/monomial.hpp"

namespace symdepth {

SimplicialComplex::SimplicialComplex(std::vector<int> universe, std::vector<std::uint64_t> faces)
    : universe_(std::move(universe)), faces_(std::move(faces)) {
  if (universe_.size() > 64) throw std::invalid_argument("SimplicialComplex: universe too large");
  std::uint64_t bound = universe_.size() == 64 ? ~std::uint64_t{0}
                                               : (std::uint64_t{1} << universe_.size()) - 1;
  for (std::uint64_t f : faces_) {
    if (f & ~bound) throw std::invalid_argument("SimplicialComplex: face outside universe");
  }
  std::sort(faces_.begin(), faces_.end());
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
}

SimplicialComplex SimplicialComplex::void_complex(std::vector<int> universe) {
  return SimplicialComplex(std::move(universe), {});
}

SimplicialComplex SimplicialComplex::irrelevant_complex(std::vector<int> universe) {
  return SimplicialComplex(std::move(universe), {0});
}

int SimplicialComplex::dimension() const {
  if (faces_.empty()) return -2;
  int max_size = 0;
  for (std::uint64_t f : faces_) max_size = std::max(max_size, std::popcount(f));
  return max_size - 1;
}

std::vector<std::uint64_t> SimplicialComplex::faces_with_vertex_count(int k) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f : faces_) {
    if (std::popcount(f) == k) out.push_back(f);
  }
  return out;
}

bool SimplicialComplex::has_face(std::uint64_t mask) const {
  return std::binary_search(faces_.begin(), faces_.end(), mask);
}

bool SimplicialComplex::is_downward_closed() const {
  for (std::uint64_t f : faces_) {
    std::uint64_t rest = f;
    while (rest) {
      std::uint64_t low = rest & (~rest + 1);
      rest ^= low;
      if (!has_face(f ^ low)) return false;
    }
  }
  return true;
}

SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const std::vector<int>& b) {
  if (static_cast<int>(b.size()) != ideal.dimension())
    throw std::invalid_argument("upper_koszul_complex: multidegree dimension mismatch");
  for (int e : b) {
    if (e < 0) throw std::invalid_argument("upper_koszul_complex: negative multidegree");
  }

  std::vector<int> support;
  for (int j = 0; j < static_cast<int>(b.size()); ++j) {
    if (b[j] > 0) support.push_back(j);
  }

  if (!contains(ideal, Monomial(b))) return SimplicialComplex::void_complex(support);

  // A subset τ of the support is a face iff some generator divides x^(b-τ),
  // i.e. some generator g ≤ b avoids every coordinate where g is tight
  // against b. Collect the tight-coordinate masks of the dividing generators;
  // τ is a face iff it misses one of them entirely.
  std::vector<std::uint64_t> tight_masks;
  for (const Monomial& g : ideal.generators()) {
    bool divides_b = true;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (g.exponent(static_cast<int>(j)) > b[j]) {
        divides_b = false;
        break;
      }
    }
    if (!divides_b) continue;
    std::uint64_t tight = 0;
    for (std::size_t pos = 0; pos < support.size(); ++pos) {
      int j = support[pos];
      if (g.exponent(j) == b[static_cast<std::size_t>(j)]) tight |= std::uint64_t{1} << pos;
    }
    tight_masks.push_back(tight);
  }
  // Drop dominated masks: if tight(g) ⊆ tight(h), h never admits a face g
  // does not.
  std::sort(tight_masks.begin(), tight_masks.end(),
            [](std::uint64_t a, std::uint64_t c) { return std::popcount(a) < std::popcount(c); });
  std::vector<std::uint64_t> minimal;
  for (std::uint64_t m : tight_masks) {
    bool dominated = false;
    for (std::uint64_t kept : minimal) {
      if ((kept & ~m) == 0) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(m);
  }

  std::vector<std::uint64_t> faces;
  std::uint64_t full = support.size() == 64 ? ~std::uint64_t{0}
                                            : (std::uint64_t{1} << support.size()) - 1;
  for (std::uint64_t tau = 0;; ++tau) {
    for (std::uint64_t m : minimal) {
      if ((tau & m) == 0) {
        faces.push_back(tau);
        break;
      }
    }
    if (tau == full) break;
  }
  return SimplicialComplex(std::move(support), std::move(faces));
}

}  // namespace symdepth
