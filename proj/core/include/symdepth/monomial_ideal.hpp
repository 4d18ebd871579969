#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symdepth/monomial.hpp"

namespace symdepth {

/// A monomial ideal presented by its unique minimal generators, kept as a
/// divisibility antichain in canonical order. The empty generator set is the
/// zero ideal; the set {1} is the unit ideal S.
class MonomialIdeal {
public:
  MonomialIdeal() = default;

  static MonomialIdeal zero(int n);
  static MonomialIdeal unit_ideal(int n);

  /// Canonicalize an arbitrary generating set: drop duplicates and every
  /// generator divisible by another one. Idempotent.
  static MonomialIdeal from_generators(int n, std::vector<Monomial> gens);

  int dimension() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }

  std::string to_string() const;
  static MonomialIdeal parse(const std::string& text, int n);

  bool operator==(const MonomialIdeal&) const = default;

private:
  int n_ = 0;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(int n, std::vector<Monomial> gens);

MonomialIdeal sum(const MonomialIdeal& i, const MonomialIdeal& j);
MonomialIdeal product(const MonomialIdeal& i, const MonomialIdeal& j);
MonomialIdeal power(const MonomialIdeal& i, int s);

/// Pairwise-lcm intersection: m lies in the result iff it lies in both inputs.
MonomialIdeal intersect(const MonomialIdeal& i, const MonomialIdeal& j);

/// Left fold of intersect with minimalization after every step. The empty
/// fold is the unit ideal. When a cap is given, any intermediate result with
/// more minimal generators than the cap aborts with an error.
MonomialIdeal intersect_all(const std::vector<MonomialIdeal>& ideals, int n,
                            std::optional<int> generator_cap = std::nullopt);

/// (I : u), generated by g / gcd(g, u) over the generators g of I.
MonomialIdeal colon(const MonomialIdeal& i, const Monomial& u);

bool contains(const MonomialIdeal& i, const Monomial& m);
bool equals(const MonomialIdeal& i, const MonomialIdeal& j);

inline MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
  return sum(a, b);
}
inline MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b) {
  return product(a, b);
}

}  // namespace symdepth
