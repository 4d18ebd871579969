#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symdepth/field.hpp"
#include "symdepth/monomial_ideal.hpp"

namespace symdepth {

/// Multigraded Betti numbers of a quotient S/I: entries map a homological
/// degree i and a multidegree b to a positive rank. Only nonzero ranks are
/// stored; every stored multidegree is the lcm of some subset of generators.
class BettiTable {
 public:
  using Key = std::pair<int, std::vector<int>>;

  BettiTable() = default;
  explicit BettiTable(int n) : n_(n) {}

  /// All tables produced here follow the quotient convention, i.e. they
  /// describe S/I (so the (0, 0) entry of a proper ideal is 1).
  static constexpr const char* convention() { return "S/I"; }

  int dimension() const { return n_; }
  const std::map<Key, int>& entries() const { return entries_; }

  void add(int i, const std::vector<int>& b, int rank);
  int entry(int i, const std::vector<int>& b) const;

  /// Total Betti number: sum over multidegrees in homological degree i.
  int total(int i) const;

  /// Largest homological degree with a nonzero entry.
  int projective_dimension() const;

  std::string to_json() const;
  static BettiTable from_json(const std::string& text);

  bool operator==(const BettiTable&) const = default;

 private:
  int n_ = 0;
  std::map<Key, int> entries_;
};

/// Multigraded Betti numbers of S/I from reduced homology of upper-Koszul
/// complexes, swept over the finite exponent grid of the generators. Grid
/// points that are not the lcm of the generators dividing them support only
/// cones and are skipped. Rejects the unit ideal.
BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field);

/// Independent oracle: Betti numbers of S/I read off the Taylor complex of
/// the generators, tensored with the residue field and decomposed into
/// multidegree strands. Requires at most 14 generators.
BettiTable betti_via_taylor(const MonomialIdeal& ideal, const FieldSpec& field);

/// depth S/I = (number of variables) - (projective dimension of S/I). The
/// zero ideal has depth n; the unit ideal is rejected.
int depth(const MonomialIdeal& ideal, const FieldSpec& field);

}  // namespace symdepth
