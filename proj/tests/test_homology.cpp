#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "symdepth/betti.hpp"
#include "symdepth/exact_rank.hpp"
#include "symdepth/field.hpp"
#include "symdepth/generators.hpp"
#include "symdepth/homology.hpp"
#include "symdepth/ideal_constructions.hpp"
#include "symdepth/rng.hpp"
#include "symdepth/simplicial_complex.hpp"

using namespace symdepth;

namespace {

/// Reference rank: plain Gaussian elimination over exact rationals.
int reference_rank(const DenseMatrix& m) {
  if (m.empty() || m[0].empty()) return 0;
  std::vector<std::vector<mpq_class>> a(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (long long v : m[r]) a[r].emplace_back(static_cast<long>(v));
  const int rows = static_cast<int>(a.size()), cols = static_cast<int>(a[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == -1) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      mpq_class f = a[r][col] / a[rank][col];
      for (int c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

DenseMatrix random_matrix(Rng& rng, int rows, int cols, int lo, int hi) {
  DenseMatrix m(rows, std::vector<long long>(cols));
  for (auto& row : m)
    for (auto& v : row) v = rng.uniform_int(lo, hi);
  return m;
}

}  // namespace

TEST_CASE("exact rank on fixed matrices") {
  CHECK(exact_rank({}, FieldSpec::rationals()) == 0);
  CHECK(exact_rank({{0, 0}, {0, 0}}, FieldSpec::rationals()) == 0);
  CHECK(exact_rank({{1, 0}, {0, 1}}, FieldSpec::rationals()) == 2);
  CHECK(exact_rank({{1, 2}, {2, 4}}, FieldSpec::rationals()) == 1);
  CHECK(exact_rank({{2, 0}, {0, 3}}, FieldSpec::gf(2)) == 1);
  CHECK(exact_rank({{2, 0}, {0, 3}}, FieldSpec::gf(3)) == 1);
  CHECK(exact_rank({{6}}, FieldSpec::gf(2)) == 0);
  CHECK_THROWS_AS(exact_rank({{1}, {1, 2}}, FieldSpec::rationals()), std::invalid_argument);
  CHECK_THROWS_AS(exact_rank({{1}}, FieldSpec{4}), std::invalid_argument);
}

TEST_CASE("exact rank agrees with rational elimination on random matrices") {
  Rng rng(101);
  for (int trial = 0; trial < 80; ++trial) {
    DenseMatrix m = random_matrix(rng, rng.uniform_int(1, 8), rng.uniform_int(1, 8), -3, 3);
    CHECK(exact_rank(m, FieldSpec::rationals()) == reference_rank(m));
  }
}

TEST_CASE("rank over GF(p) lower-bounds and can undercut rational rank") {
  // 2x2 with determinant 2: invertible over Q and GF(3), singular over GF(2).
  DenseMatrix m = {{1, 1}, {1, 3}};
  CHECK(exact_rank(m, FieldSpec::rationals()) == 2);
  CHECK(exact_rank(m, FieldSpec::gf(3)) == 2);
  CHECK(exact_rank(m, FieldSpec::gf(2)) == 1);
}

TEST_CASE("exact rank survives word overflow via bignum retry") {
  const long long big = (1ll << 61) + 3;
  DenseMatrix m = {{big, big - 7, 2}, {big - 7, big, 5}, {2, 5, 0}};
  CHECK(exact_rank(m, FieldSpec::rationals()) == reference_rank(m));
  DenseMatrix singular = {{big, 2 * (big / 2), 0}, {big, big, 0}, {0, 0, 0}};
  CHECK(exact_rank(singular, FieldSpec::rationals()) == reference_rank(singular));
}

TEST_CASE("complex construction and dimensions") {
  SimplicialComplex void_c = SimplicialComplex::void_complex({0, 1});
  CHECK(void_c.dimension() == -2);
  CHECK(void_c.is_void());
  CHECK(void_c.face_count() == 0);
  SimplicialComplex irr = SimplicialComplex::irrelevant_complex({0, 1});
  CHECK(irr.dimension() == -1);
  CHECK(irr.is_irrelevant());
  SimplicialComplex seg({0, 1}, {0b00, 0b01, 0b10, 0b11});
  CHECK(seg.dimension() == 1);
  CHECK(seg.is_downward_closed());
  CHECK(seg.has_face(0b11));
  CHECK(!SimplicialComplex({0, 1}, {0b11}).is_downward_closed());
}

TEST_CASE("reduced homology of model complexes") {
  // Void complex: no homology at all.
  CHECK(reduced_homology_ranks(SimplicialComplex::void_complex({0, 1, 2}),
                               FieldSpec::rationals())
            .empty());
  // Irrelevant complex {∅}: one unit of homology in degree -1.
  auto irr = reduced_homology_ranks(SimplicialComplex::irrelevant_complex({0, 1, 2}),
                                    FieldSpec::rationals());
  REQUIRE(!irr.empty());
  CHECK(irr[0] == 1);
  // A point is acyclic.
  auto pt = reduced_homology_ranks(SimplicialComplex({0}, {0b0, 0b1}),
                                   FieldSpec::rationals());
  for (int r : pt) CHECK(r == 0);
  // Two points: one unit in degree 0.
  auto two = reduced_homology_ranks(SimplicialComplex({0, 1}, {0b00, 0b01, 0b10}),
                                    FieldSpec::rationals());
  REQUIRE(two.size() >= 2);
  CHECK(two[0] == 0);
  CHECK(two[1] == 1);
}

TEST_CASE("boundary of the k-simplex has sphere homology") {
  for (int k = 2; k <= 5; ++k) {
    std::vector<int> universe;
    for (int v = 0; v <= k; ++v) universe.push_back(v);
    std::vector<std::uint64_t> faces;
    const std::uint64_t full = (1ull << (k + 1)) - 1;
    for (std::uint64_t f = 0; f <= full; ++f)
      if (f != full) faces.push_back(f);
    auto ranks = reduced_homology_ranks(SimplicialComplex(universe, faces),
                                        FieldSpec::rationals());
    // H̃_d lives at ranks[d+1]; expect a single unit at d = k-1.
    for (int d = -1; d <= k - 1; ++d) {
      int expect = d == k - 1 ? 1 : 0;
      CHECK(ranks[d + 1] == expect);
    }
  }
}

TEST_CASE("boundary maps compose to zero") {
  Rng rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    // random downward-closed complex on 5 vertices
    std::vector<std::uint64_t> faces = {0};
    for (int add = 0; add < 6; ++add) {
      std::uint64_t f = rng.uniform_int(0, 31);
      for (std::uint64_t sub = f;; sub = (sub - 1) & f) {
        faces.push_back(sub);
        if (sub == 0) break;
      }
    }
    SimplicialComplex complex({0, 1, 2, 3, 4}, faces);
    REQUIRE(complex.is_downward_closed());
    for (int d = 0; d <= complex.dimension(); ++d) {
      DenseMatrix lower = boundary_matrix(complex, d);
      DenseMatrix upper = boundary_matrix(complex, d + 1);
      if (lower.empty() || upper.empty() || upper[0].empty()) continue;
      for (std::size_t c = 0; c < upper[0].size(); ++c) {
        for (std::size_t r = 0; r < lower.size(); ++r) {
          long long acc = 0;
          for (std::size_t m = 0; m < upper.size(); ++m) acc += lower[r][m] * upper[m][c];
          REQUIRE(acc == 0);
        }
      }
    }
  }
}

TEST_CASE("upper Koszul complexes at pinned multidegrees") {
  // I = (x^2, y): at b = (2,1) both variables can be stripped alone, but not
  // together - two isolated points.
  MonomialIdeal ideal = MonomialIdeal::parse("(x1^2, x2)", 2);
  SimplicialComplex k = upper_koszul_complex(ideal, {2, 1});
  CHECK(k.dimension() == 0);
  CHECK(k.face_count() == 3);
  auto ranks = reduced_homology_ranks(k, FieldSpec::rationals());
  CHECK(ranks[1] == 1);  // H̃_0

  // I = (xy) at b = (1,0): x^b not in I, void complex.
  MonomialIdeal xy = MonomialIdeal::parse("(x1*x2)", 2);
  CHECK(upper_koszul_complex(xy, {1, 0}).dimension() == -2);
  // b = (1,1): only the empty face survives.
  SimplicialComplex at11 = upper_koszul_complex(xy, {1, 1});
  CHECK(at11.dimension() == -1);
  CHECK_THROWS_AS(upper_koszul_complex(xy, {1}), std::invalid_argument);
  CHECK_THROWS_AS(upper_koszul_complex(xy, {1, -1}), std::invalid_argument);
}

TEST_CASE("betti table of the maximal ideal in two variables") {
  MonomialIdeal m2 = MonomialIdeal::parse("(x1, x2)", 2);
  BettiTable t = betti_table(m2, FieldSpec::rationals());
  CHECK(t.entry(0, {0, 0}) == 1);
  CHECK(t.entry(1, {1, 0}) == 1);
  CHECK(t.entry(1, {0, 1}) == 1);
  CHECK(t.entry(2, {1, 1}) == 1);
  CHECK(t.total(0) == 1);
  CHECK(t.total(1) == 2);
  CHECK(t.total(2) == 1);
  CHECK(t.projective_dimension() == 2);
  CHECK(depth(m2, FieldSpec::rationals()) == 0);
}

TEST_CASE("betti table of an edge ideal path") {
  BettiTable t = betti_table(edge_ideal(testutil::path_graph(3)), FieldSpec::rationals());
  CHECK(t.entry(1, {1, 1, 0}) == 1);
  CHECK(t.entry(1, {0, 1, 1}) == 1);
  CHECK(t.entry(2, {1, 1, 1}) == 1);
  CHECK(t.projective_dimension() == 2);
}

TEST_CASE("taylor strands reproduce the pinned example") {
  MonomialIdeal ideal = MonomialIdeal::parse("(x1^2, x1*x2, x2^2)", 2);
  BettiTable t = betti_via_taylor(ideal, FieldSpec::rationals());
  CHECK(t.total(0) == 1);
  CHECK(t.total(1) == 3);
  CHECK(t.total(2) == 2);
  CHECK(t.projective_dimension() == 2);
  CHECK(t == betti_table(ideal, FieldSpec::rationals()));
}

TEST_CASE("taylor oracle matches the koszul sweep on random ideals") {
  Rng rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    MonomialIdeal ideal = random_monomial_ideal(rng.uniform_int(1, 4), 5, 3, rng);
    if (ideal.is_unit()) continue;
    for (int p : {0, 2, 3}) {
      FieldSpec field{p};
      CHECK(betti_table(ideal, field) == betti_via_taylor(ideal, field));
    }
  }
}

TEST_CASE("depth pinned values and bounds") {
  CHECK(depth(edge_ideal(testutil::path_graph(3)), FieldSpec::rationals()) == 1);
  CHECK(depth(edge_ideal(testutil::cycle_graph(5)), FieldSpec::rationals()) == 2);
  CHECK(depth(edge_ideal(testutil::path_graph(5)), FieldSpec::rationals()) == 2);
  CHECK(depth(MonomialIdeal::zero(4), FieldSpec::rationals()) == 4);
  CHECK_THROWS_AS(depth(MonomialIdeal::unit_ideal(3), FieldSpec::rationals()),
                  std::invalid_argument);
  CHECK_THROWS_AS(betti_via_taylor(edge_ideal(testutil::complete_graph(6)),
                                   FieldSpec::rationals()),
                  std::invalid_argument);  // 15 generators exceeds the oracle bound
}

TEST_CASE("betti json round trip") {
  BettiTable t = betti_table(edge_ideal(testutil::path_graph(3)), FieldSpec::rationals());
  BettiTable back = BettiTable::from_json(t.to_json());
  CHECK(back == t);
  CHECK(t.to_json().find("\"entries\"") != std::string::npos);
}
