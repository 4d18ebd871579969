#include "symdepth/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

#include "symdepth/betti.hpp"
#include "symdepth/graph_io.hpp"
#include "symdepth/ideal_constructions.hpp"
#include "symdepth/monomial_ideal.hpp"

namespace symdepth {

namespace {

void fill_bound_fields(VerificationReport& r, int alpha2, int depth_value, int bound) {
  r.alpha2 = alpha2;
  r.depth = depth_value;
  r.bound = bound;
  r.slack = depth_value - bound;
  r.verdict = r.slack >= 0 ? "holds" : "violated";
}

std::vector<int> checked_vertex_set(const Graph& g, const std::vector<int>& vs, const char* name) {
  std::vector<int> sorted(vs);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument(std::string(name) + ": repeated vertex");
  if (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= g.vertex_count()))
    throw std::invalid_argument(std::string(name) + ": vertex out of range");
  return sorted;
}

}  // namespace

VerificationReport check_symbolic_depth_bound(const Graph& g, int s, bool require_chordal,
                                              const FieldSpec& field,
                                              std::optional<int> generator_cap) {
  if (s < 1) throw std::invalid_argument("check_symbolic_depth_bound: s must be >= 1");
  ChordalityResult chord = is_chordal(g);
  if (require_chordal && !chord.chordal)
    throw std::invalid_argument("check_symbolic_depth_bound: chordal graph required");

  VerificationReport r;
  r.n = g.vertex_count();
  r.edge_count = g.edge_count();
  r.chordal = chord.chordal;
  r.s = s;
  r.characteristic = field.characteristic;
  r.graph_json = serialize_graph(g);

  MonomialIdeal ideal = symbolic_power(g, s, generator_cap);
  int alpha2 = star_packing_number(g).value;
  fill_bound_fields(r, alpha2, depth(ideal, field), alpha2 - s + 1);

  r.guaranteed = chord.chordal || s <= 2;
  if (!r.guaranteed) r.note = "exploratory";
  return r;
}

VerificationReport check_mixed_bound(const Graph& h, const Graph& h_prime, int s,
                                     const FieldSpec& field, std::optional<int> generator_cap) {
  if (s < 1) throw std::invalid_argument("check_mixed_bound: s must be >= 1");
  if (h.vertex_count() != h_prime.vertex_count())
    throw std::invalid_argument("check_mixed_bound: graphs must share a vertex set");
  if (!is_chordal(h).chordal)
    throw std::invalid_argument("check_mixed_bound: H must be chordal");

  Graph g(h.vertex_count());
  for (auto [u, v] : h.edges()) g.add_edge(u, v);
  for (auto [u, v] : h_prime.edges()) {
    if (g.has_edge(u, v)) throw std::invalid_argument("check_mixed_bound: edge sets overlap");
    g.add_edge(u, v);
  }
  if (!is_chordal(g).chordal)
    throw std::invalid_argument("check_mixed_bound: the union graph must be chordal");

  VerificationReport r;
  r.n = g.vertex_count();
  r.edge_count = g.edge_count();
  r.chordal = true;
  r.s = s;
  r.characteristic = field.characteristic;
  r.graph_json = serialize_graph(g);
  nlohmann::ordered_json parts;
  parts["h"] = nlohmann::ordered_json::parse(serialize_graph(h));
  parts["h_prime"] = nlohmann::ordered_json::parse(serialize_graph(h_prime));
  r.note = parts.dump();

  MonomialIdeal ideal = mixed_ideal(h, h_prime, s, generator_cap);
  int alpha2 = star_packing_number(g).value;
  fill_bound_fields(r, alpha2, depth(ideal, field), alpha2 - s + 1);
  r.guaranteed = true;
  return r;
}

bool check_colon_identity(const Graph& g, int u, int v, int k,
                          std::optional<int> generator_cap) {
  if (k < 2) throw std::invalid_argument("check_colon_identity: k must be >= 2");
  if (!g.has_edge(u, v)) throw std::invalid_argument("check_colon_identity: uv must be an edge");
  const int n = g.vertex_count();
  Monomial xu = Monomial::variable(n, u);
  Monomial xv = Monomial::variable(n, v);

  MonomialIdeal lhs = colon(symbolic_power(g, k, generator_cap), xu * xv);
  MonomialIdeal lower = symbolic_power(g, k - 1, generator_cap);
  MonomialIdeal rhs = intersect(colon(lower, xu), colon(lower, xv));
  return equals(lhs, rhs);
}

VerificationReport check_packing_deletion_lemmas(const Graph& g, const std::vector<int>& w,
                                                 const std::vector<int>& a, DeletionLemma mode) {
  std::vector<int> w_sorted = checked_vertex_set(g, w, "check_packing_deletion_lemmas: W");
  std::vector<int> a_sorted = checked_vertex_set(g, a, "check_packing_deletion_lemmas: A");

  std::uint64_t a_mask = 0;
  for (int x : a_sorted) a_mask |= std::uint64_t{1} << x;

  int drop = 0;
  if (mode == DeletionLemma::kClosedNeighborhoods) {
    std::uint64_t allowed = 0;
    for (int x : w_sorted) allowed |= g.closed_neighbors(x);
    if (a_mask & ~allowed)
      throw std::invalid_argument(
          "check_packing_deletion_lemmas: A must lie in the closed neighborhoods of W");
    drop = static_cast<int>(w_sorted.size());
  } else {
    if (w.empty())
      throw std::invalid_argument("check_packing_deletion_lemmas: W must be nonempty");
    for (std::size_t i = 0; i < w_sorted.size(); ++i) {
      for (std::size_t j = i + 1; j < w_sorted.size(); ++j) {
        if (!g.has_edge(w_sorted[i], w_sorted[j]))
          throw std::invalid_argument("check_packing_deletion_lemmas: W must be a clique");
      }
    }
    std::uint64_t open_union = 0;
    for (int x : w_sorted) open_union |= g.neighbors(x);
    if (a_mask & ~open_union)
      throw std::invalid_argument(
          "check_packing_deletion_lemmas: A must lie in the open neighborhoods of W");
    // The distinguished vertex is the first listed in W, not the smallest.
    int x1 = w.front();
    std::uint64_t w_mask = 0;
    for (int x : w_sorted) w_mask |= std::uint64_t{1} << x;
    std::uint64_t required = g.neighbors(x1) & ~w_mask;
    if (required & ~a_mask)
      throw std::invalid_argument(
          "check_packing_deletion_lemmas: A must contain the private neighbors of the first "
          "vertex of W");
    if (a_mask & (std::uint64_t{1} << x1))
      throw std::invalid_argument(
          "check_packing_deletion_lemmas: A must avoid the first vertex of W");
    drop = static_cast<int>(w_sorted.size()) - 1;
  }

  VerificationReport r;
  r.n = g.vertex_count();
  r.edge_count = g.edge_count();
  r.chordal = is_chordal(g).chordal;
  r.s = 0;
  r.characteristic = 0;
  r.graph_json = serialize_graph(g);
  nlohmann::ordered_json parts;
  parts["mode"] = mode == DeletionLemma::kClosedNeighborhoods ? "closed-neighborhoods"
                                                              : "clique-open-neighborhoods";
  parts["w"] = w;
  parts["a"] = a;
  r.note = parts.dump();

  int before = star_packing_number(g).value;
  int after = star_packing_number(delete_vertices(g, a_sorted).graph).value;
  fill_bound_fields(r, before, after, before - drop);
  r.guaranteed = true;
  return r;
}

bool check_forest_power_coincidence(const Graph& g, int s, std::optional<int> generator_cap) {
  if (!is_forest(g)) throw std::invalid_argument("check_forest_power_coincidence: cyclic input");
  if (s < 1) throw std::invalid_argument("check_forest_power_coincidence: s must be >= 1");
  return equals(power(edge_ideal(g), s), symbolic_power(g, s, generator_cap));
}

}  // namespace symdepth
