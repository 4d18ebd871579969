#include "symdepth/betti.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "json.hpp"

#include "symdepth/homology.hpp"
#include "symdepth/simplicial_complex.hpp"

namespace symdepth {

void BettiTable::add(int i, const std::vector<int>& b, int rank) {
  if (i < 0 || rank < 0) throw std::invalid_argument("BettiTable::add: negative index or rank");
  if (static_cast<int>(b.size()) != n_)
    throw std::invalid_argument("BettiTable::add: multidegree dimension mismatch");
  if (rank == 0) return;
  entries_[Key{i, b}] += rank;
}

int BettiTable::entry(int i, const std::vector<int>& b) const {
  auto it = entries_.find(Key{i, b});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::total(int i) const {
  int sum = 0;
  for (const auto& [key, rank] : entries_) {
    if (key.first == i) sum += rank;
  }
  return sum;
}

int BettiTable::projective_dimension() const {
  int pd = 0;
  for (const auto& [key, rank] : entries_) pd = std::max(pd, key.first);
  return pd;
}

std::string BettiTable::to_json() const {
  nlohmann::ordered_json out;
  out["n"] = n_;
  out["entries"] = nlohmann::ordered_json::array();
  for (const auto& [key, rank] : entries_) {
    nlohmann::ordered_json e;
    e["i"] = key.first;
    e["b"] = key.second;
    e["rank"] = rank;
    out["entries"].push_back(std::move(e));
  }
  return out.dump();
}

BettiTable BettiTable::from_json(const std::string& text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("BettiTable::from_json: ") + e.what());
  }
  if (!parsed.is_object() || !parsed.contains("n") || !parsed.contains("entries"))
    throw std::invalid_argument("BettiTable::from_json: expected {\"n\":..,\"entries\":[..]}");
  BettiTable table(parsed.at("n").get<int>());
  for (const auto& e : parsed.at("entries")) {
    table.add(e.at("i").get<int>(), e.at("b").get<std::vector<int>>(), e.at("rank").get<int>());
  }
  return table;
}

BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field) {
  if (ideal.is_unit()) throw std::invalid_argument("betti_table: unit ideal rejected");
  const int n = ideal.dimension();
  BettiTable table(n);
  table.add(0, std::vector<int>(static_cast<std::size_t>(n), 0), 1);
  if (ideal.is_zero()) return table;

  // Exponent grid: per variable, the distinct exponents among generators
  // together with 0. Every lcm of a generator subset is a grid point.
  std::vector<std::vector<int>> values(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::vector<int>& v = values[static_cast<std::size_t>(j)];
    v.push_back(0);
    for (const Monomial& g : ideal.generators()) v.push_back(g.exponent(j));
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  std::vector<std::size_t> odo(static_cast<std::size_t>(n), 0);
  std::vector<int> b(static_cast<std::size_t>(n), 0);
  for (;;) {
    for (int j = 0; j < n; ++j)
      b[static_cast<std::size_t>(j)] =
          values[static_cast<std::size_t>(j)][odo[static_cast<std::size_t>(j)]];

    // Join of the generators below b. If the join is a proper subvector, the
    // upper-Koszul complex at b is a cone (any coordinate where the join is
    // slack extends every face), so only join == b can contribute.
    bool any_divides = false;
    bool skip = false;
    std::vector<int> join(static_cast<std::size_t>(n), 0);
    for (const Monomial& g : ideal.generators()) {
      bool divides = true;
      for (int j = 0; j < n; ++j) {
        if (g.exponent(j) > b[static_cast<std::size_t>(j)]) {
          divides = false;
          break;
        }
      }
      if (!divides) continue;
      any_divides = true;
      for (int j = 0; j < n; ++j)
        join[static_cast<std::size_t>(j)] =
            std::max(join[static_cast<std::size_t>(j)], g.exponent(j));
    }
    skip = !any_divides || join != b;

    if (!skip) {
      std::vector<int> ranks = reduced_homology_ranks(upper_koszul_complex(ideal, b), field);
      for (std::size_t r = 0; r < ranks.size(); ++r) {
        if (ranks[r] > 0) table.add(static_cast<int>(r) + 1, b, ranks[r]);
      }
    }

    int j = 0;
    while (j < n && ++odo[static_cast<std::size_t>(j)] == values[static_cast<std::size_t>(j)].size()) {
      odo[static_cast<std::size_t>(j)] = 0;
      ++j;
    }
    if (j == n) break;
  }
  return table;
}

BettiTable betti_via_taylor(const MonomialIdeal& ideal, const FieldSpec& field) {
  if (ideal.is_unit()) throw std::invalid_argument("betti_via_taylor: unit ideal rejected");
  const int n = ideal.dimension();
  const int m = static_cast<int>(ideal.generators().size());
  if (m > 14) throw std::invalid_argument("betti_via_taylor: more than 14 generators");

  // lcm exponent vector of every generator subset.
  const std::uint32_t count = std::uint32_t{1} << m;
  std::vector<std::vector<int>> lcms(count, std::vector<int>(static_cast<std::size_t>(n), 0));
  for (std::uint32_t s = 1; s < count; ++s) {
    std::uint32_t low = s & (~s + 1);
    const Monomial& g = ideal.generators()[static_cast<std::size_t>(std::countr_zero(low))];
    const std::vector<int>& rest = lcms[s ^ low];
    std::vector<int>& out = lcms[s];
    for (int j = 0; j < n; ++j)
      out[static_cast<std::size_t>(j)] = std::max(rest[static_cast<std::size_t>(j)], g.exponent(j));
  }

  // The tensored Taylor complex splits into strands of constant lcm; the
  // differential keeps only unit coefficients, i.e. subsets whose lcm
  // survives dropping one generator.
  std::map<std::vector<int>, std::vector<std::uint32_t>> strands;
  for (std::uint32_t s = 0; s < count; ++s) strands[lcms[s]].push_back(s);

  BettiTable table(n);
  for (const auto& [b, subsets] : strands) {
    std::vector<std::vector<std::uint32_t>> by_size(static_cast<std::size_t>(m) + 2);
    for (std::uint32_t s : subsets)
      by_size[static_cast<std::size_t>(std::popcount(s))].push_back(s);

    std::vector<int> rank(static_cast<std::size_t>(m) + 2, 0);
    for (int k = 1; k <= m; ++k) {
      const std::vector<std::uint32_t>& domain = by_size[static_cast<std::size_t>(k)];
      const std::vector<std::uint32_t>& codomain = by_size[static_cast<std::size_t>(k - 1)];
      if (domain.empty() || codomain.empty()) continue;
      DenseMatrix mat(codomain.size(), std::vector<long long>(domain.size(), 0));
      for (std::size_t col = 0; col < domain.size(); ++col) {
        std::uint32_t tau = domain[col];
        std::uint32_t rest = tau;
        int sign = 1;
        while (rest) {
          std::uint32_t low = rest & (~rest + 1);
          rest ^= low;
          std::uint32_t sub = tau ^ low;
          if (lcms[sub] == b) {
            auto it = std::lower_bound(codomain.begin(), codomain.end(), sub);
            mat[static_cast<std::size_t>(it - codomain.begin())][col] = sign;
          }
          sign = -sign;
        }
      }
      rank[static_cast<std::size_t>(k)] = exact_rank(mat, field);
    }
    for (int k = 0; k <= m; ++k) {
      int h = static_cast<int>(by_size[static_cast<std::size_t>(k)].size()) -
              rank[static_cast<std::size_t>(k)] - rank[static_cast<std::size_t>(k + 1)];
      if (h > 0) table.add(k, b, h);
    }
  }
  return table;
}

int depth(const MonomialIdeal& ideal, const FieldSpec& field) {
  if (ideal.is_unit()) throw std::invalid_argument("depth: unit ideal rejected");
  if (ideal.is_zero()) return ideal.dimension();
  return ideal.dimension() - betti_table(ideal, field).projective_dimension();
}

}  // namespace symdepth
