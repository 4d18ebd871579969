#include "symdepth/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace symdepth {

namespace {

void check_dimension(const MonomialIdeal& i, const MonomialIdeal& j, const char* op) {
  if (i.dimension() != j.dimension())
    throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}

}  // namespace

MonomialIdeal MonomialIdeal::zero(int n) {
  if (n < 0) throw std::invalid_argument("MonomialIdeal: negative dimension");
  MonomialIdeal out;
  out.n_ = n;
  return out;
}

MonomialIdeal MonomialIdeal::unit_ideal(int n) {
  MonomialIdeal out = zero(n);
  out.gens_.push_back(Monomial::unit(n));
  return out;
}

MonomialIdeal MonomialIdeal::from_generators(int n, std::vector<Monomial> gens) {
  MonomialIdeal out = zero(n);
  for (const Monomial& g : gens) {
    if (g.dimension() != n)
      throw std::invalid_argument("MonomialIdeal: generator dimension mismatch");
  }
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Sorted by degree, so a proper divisor of g always precedes g.
  for (const Monomial& g : gens) {
    bool redundant = std::any_of(out.gens_.begin(), out.gens_.end(),
                                 [&](const Monomial& kept) { return kept.divides(g); });
    if (!redundant) out.gens_.push_back(g);
  }
  return out;
}

std::string MonomialIdeal::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k > 0) out += ", ";
    out += gens_[k].to_string();
  }
  out += ")";
  return out;
}

MonomialIdeal MonomialIdeal::parse(const std::string& text, int n) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw std::invalid_argument("MonomialIdeal::parse: expected parenthesized list");
  s = s.substr(1, s.size() - 2);
  std::vector<Monomial> gens;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    gens.push_back(Monomial::parse(s.substr(pos, comma - pos), n));
    pos = comma + 1;
  }
  return from_generators(n, std::move(gens));
}

MonomialIdeal minimalize(int n, std::vector<Monomial> gens) {
  return MonomialIdeal::from_generators(n, std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& i, const MonomialIdeal& j) {
  check_dimension(i, j, "sum");
  std::vector<Monomial> gens = i.generators();
  gens.insert(gens.end(), j.generators().begin(), j.generators().end());
  return MonomialIdeal::from_generators(i.dimension(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& i, const MonomialIdeal& j) {
  check_dimension(i, j, "product");
  std::vector<Monomial> gens;
  gens.reserve(i.generators().size() * j.generators().size());
  for (const Monomial& u : i.generators()) {
    for (const Monomial& v : j.generators()) {
      gens.push_back(multiply(u, v));
    }
  }
  return MonomialIdeal::from_generators(i.dimension(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& i, int s) {
  if (s < 1) throw std::invalid_argument("power: exponent must be >= 1");
  MonomialIdeal out = i;
  for (int k = 1; k < s; ++k) out = product(out, i);
  return out;
}

MonomialIdeal intersect(const MonomialIdeal& i, const MonomialIdeal& j) {
  check_dimension(i, j, "intersect");
  std::vector<Monomial> gens;
  gens.reserve(i.generators().size() * j.generators().size());
  for (const Monomial& u : i.generators()) {
    for (const Monomial& v : j.generators()) {
      gens.push_back(lcm(u, v));
    }
  }
  return MonomialIdeal::from_generators(i.dimension(), std::move(gens));
}

MonomialIdeal intersect_all(const std::vector<MonomialIdeal>& ideals, int n,
                            std::optional<int> generator_cap) {
  MonomialIdeal out = MonomialIdeal::unit_ideal(n);
  for (const MonomialIdeal& next : ideals) {
    out = intersect(out, next);
    if (generator_cap && static_cast<int>(out.generators().size()) > *generator_cap) {
      throw std::runtime_error("intersect_all: generator cap of " +
                               std::to_string(*generator_cap) + " exceeded (" +
                               std::to_string(out.generators().size()) + " generators)");
    }
  }
  return out;
}

MonomialIdeal colon(const MonomialIdeal& i, const Monomial& u) {
  if (i.dimension() != u.dimension())
    throw std::invalid_argument("colon: dimension mismatch");
  std::vector<Monomial> gens;
  gens.reserve(i.generators().size());
  for (const Monomial& g : i.generators()) {
    gens.push_back(quotient_by_gcd(g, u));
  }
  return MonomialIdeal::from_generators(i.dimension(), std::move(gens));
}

bool contains(const MonomialIdeal& i, const Monomial& m) {
  if (i.dimension() != m.dimension())
    throw std::invalid_argument("contains: dimension mismatch");
  return std::any_of(i.generators().begin(), i.generators().end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool equals(const MonomialIdeal& i, const MonomialIdeal& j) {
  check_dimension(i, j, "equals");
  // Minimal generators of a monomial ideal are unique, so structural equality
  // of the canonical antichains decides ideal equality.
  return i.generators() == j.generators();
}

}  // namespace symdepth
