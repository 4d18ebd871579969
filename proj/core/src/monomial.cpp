#include "symdepth/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symdepth {

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
  }
}

Monomial Monomial::unit(int n) {
  if (n < 0) throw std::invalid_argument("Monomial: negative dimension");
  return Monomial(std::vector<int>(static_cast<std::size_t>(n), 0));
}

Monomial Monomial::variable(int n, int j) {
  if (j < 0 || j >= n) throw std::invalid_argument("Monomial: variable index out of range");
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(j)] = 1;
  return Monomial(std::move(e));
}

int Monomial::degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

bool Monomial::is_unit() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  if (dimension() != other.dimension())
    throw std::invalid_argument("Monomial::divides: dimension mismatch");
  for (std::size_t j = 0; j < exponents_.size(); ++j) {
    if (exponents_[j] > other.exponents_[j]) return false;
  }
  return true;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < exponents_.size(); ++j) {
    if (exponents_[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(j + 1);
    if (exponents_[j] > 1) {
      out += '^';
      out += std::to_string(exponents_[j]);
    }
  }
  return out.empty() ? "1" : out;
}

Monomial Monomial::parse(const std::string& text, int n) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s += c;
  }
  if (s.empty()) throw std::invalid_argument("Monomial::parse: empty input");
  if (s == "1") return unit(n);

  std::vector<int> e(static_cast<std::size_t>(n), 0);
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 'x') throw std::invalid_argument("Monomial::parse: expected 'x' in '" + text + "'");
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("Monomial::parse: missing variable index in '" + text + "'");
    int idx = std::stoi(s.substr(start, pos - start));
    if (idx < 1 || idx > n)
      throw std::invalid_argument("Monomial::parse: variable index out of range in '" + text + "'");
    int exp = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) throw std::invalid_argument("Monomial::parse: missing exponent in '" + text + "'");
      exp = std::stoi(s.substr(start, pos - start));
    }
    e[static_cast<std::size_t>(idx - 1)] += exp;
    if (pos < s.size()) {
      if (s[pos] != '*') throw std::invalid_argument("Monomial::parse: expected '*' in '" + text + "'");
      ++pos;
      if (pos == s.size()) throw std::invalid_argument("Monomial::parse: trailing '*' in '" + text + "'");
    }
  }
  return Monomial(std::move(e));
}

namespace {

void check_same_dimension(const Monomial& a, const Monomial& b, const char* op) {
  if (a.dimension() != b.dimension())
    throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}

}  // namespace

Monomial multiply(const Monomial& a, const Monomial& b) {
  check_same_dimension(a, b, "multiply");
  std::vector<int> e(a.exponents());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] += b.exponents()[j];
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_dimension(a, b, "lcm");
  std::vector<int> e(a.exponents());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = std::max(e[j], b.exponents()[j]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_same_dimension(a, b, "gcd");
  std::vector<int> e(a.exponents());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = std::min(e[j], b.exponents()[j]);
  return Monomial(std::move(e));
}

Monomial quotient_by_gcd(const Monomial& u, const Monomial& v) {
  check_same_dimension(u, v, "quotient_by_gcd");
  std::vector<int> e(u.exponents());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] -= std::min(e[j], v.exponents()[j]);
  return Monomial(std::move(e));
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents() > b.exponents();
}

}  // namespace symdepth
