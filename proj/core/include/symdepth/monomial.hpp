#pragma once

#include <string>
#include <vector>

namespace symdepth {

/// A monomial in K[x1..xn], stored as its exponent vector. Variable j
/// (0-based) prints as x{j+1}; the all-zeros vector is the unit monomial 1.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial unit(int n);
  static Monomial variable(int n, int j);

  int dimension() const { return static_cast<int>(exponents_.size()); }
  const std::vector<int>& exponents() const { return exponents_; }
  int exponent(int j) const { return exponents_[static_cast<std::size_t>(j)]; }
  int degree() const;
  bool is_unit() const;

  bool divides(const Monomial& other) const;

  std::string to_string() const;
  static Monomial parse(const std::string& text, int n);

  bool operator==(const Monomial&) const = default;

private:
  std::vector<int> exponents_;
};

Monomial multiply(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// u / gcd(u, v): the generator map behind colon ideals.
Monomial quotient_by_gcd(const Monomial& u, const Monomial& v);

/// Canonical presentation order: total degree ascending, then exponent
/// vectors lexicographically descending (so x1^2 before x1*x3 before x3^2).
bool canonical_less(const Monomial& a, const Monomial& b);

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  return multiply(a, b);
}

}  // namespace symdepth
