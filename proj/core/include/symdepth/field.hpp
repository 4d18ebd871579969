#pragma once

#include <stdexcept>

namespace symdepth {

/// Coefficient field for homology ranks: the rationals (characteristic 0) or
/// a prime field GF(p).
struct FieldSpec {
  int characteristic = 0;

  static constexpr bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d) {
      if (p % d == 0) return false;
    }
    return true;
  }

  static FieldSpec rationals() { return FieldSpec{0}; }

  static FieldSpec gf(int p) {
    if (!is_prime(p)) throw std::invalid_argument("FieldSpec: characteristic must be prime");
    return FieldSpec{p};
  }

  bool operator==(const FieldSpec&) const = default;
};

}  // namespace symdepth
