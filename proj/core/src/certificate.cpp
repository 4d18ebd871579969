#include "symdepth/certificate.hpp"

#include <bit>
#include <set>
#include <stdexcept>
#include <string>

namespace symdepth {

CertificateCheck check_certificate(const MonomialIdeal& ideal, const DepthCertificate& cert) {
  const int n = ideal.dimension();
  std::set<int> used;
  auto claim = [&](int v) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("check_certificate: variable index out of range");
    if (!used.insert(v).second)
      throw std::invalid_argument("check_certificate: repeated variable x" + std::to_string(v + 1));
  };
  for (const CertificateRow& row : cert.rows) {
    claim(row.center);
    for (int w : row.witnesses) claim(w);
  }

  CertificateCheck out;
  for (const CertificateRow& row : cert.rows) {
    for (const Monomial& g : ideal.generators()) {
      for (int w : row.witnesses) {
        if (g.exponent(w) > 1) {
          out.reason = "generator " + g.to_string() + " has degree > 1 in x" +
                       std::to_string(w + 1);
          return out;
        }
      }
      if (g.exponent(row.center) >= 1) {
        bool witnessed = false;
        for (int w : row.witnesses) {
          if (g.exponent(w) >= 1) {
            witnessed = true;
            break;
          }
        }
        if (!witnessed) {
          out.reason = "generator " + g.to_string() + " divisible by x" +
                       std::to_string(row.center + 1) + " but by none of its witnesses";
          return out;
        }
      }
    }
  }
  out.accepted = true;
  out.q = static_cast<int>(cert.rows.size());
  return out;
}

DepthCertificate certificate_from_star_packing(const Graph& g, const StarPacking& p) {
  if (!is_star_packing(g, p))
    throw std::invalid_argument("certificate_from_star_packing: invalid star packing");
  DepthCertificate cert;
  for (int c : p.centers) {
    CertificateRow row;
    row.center = c;
    std::uint64_t nbrs = g.neighbors(c);
    while (nbrs) {
      row.witnesses.push_back(std::countr_zero(nbrs));
      nbrs &= nbrs - 1;
    }
    cert.rows.push_back(std::move(row));
  }
  return cert;
}

}  // namespace symdepth
