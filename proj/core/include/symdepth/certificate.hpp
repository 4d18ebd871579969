#pragma once

#include <string>
#include <vector>

#include "symdepth/graph.hpp"
#include "symdepth/monomial_ideal.hpp"

namespace symdepth {

/// One row of a depth certificate: a distinguished variable (the center)
/// together with a list of witness variables.
struct CertificateRow {
  int center = 0;
  std::vector<int> witnesses;
};

/// A depth lower-bound certificate for a monomial ideal: rows of variables,
/// all distinct across the whole certificate. When accepted against I it
/// guarantees depth S/I >= number of rows.
struct DepthCertificate {
  std::vector<CertificateRow> rows;
};

struct CertificateCheck {
  bool accepted = false;
  int q = 0;
  std::string reason;  // set when rejected
};

/// Accepts iff (i) every generator of I has degree <= 1 in every witness
/// variable, and (ii) every generator divisible by a row's center is also
/// divisible by one of that row's witnesses. Repeated variables anywhere in
/// the certificate are an error, not a rejection.
CertificateCheck check_certificate(const MonomialIdeal& ideal, const DepthCertificate& cert);

/// The certificate induced by a star packing: one row per center, witnesses
/// its full open neighborhood. Always accepted against the edge ideal of g,
/// certifying depth S/I(G) >= number of stars.
DepthCertificate certificate_from_star_packing(const Graph& g, const StarPacking& p);

}  // namespace symdepth
