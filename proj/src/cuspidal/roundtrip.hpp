#pragma once

#include "cuspidal/window.hpp"

namespace wnlie {

struct RoundtripReport {
  bool fg_kernel_ok = false;    // wh_1(G(V)) equals 1 ⊗ V exactly
  bool fg_matrices_ok = false;  // defining words reproduce every z matrix on 1 ⊗ V
  bool f1g1_ok = false;         // window composites reproduce the z matrices on the α slice
  bool support_ok = false;      // window weights lie in α + Z^n
  std::string detail;
  bool ok() const { return fg_kernel_ok && fg_matrices_ok && f1g1_ok && support_ok; }
};

/// Desk-scale verification of the two inverse pairs: the Whittaker-side
/// G(V) = U(h_n) ⊗ V with wh_1(G(V)) = V (matrices included), and the
/// weight-side identification of the α slice of G_1(V) with V.
RoundtripReport roundtrip_F_G(std::shared_ptr<HRep> rho, const std::vector<Scalar>& alpha,
                              int radius, long bound, XCache& cache);

}  // namespace wnlie
