#pragma once

// Dedekind zeta at 2 for quadratic fields: zeta_F(2) = zeta(2) L(2, chi_D),
// with the L-series truncated under an Abel-summation tail bound, and the
// volume formula vol M_F = zeta_F(2) D^{3/2} / (4 pi^2) for imaginary F.

#include "bianchi/qfield.hpp"

namespace bianchi {

struct L2Value {
  double value;
  double tail_bound;  // rigorous bound on the truncation error
  long terms;
};

// L(2, chi_D) where chi_D = Kronecker(D_signed, .); D_signed = -absDisc for
// imaginary fields. eps > 0 is the requested absolute truncation error.
L2Value dirichlet_L2(const QuadField& F, double eps = 1e-12);

double zeta2(const QuadField& F, double eps = 1e-12);

// vol(M_F) for imaginary quadratic F (r1, r2) = (0, 1).
double volume(const QuadField& F, double eps = 1e-12);

}  // namespace bianchi
