#pragma once

// Fundamental units of real quadratic orders via the continued fraction of a
// quadratic irrational with the given discriminant. Solves t^2 - d u^2 = +-4.

#include "bianchi/numeric.hpp"

namespace bianchi {

struct UnitData {
  Int d;          // positive nonsquare, d = 0 or 1 mod 4
  Int t, u;       // least t, u > 0 with t^2 - d u^2 = +-4
  int norm_sign;  // +1 or -1, the sign attained
  double regulator;  // log epsilon, epsilon = (t + u sqrt d)/2

  // norm-one fundamental solution: epsilon itself if norm +1, else its square
  std::pair<Int, Int> norm_one_tu() const {
    if (norm_sign == 1) return {t, u};
    return {t * t + 2, t * u};
  }
  double norm_one_log() const { return norm_sign == 1 ? regulator : 2 * regulator; }
};

// Fundamental unit of the quadratic order of discriminant d.
UnitData fundamental_unit(const Int& d);

// Real-quadratic class number of the maximal order, disc dK > 0 fundamental,
// through L(1, chi) = 2 h log(eps) / sqrt(dK).
Int real_class_number(const Int& dK);

// Wide class number of the order of conductor f inside disc dK, by the usual
// conductor formula h(O_f) = h_K f prod_{p|f}(1 - (dK|p)/p) / [O_K^x : O_f^x].
Int order_class_number(const Int& dK, const Int& f);

// Narrow variant: doubled when the order's fundamental unit has norm +1.
Int order_class_number_narrow(const Int& dK, const Int& f);

// [O_K^x : O_f^x] = least k with eps_K^k in the conductor-f order.
int unit_index_in_order(const Int& dK, const Int& f);

bool is_discriminant(const Int& d);  // d = 0 or 1 mod 4, nonzero

// d = f^2 dK with dK fundamental; returns (dK, f).
std::pair<Int, Int> fundamental_part(const Int& d);

}  // namespace bianchi
