#pragma once

// Class groups of imaginary quadratic fields via reduced binary forms, plus
// the analytic class number route and minimal-norm ideal class representatives.

#include "bianchi/ideal.hpp"

namespace bianchi {

struct ReducedForm {
  Int a, b, c;  // b^2 - 4ac = -D, |b| <= a <= c, b >= 0 if |b| = a or a = c
  bool operator==(const ReducedForm& o) const { return a == o.a && b == o.b && c == o.c; }
};

// All reduced primitive forms of discriminant -D (imaginary fields only).
std::vector<ReducedForm> class_group(const QuadField& F);

// h via the finite character sum L(1, chi_{-D}) = -(pi / D^{3/2}) * sum a*chi(a):
// h = w * |sum_{a<D} a chi(a)| / (2D). Independent of the form enumeration.
Int class_number_analytic(const QuadField& F);

int unit_count(const QuadField& F);  // |mu_F|: 6, 4, or 2

// One integral ideal per class; O_F first, then (a, (-b+sqrt(-D))/2) per
// nonprincipal reduced form, sorted by (norm, HNF b). These have least norm
// in their class.
std::vector<IntegralIdeal> ideal_class_reps(const QuadField& F);

// Ideal attached to a reduced form: (a, (-b + sqrt(-D))/2), norm a.
IntegralIdeal form_ideal(const QuadField& F, const ReducedForm& f);

}  // namespace bianchi
