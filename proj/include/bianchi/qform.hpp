#pragma once

// Binary quadratic forms over O_F, the unimodular action, discriminant
// bookkeeping, and the through-horoball criterion of the flat attached to a
// form.

#include "bianchi/cusp.hpp"

namespace bianchi {

struct QForm {
  FieldElement a, b, c;

  QForm() = default;
  QForm(FieldElement a_, FieldElement b_, FieldElement c_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}
  static QForm from_ints(const QuadField& F, const Int& a, const Int& b, const Int& c) {
    return {FieldElement::integer(F, a), FieldElement::integer(F, b),
            FieldElement::integer(F, c)};
  }

  const QuadField& field() const { return *a.field; }
  FieldElement disc() const { return b * b - (a * c) * Rat(4); }
  bool is_integral() const { return a.is_integral() && b.is_integral() && c.is_integral(); }
  IntegralIdeal content() const;  // ideal (a, b, c)
  bool is_primitive() const { return content().norm() == 1; }

  QForm scale(const FieldElement& u) const { return {a * u, b * u, c * u}; }
  QForm negate() const { return {-a, -b, -c}; }
  bool operator==(const QForm& o) const { return a == o.a && b == o.b && c == o.c; }

  // roots of a z^2 + b z + c in C (the flat's endpoints); a must be nonzero
  std::pair<std::complex<double>, std::complex<double>> endpoints() const;
};

std::ostream& operator<<(std::ostream& os, const QForm& q);

// q . g^{-1} for unimodular g (preserves the discriminant).
QForm act(const Mat2& g, const QForm& q);

// Euclidean top height over the cusp xi of the flat of q: the transported
// form q' = act(gamma_xi, q) has leading coefficient a' = a xi^2 + b xi + c
// and the flat's highest point above infinity sits at sqrt|d| / (2 |a'|).
// Returns +infinity when xi is an endpoint of the flat (a' = 0).
double top_height(const QForm& q, const CuspData& xi);

struct MeetsResult {
  bool meets = false;
  bool boundary_flag = false;  // double and quad evaluations disagreed
  bool at_infinity = false;    // xi is an endpoint of the flat
};

// Through-horoball criterion: top_height >= Y, evaluated at two precisions;
// a disagreement classifies as "meets" and is flagged.
MeetsResult meets_horoball(const QForm& q, const CuspData& xi, double Y);

// Exact variant for rational Y^4 * 16 = thresh (used by the enumerator with
// cover heights Y = kappa N_j / sqrt(D), where Y^4 is rational):
// meets <=> N(d) >= 16 Y^4 N(a')^2.
bool meets_horoball_exact(const QForm& q, const CuspData& xi, const Rat& sixteen_Y4);

struct DiscSpec {
  FieldElement d;
  bool fundamental = false;  // in D_F: nonsquare and congruent to a square mod 4
};

DiscSpec classify_disc(const FieldElement& d);

// Lemma threshold: the form stabilizer is torsion-free once |d| > 4 at the
// complex place, i.e. N(d) > 16.
bool is_torsion_free_disc(const FieldElement& d);

}  // namespace bianchi
