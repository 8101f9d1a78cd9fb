#pragma once

// Upper half-space model of H^3 and the SL2 isometric action, with exact 2x2
// matrices over a quadratic field and their numeric Mobius application.

#include <array>
#include <complex>

#include "bianchi/qfield.hpp"

namespace bianchi {

struct Point3 {
  std::complex<double> z;
  double y;  // > 0
};

struct Mat2 {
  // row-major [[a, b], [c, d]]
  FieldElement a, b, c, d;

  static Mat2 identity(const QuadField& F) {
    FieldElement one = FieldElement::integer(F, 1), zero = FieldElement::integer(F, 0);
    return {one, zero, zero, one};
  }
  FieldElement det() const { return a * d - b * c; }
  Mat2 mul(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 inv_det1() const { return {d, -b, -c, a}; }  // valid when det = 1
  Mat2 neg() const { return {-a, -b, -c, -d}; }
  FieldElement trace() const { return a + d; }
  bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
};

// gamma_xi = [[0, 1], [-1, xi]], sends xi to infinity.
Mat2 gamma_xi(const FieldElement& xi);

Point3 mobius(const std::complex<double>& a, const std::complex<double>& b,
              const std::complex<double>& c, const std::complex<double>& d, const Point3& x);

Point3 mobius(const Mat2& g, const Point3& x);

// Image of the boundary point w under the Mobius map (complex, may be inf).
std::complex<double> mobius_boundary(const Mat2& g, const std::complex<double>& w);

// Hyperbolic distance in H^3.
double hyp_dist(const Point3& p, const Point3& q);

}  // namespace bianchi
