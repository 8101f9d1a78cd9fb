#include "bianchi/halfspace.hpp"

#include <cmath>

namespace bianchi {

Mat2 gamma_xi(const FieldElement& xi) {
  const QuadField& F = *xi.field;
  FieldElement one = FieldElement::integer(F, 1), zero = FieldElement::integer(F, 0);
  return {zero, one, -one, xi};
}

Point3 mobius(const std::complex<double>& a, const std::complex<double>& b,
              const std::complex<double>& c, const std::complex<double>& d, const Point3& x) {
  std::complex<double> w = c * x.z + d;
  double denom = std::norm(w) + std::norm(c) * x.y * x.y;
  std::complex<double> zn = (a * x.z + b) * std::conj(w) + a * std::conj(c) * x.y * x.y;
  return {zn / denom, x.y / denom};
}

Point3 mobius(const Mat2& g, const Point3& x) {
  return mobius(g.a.embed(), g.b.embed(), g.c.embed(), g.d.embed(), x);
}

std::complex<double> mobius_boundary(const Mat2& g, const std::complex<double>& w) {
  std::complex<double> a = g.a.embed(), b = g.b.embed(), c = g.c.embed(), d = g.d.embed();
  if (std::isinf(w.real())) {
    if (std::abs(c) == 0) return {INFINITY, 0};
    return a / c;
  }
  std::complex<double> den = c * w + d;
  if (std::abs(den) == 0) return {INFINITY, 0};
  return (a * w + b) / den;
}

double hyp_dist(const Point3& p, const Point3& q) {
  double num = std::norm(p.z - q.z) + (p.y - q.y) * (p.y - q.y);
  double ch = 1.0 + num / (2.0 * p.y * q.y);
  return std::acosh(ch);
}

}  // namespace bianchi
