#include "bianchi/qform.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <ostream>

namespace bianchi {

using Quad = boost::multiprecision::cpp_bin_float_quad;

IntegralIdeal QForm::content() const {
  if (!is_integral()) throw std::domain_error("content of a non-integral form");
  return IntegralIdeal(FracIdeal::from_generators(field(), {a, b, c}));
}

std::pair<std::complex<double>, std::complex<double>> QForm::endpoints() const {
  std::complex<double> av = a.embed(), bv = b.embed(), cv = c.embed();
  if (std::abs(av) == 0) throw std::domain_error("endpoints: leading coefficient vanishes");
  std::complex<double> s = std::sqrt(bv * bv - 4.0 * av * cv);
  return {(-bv + s) / (2.0 * av), (-bv - s) / (2.0 * av)};
}

std::ostream& operator<<(std::ostream& os, const QForm& q) {
  return os << "(" << q.a << ", " << q.b << ", " << q.c << ")";
}

QForm act(const Mat2& g, const QForm& q) {
  if (g.det() != FieldElement::integer(*g.a.field, 1))
    throw std::invalid_argument("act: matrix must be unimodular");
  // q . g^{-1} with g = [[p, q], [r, s]]
  const FieldElement &p = g.a, &qq = g.b, &r = g.c, &s = g.d;
  const FieldElement &A = q.a, &B = q.b, &C = q.c;
  FieldElement a2 = A * s * s - B * s * r + C * r * r;
  FieldElement b2 = A * (s * qq) * Rat(-2) + B * (s * p + qq * r) - C * (r * p) * Rat(2);
  FieldElement c2 = A * qq * qq - B * (qq * p) + C * p * p;
  return {a2, b2, c2};
}

namespace {

// a' = a xi^2 + b xi + c as an exact field element; xi finite
FieldElement transported_leading(const QForm& q, const CuspData& xi) {
  FieldElement x = xi.xi();
  return q.a * x * x + q.b * x + q.c;
}

template <typename Float>
Float top_height_f(const Rat& norm_d, const Rat& norm_a) {
  // sqrt|d| / (2 |a'|) = N(d)^{1/4} / (2 N(a')^{1/2})
  Float nd(rat_num(norm_d).str());
  nd /= Float(rat_den(norm_d).str());
  Float na(rat_num(norm_a).str());
  na /= Float(rat_den(norm_a).str());
  return sqrt(sqrt(nd)) / (2 * sqrt(na));
}

}  // namespace

double top_height(const QForm& q, const CuspData& xi) {
  FieldElement ap = xi.is_infinity() ? q.a : transported_leading(q, xi);
  if (ap.is_zero()) return INFINITY;
  Rat nd = boost::multiprecision::abs(q.disc().norm());
  Rat na = boost::multiprecision::abs(ap.norm());
  return top_height_f<double>(nd, na).convert_to<double>();
}

MeetsResult meets_horoball(const QForm& q, const CuspData& xi, double Y) {
  MeetsResult r;
  FieldElement ap = xi.is_infinity() ? q.a : transported_leading(q, xi);
  if (ap.is_zero()) {
    r.meets = true;
    r.at_infinity = true;
    return r;
  }
  Rat nd = boost::multiprecision::abs(q.disc().norm());
  Rat na = boost::multiprecision::abs(ap.norm());
  double h53 = top_height_f<double>(nd, na).convert_to<double>();
  Quad h113 = top_height_f<Quad>(nd, na);
  bool m53 = h53 >= Y;
  bool m113 = h113 >= Quad(Y);
  if (m53 != m113) {
    r.meets = true;  // conservative for upper-bound semantics
    r.boundary_flag = true;
    return r;
  }
  r.meets = m53;
  return r;
}

bool meets_horoball_exact(const QForm& q, const CuspData& xi, const Rat& sixteen_Y4) {
  FieldElement ap = xi.is_infinity() ? q.a : transported_leading(q, xi);
  if (ap.is_zero()) return true;
  Rat nd = boost::multiprecision::abs(q.disc().norm());
  Rat na = boost::multiprecision::abs(ap.norm());
  return nd >= sixteen_Y4 * na * na;
}

DiscSpec classify_disc(const FieldElement& d) {
  const QuadField& F = *d.field;
  DiscSpec out;
  out.d = d;
  if (!d.is_integral()) throw std::invalid_argument("classify_disc: d must be integral");
  if (field_sqrt(d).has_value()) {
    out.fundamental = false;  // squares are degenerate, never in D_F
    return out;
  }
  // d = x^2 mod 4 solvable: test the four residues of O/2O
  FieldElement w = FieldElement::omega(F);
  FracIdeal four = FracIdeal::principal(FieldElement::integer(F, 4));
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 1; ++j) {
      FieldElement x = FieldElement::integer(F, i) + w * Rat(j);
      if (four.contains(x * x - d)) {
        out.fundamental = true;
        return out;
      }
    }
  return out;
}

bool is_torsion_free_disc(const FieldElement& d) {
  if (!d.field->imaginary()) throw std::invalid_argument("imaginary fields only");
  return boost::multiprecision::abs(d.norm()) > 16;
}

}  // namespace bianchi
