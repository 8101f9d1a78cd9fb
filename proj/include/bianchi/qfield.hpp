#pragma once

// Quadratic fields Q(sqrt(m)) with exact element arithmetic.
//
// Elements are stored as u + v*sqrt(m) with rational u, v; integrality is
// decided against the integral basis {1, omega}, omega = (1+sqrt(m))/2 when
// m = 1 mod 4 and sqrt(m) otherwise.

#include <complex>
#include <iosfwd>
#include <optional>

#include "bianchi/numeric.hpp"

namespace bianchi {

struct QuadField {
  Int radicand;   // squarefree m, field is Q(sqrt(m))
  Int abs_disc;   // |disc|: |m| if m = 1 mod 4, else 4|m|
  int r1 = 0, r2 = 0;

  bool imaginary() const { return radicand < 0; }
  // true when m = 1 mod 4 (omega = (1+sqrt m)/2)
  bool half_basis() const {
    Int r = ((radicand % 4) + 4) % 4;
    return r == 1;
  }
  double sqrt_abs_disc() const { return std::sqrt(abs_disc.convert_to<double>()); }

  bool operator==(const QuadField& o) const { return radicand == o.radicand; }
};

QuadField make_field(const Int& m);

struct FieldElement {
  const QuadField* field = nullptr;
  Rat u, v;  // element = u + v*sqrt(m)

  FieldElement() = default;
  FieldElement(const QuadField& F, Rat u_, Rat v_) : field(&F), u(std::move(u_)), v(std::move(v_)) {}

  static FieldElement integer(const QuadField& F, const Int& n) { return {F, Rat(n), Rat(0)}; }
  static FieldElement omega(const QuadField& F) {
    return F.half_basis() ? FieldElement(F, Rat(1, 2), Rat(1, 2)) : FieldElement(F, Rat(0), Rat(1));
  }
  // a + b*omega
  static FieldElement from_omega_coords(const QuadField& F, const Rat& a, const Rat& b);

  bool is_zero() const { return u == 0 && v == 0; }
  bool is_rational() const { return v == 0; }

  FieldElement operator+(const FieldElement& o) const { return {*field, u + o.u, v + o.v}; }
  FieldElement operator-(const FieldElement& o) const { return {*field, u - o.u, v - o.v}; }
  FieldElement operator-() const { return {*field, -u, -v}; }
  FieldElement operator*(const FieldElement& o) const {
    Rat m(field->radicand);
    return {*field, u * o.u + m * v * o.v, u * o.v + v * o.u};
  }
  FieldElement operator*(const Rat& c) const { return {*field, u * c, v * c}; }
  FieldElement conj() const { return {*field, u, -v}; }
  Rat norm() const { return u * u - Rat(field->radicand) * v * v; }
  Rat trace() const { return 2 * u; }

  FieldElement inv() const {
    Rat n = norm();
    if (n == 0) throw std::domain_error("inverse of zero");
    return {*field, u / n, -v / n};
  }
  FieldElement operator/(const FieldElement& o) const { return *this * o.inv(); }

  bool operator==(const FieldElement& o) const { return u == o.u && v == o.v; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  // coordinates (a, b) with element = a + b*omega
  std::pair<Rat, Rat> omega_coords() const {
    if (!field->half_basis()) return {u, v};
    return {u - v, 2 * v};
  }

  bool is_integral() const {
    auto [a, b] = omega_coords();
    return is_integer(a) && is_integer(b);
  }

  // complex embedding with v >= 0 branch of sqrt(m); for real fields the
  // image is real with sqrt(m) > 0.
  std::complex<double> embed() const {
    double m = field->radicand.convert_to<double>();
    double uu = to_double(u), vv = to_double(v);
    if (field->radicand < 0) return {uu, vv * std::sqrt(-m)};
    return {uu + vv * std::sqrt(m), 0.0};
  }

  double abs2() const {  // squared complex modulus = norm for imaginary fields
    if (field->imaginary()) return to_double(norm());
    auto z = embed();
    return z.real() * z.real();
  }
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

// Exact square root in F, if one exists.
std::optional<FieldElement> field_sqrt(const FieldElement& x);

// sqrt(-D) as an integral element (imaginary fields).
FieldElement sqrt_minus_disc(const QuadField& F);

}  // namespace bianchi
