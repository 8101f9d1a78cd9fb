#include "bianchi/qfield.hpp"

#include <ostream>

namespace bianchi {

QuadField make_field(const Int& m) {
  if (m == 0 || m == 1) throw std::invalid_argument("radicand must differ from 0 and 1");
  if (!is_squarefree(m)) throw std::invalid_argument("radicand " + m.str() + " is not squarefree");
  QuadField F;
  F.radicand = m;
  Int am = boost::multiprecision::abs(m);
  Int r = ((m % 4) + 4) % 4;
  F.abs_disc = (r == 1) ? am : 4 * am;
  if (m < 0) {
    F.r1 = 0;
    F.r2 = 1;
  } else {
    F.r1 = 2;
    F.r2 = 0;
  }
  return F;
}

FieldElement FieldElement::from_omega_coords(const QuadField& F, const Rat& a, const Rat& b) {
  if (!F.half_basis()) return {F, a, b};
  return {F, a + b / 2, b / 2};
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
  os << x.u;
  if (x.v != 0) os << (x.v > 0 ? "+" : "") << x.v << "*sqrt(" << x.field->radicand << ")";
  return os;
}

std::optional<FieldElement> field_sqrt(const FieldElement& x) {
  const QuadField& F = *x.field;
  // Solve (p + q sqrt m)^2 = u + v sqrt m exactly:
  //   p^2 + m q^2 = u, 2pq = v.
  if (x.v == 0) {
    // either sqrt(u) rational or sqrt(u/m) rational
    Rat u = x.u;
    if (u == 0) return FieldElement(F, 0, 0);
    Int un = rat_num(u), ud = rat_den(u);
    Int rn, rd;
    if (un > 0 && is_square(un, &rn) && is_square(ud, &rd)) return FieldElement(F, Rat(rn, rd), 0);
    Rat w = u / Rat(F.radicand);
    Int wn = rat_num(w), wd = rat_den(w);
    if (wn > 0 && is_square(wn, &rn) && is_square(wd, &rd)) return FieldElement(F, 0, Rat(rn, rd));
    return std::nullopt;
  }
  // p^2 is a root of t^2 - u t + m v^2/4; need disc = u^2 - m v^2 = N(x) a rational square.
  Rat N = x.norm();
  Int nn = rat_num(N), nd = rat_den(N);
  Int sn, sd;
  if (nn < 0 || !is_square(nn, &sn) || !is_square(nd, &sd)) return std::nullopt;
  Rat s(sn, sd);  // sqrt of norm
  for (const Rat& p2 : {(x.u + s) / 2, (x.u - s) / 2}) {
    if (p2 < 0) continue;
    Int pn = rat_num(p2), pd = rat_den(p2);
    Int qn, qd;
    if (!is_square(pn, &qn) || !is_square(pd, &qd)) continue;
    Rat p(qn, qd);
    if (p == 0) continue;
    Rat q = x.v / (2 * p);
    FieldElement cand(F, p, q);
    if (cand * cand == x) return cand;
  }
  return std::nullopt;
}

FieldElement sqrt_minus_disc(const QuadField& F) {
  if (!F.imaginary()) throw std::domain_error("sqrt(-D) needs an imaginary field");
  // -D = m * k^2 with k = 1 (m = 1 mod 4) or 2
  if (F.half_basis()) return {F, 0, 1};
  return {F, 0, 2};
}

}  // namespace bianchi
