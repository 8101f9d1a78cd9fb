#include "bianchi/classgroup.hpp"

#include <algorithm>

namespace bianchi {

std::vector<ReducedForm> class_group(const QuadField& F) {
  if (!F.imaginary()) throw std::invalid_argument("class_group: field must be imaginary");
  const Int D = F.abs_disc;
  std::vector<ReducedForm> out;
  for (Int a = 1; 3 * a * a <= D; ++a) {
    for (Int b = -a; b <= a; ++b) {
      Int num = b * b + D;
      if (num % (4 * a) != 0) continue;
      Int c = num / (4 * a);
      if (c < a) continue;
      if ((b < 0) && (b == -a || a == c)) continue;  // normalized boundary
      Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(a, boost::multiprecision::abs(b)), c);
      if (g != 1) continue;
      out.push_back({a, b, c});
    }
  }
  std::sort(out.begin(), out.end(), [](const ReducedForm& x, const ReducedForm& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
  return out;
}

int unit_count(const QuadField& F) {
  if (!F.imaginary()) throw std::invalid_argument("unit_count: imaginary fields only");
  if (F.abs_disc == 3) return 6;
  if (F.abs_disc == 4) return 4;
  return 2;
}

Int class_number_analytic(const QuadField& F) {
  if (!F.imaginary()) throw std::invalid_argument("imaginary fields only");
  const Int D = F.abs_disc;
  Int w = unit_count(F);
  Int s = 0;
  for (Int a = 1; a < D; ++a) s += a * kronecker(-D, a);
  Int num = w * boost::multiprecision::abs(s);
  if (num % (2 * D) != 0) throw std::logic_error("analytic class number is not an integer");
  return num / (2 * D);
}

IntegralIdeal form_ideal(const QuadField& F, const ReducedForm& f) {
  FieldElement root = sqrt_minus_disc(F);  // sqrt(-D)
  FieldElement gen2 = (FieldElement::integer(F, -f.b) + root) * Rat(1, 2);
  return IntegralIdeal(
      FracIdeal::from_generators(F, {FieldElement::integer(F, f.a), gen2}));
}

std::vector<IntegralIdeal> ideal_class_reps(const QuadField& F) {
  auto forms = class_group(F);
  std::vector<IntegralIdeal> out;
  out.push_back(unit_ideal(F));
  for (const auto& f : forms) {
    if (f.a == 1) continue;  // principal class -> O_F already listed
    out.push_back(form_ideal(F, f));
  }
  std::sort(out.begin() + 1, out.end(), [](const IntegralIdeal& x, const IntegralIdeal& y) {
    if (x.norm() != y.norm()) return x.norm() < y.norm();
    if (x.lat.h.b != y.lat.h.b) return x.lat.h.b < y.lat.h.b;
    return x.lat.h.a < y.lat.h.a;
  });
  return out;
}

}  // namespace bianchi
