#include "bianchi/lfunc.hpp"

#include <cmath>

namespace bianchi {

L2Value dirichlet_L2(const QuadField& F, double eps) {
  if (eps <= 0) throw std::invalid_argument("dirichlet_L2: precision must be positive");
  Int Ds = F.imaginary() ? -F.abs_disc : F.abs_disc;
  long D = F.abs_disc.convert_to<long>();
  // |sum_{n>N} chi(n)/n^2| <= 2 max|S| / N^2 with |S| <= D (Abel summation)
  double M = double(D);
  long N = std::lround(std::ceil(std::sqrt(2.0 * M / eps))) + 1;
  // chi values over one period
  std::vector<int8_t> chi(size_t(D));
  for (long a = 0; a < D; ++a) chi[size_t(a)] = int8_t(kronecker(Ds, a));
  double s = 0.0;
  for (long n = N; n >= 1; --n) {  // small terms first
    int c = chi[size_t(n % D)];
    if (c) s += c / (double(n) * double(n));
  }
  return {s, 2.0 * M / (double(N) * double(N)), N};
}

double zeta2(const QuadField& F, double eps) {
  constexpr double zeta_2 = M_PI * M_PI / 6.0;
  return zeta_2 * dirichlet_L2(F, eps).value;
}

double volume(const QuadField& F, double eps) {
  if (!F.imaginary()) throw std::invalid_argument("volume: imaginary quadratic fields only");
  double D = F.abs_disc.convert_to<double>();
  return zeta2(F, eps) * std::pow(D, 1.5) / (4.0 * M_PI * M_PI);
}

}  // namespace bianchi
