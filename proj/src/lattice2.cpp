#include "bianchi/lattice2.hpp"

#include <cmath>

namespace bianchi {

PlanarLattice gauss_reduce(std::complex<double> b1, std::complex<double> b2) {
  auto n2 = [](std::complex<double> v) { return std::norm(v); };
  if (n2(b1) == 0 || std::abs(b1.real() * b2.imag() - b1.imag() * b2.real()) < 1e-300)
    throw std::invalid_argument("gauss_reduce: degenerate basis");
  if (n2(b1) > n2(b2)) std::swap(b1, b2);
  for (int iter = 0; iter < 256; ++iter) {
    double mu = (b2.real() * b1.real() + b2.imag() * b1.imag()) / n2(b1);
    double r = std::round(mu);
    b2 -= r * b1;
    if (n2(b2) >= n2(b1)) break;
    std::swap(b1, b2);
  }
  PlanarLattice L;
  L.b1 = b1;
  L.b2 = b2;
  L.alpha1 = std::abs(b1);
  L.alpha2 = std::abs(b2);
  L.covolume = std::abs(b1.real() * b2.imag() - b1.imag() * b2.real());
  L.tau = L.alpha2 * L.alpha2 / L.covolume;
  return L;
}

PlanarLattice embed_ideal(const FracIdeal& I) {
  if (!I.field->imaginary()) throw std::invalid_argument("embed_ideal: imaginary fields only");
  return gauss_reduce(I.basis1_elt().embed(), I.basis2_elt().embed());
}

double lattice_tau(const FracIdeal& I) { return embed_ideal(I).tau; }

std::vector<std::complex<double>> lattice_points_in_disk(const PlanarLattice& L,
                                                         std::complex<double> center,
                                                         double radius) {
  // Solve s*b1 + t*b2 near center: bound coefficients via the reduced basis.
  std::vector<std::complex<double>> out;
  double det = L.b1.real() * L.b2.imag() - L.b1.imag() * L.b2.real();
  auto coeffs = [&](std::complex<double> v) {
    double s = (v.real() * L.b2.imag() - v.imag() * L.b2.real()) / det;
    double t = (L.b1.real() * v.imag() - L.b1.imag() * v.real()) / det;
    return std::pair<double, double>(s, t);
  };
  auto [cs, ct] = coeffs(center);
  // |s| spread bounded by radius * |b2| / covol etc.
  double ss = radius * L.alpha2 / L.covolume + 1;
  double ts = radius * L.alpha1 / L.covolume + 1;
  long s0 = lround(std::floor(cs - ss)), s1 = lround(std::ceil(cs + ss));
  long t0 = lround(std::floor(ct - ts)), t1 = lround(std::ceil(ct + ts));
  for (long s = s0; s <= s1; ++s)
    for (long t = t0; t <= t1; ++t) {
      std::complex<double> v = double(s) * L.b1 + double(t) * L.b2;
      if (std::abs(v - center) <= radius) out.push_back(v);
    }
  return out;
}

}  // namespace bianchi
