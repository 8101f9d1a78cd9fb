#pragma once

// Planar lattices: Gauss (Lagrange) reduction, successive minima, covering
// data and the shape invariant tau = alpha_2^2 / covolume.

#include <complex>
#include <vector>

#include "bianchi/ideal.hpp"

namespace bianchi {

struct PlanarLattice {
  std::complex<double> b1, b2;  // basis
  double alpha1 = 0, alpha2 = 0;
  double covolume = 0;
  double tau = 0;
};

// Lagrange-reduce a basis; output satisfies |b1| = alpha1 <= |b2| = alpha2
// and |<b1,b2>| <= |b1|^2 / 2.
PlanarLattice gauss_reduce(std::complex<double> b1, std::complex<double> b2);

// Embed a fractional ideal as a lattice in C (imaginary fields).
PlanarLattice embed_ideal(const FracIdeal& I);

double lattice_tau(const FracIdeal& I);

// Shortest nonzero vectors by brute force within |v| <= radius (test oracle
// helper, also used for covering radius bounds).
std::vector<std::complex<double>> lattice_points_in_disk(const PlanarLattice& L,
                                                         std::complex<double> center,
                                                         double radius);

}  // namespace bianchi
