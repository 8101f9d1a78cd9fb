#pragma once

// Cusps of the Bianchi orbifold: Heegner representatives per ideal class, the
// ideal B = (beta)/(alpha, beta), cusp height functions, the horoball cover
// from reduction theory and its empirical verification, and cross-section
// shape invariants.

#include "bianchi/classgroup.hpp"
#include "bianchi/halfspace.hpp"
#include "bianchi/lattice2.hpp"

namespace bianchi {

struct CuspData {
  const QuadField* field = nullptr;
  FieldElement alpha, beta;  // xi = alpha/beta, beta = 0 encodes infinity
  IntegralIdeal idealB;      // (beta)/(alpha,beta); O_F for infinity by convention
  Int normB = 1;
  std::optional<std::pair<Int, Int>> heegner;  // (a, b) of the source reduced form

  bool is_infinity() const { return beta.is_zero(); }
  FieldElement xi() const {
    if (is_infinity()) throw std::domain_error("xi of the infinite cusp");
    return alpha / beta;
  }
  std::complex<double> embed() const { return xi().embed(); }
};

// B = (beta)/(alpha, beta) for integral (alpha, beta) != (0, 0).
IntegralIdeal cusp_ideal(const FieldElement& alpha, const FieldElement& beta);

CuspData infinity_cusp(const QuadField& F);

// One cusp per ideal class; infinity first, then the Heegner point
// (-b + sqrt(-D)) / (2a) of each nonprincipal reduced form.
std::vector<CuspData> heegner_points(const QuadField& F);

// y_xi(x) = N(B)^{-1} y(gamma_xi x); for xi = infinity just the height y.
double height_at(const CuspData& xi, const Point3& x);

// Height of x transported to infinity across xi: y(gamma_xi x). Membership in
// the horoball B_xi(Y) (Euclidean ball at xi of diameter 1/Y) is
// transported_height >= Y.
double transported_height(const CuspData& xi, const Point3& x);

struct HoroballCover {
  const QuadField* field = nullptr;
  double kappa = 0;
  // (cusp, Y_j) with Y_j = kappa * N(C_j) / sqrt(D); entries sorted by normB,
  // infinity first.
  std::vector<std::pair<CuspData, double>> entries;
};

HoroballCover horoball_cover(const QuadField& F, double kappa);

struct CoverReport {
  bool covered = false;
  double max_required_kappa = 0;  // largest kappa for which every sample is covered
  long samples = 0;
};

// Samples the cusp-infinity fundamental parallelogram above the principal
// floor sqrt(max(0, 1 - |z - p|^2)) and measures min over samples of
// sqrt(D) * max_xi y_xi(x) over the listed cusps and their O_F-translates.
CoverReport verify_cover(const HoroballCover& cover, int grid_resolution);

// tau of the lattice B^2 in C (shape of the cusp cross-section).
double cusp_shape_tau(const CuspData& xi);

// Sum of cusp_shape_tau over the ideal-class cusps.
double unipotent_thin_volume(const QuadField& F);

struct TailRatio {
  double ratio = 0;
  long total = 0;   // number of finite Heegner points, h - 1
  long beyond = 0;  // those with |xi| > bound
  bool trivial = false;  // h = 1, no finite points
};

// |{xi in H(D) : |xi| > B}| / |H(D)|, B defaulting to D^{1/3} when <= 0.
TailRatio heegner_tail_ratio(const QuadField& F, double bound = 0);

}  // namespace bianchi
