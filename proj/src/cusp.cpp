#include "bianchi/cusp.hpp"

#include <algorithm>
#include <cmath>

namespace bianchi {

IntegralIdeal cusp_ideal(const FieldElement& alpha, const FieldElement& beta) {
  if (!alpha.is_integral() || !beta.is_integral())
    throw std::invalid_argument("cusp_ideal: coordinates must be integral");
  if (alpha.is_zero() && beta.is_zero()) throw std::invalid_argument("cusp_ideal: (0,0)");
  const QuadField& F = *alpha.field;
  if (beta.is_zero()) return unit_ideal(F);  // infinity, by convention
  IntegralIdeal num = principal_ideal(beta);
  IntegralIdeal den = alpha.is_zero() ? principal_ideal(beta)
                                      : ideal_gcd(principal_ideal(alpha), principal_ideal(beta));
  // (beta) / (alpha, beta) = (beta) * (alpha,beta)^{-1}
  FracIdeal q = num.lat.multiply(den.lat.inverse());
  return IntegralIdeal(q);
}

CuspData infinity_cusp(const QuadField& F) {
  CuspData c;
  c.field = &F;
  c.alpha = FieldElement::integer(F, 1);
  c.beta = FieldElement::integer(F, 0);
  c.idealB = unit_ideal(F);
  c.normB = 1;
  return c;
}

std::vector<CuspData> heegner_points(const QuadField& F) {
  if (!F.imaginary()) throw std::invalid_argument("heegner_points: imaginary fields only");
  std::vector<CuspData> out;
  out.push_back(infinity_cusp(F));
  for (const auto& f : class_group(F)) {
    if (f.a == 1) continue;
    CuspData c;
    c.field = &F;
    c.alpha = FieldElement::integer(F, -f.b) + sqrt_minus_disc(F);
    c.beta = FieldElement::integer(F, 2 * f.a);
    c.idealB = cusp_ideal(c.alpha, c.beta);
    c.normB = c.idealB.norm();
    c.heegner = std::make_pair(f.a, f.b);
    out.push_back(c);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CuspData& x, const CuspData& y) { return x.normB < y.normB; });
  return out;
}

double transported_height(const CuspData& xi, const Point3& x) {
  if (xi.is_infinity()) return x.y;
  // gamma_xi has bottom row (-1, xi): y(gamma_xi x) = y / (|x.z - xi|^2 + y^2)
  std::complex<double> diff = x.z - xi.embed();
  return x.y / (std::norm(diff) + x.y * x.y);
}

double height_at(const CuspData& xi, const Point3& x) {
  return transported_height(xi, x) / xi.normB.convert_to<double>();
}

HoroballCover horoball_cover(const QuadField& F, double kappa) {
  if (kappa <= 0) throw std::invalid_argument("horoball_cover: kappa must be positive");
  HoroballCover cov;
  cov.field = &F;
  cov.kappa = kappa;
  double rD = F.sqrt_abs_disc();
  for (const auto& c : heegner_points(F)) {
    double Y = kappa * c.normB.convert_to<double>() / rD;
    cov.entries.push_back({c, Y});
  }
  return cov;
}

namespace {

std::complex<double> omega_embed(const QuadField& F) {
  return FieldElement::omega(F).embed();
}

// Below sqrt(1 - |z - p|^2), p in O_F, the point has a higher translate via
// an inversion with bottom row (1, -p); such points need no cover check.
double principal_floor(const QuadField& F, std::complex<double> z) {
  std::complex<double> w = omega_embed(F);
  double best = 0.0;
  double t0 = z.imag() / w.imag();
  for (long dt = -1; dt <= 2; ++dt) {
    long t = lround(std::floor(t0)) + dt;
    double s0 = z.real() - double(t) * w.real();
    for (long ds = -1; ds <= 2; ++ds) {
      long s = lround(std::floor(s0)) + ds;
      std::complex<double> p(double(s) + double(t) * w.real(), double(t) * w.imag());
      double d2 = std::norm(z - p);
      if (d2 < 1.0) best = std::max(best, std::sqrt(1.0 - d2));
    }
  }
  return best;
}

}  // namespace

CoverReport verify_cover(const HoroballCover& cover, int grid_resolution) {
  if (grid_resolution < 8) throw std::invalid_argument("verify_cover: gridResolution >= 8");
  const QuadField& F = *cover.field;
  double rD = F.sqrt_abs_disc();
  std::complex<double> w = omega_embed(F);

  // Finite cusps and their O_F-translates within distance 2 of the
  // parallelogram; stored as (position, norm of B).
  std::vector<std::pair<std::complex<double>, double>> finite_cusps;
  for (const auto& [c, Y] : cover.entries) {
    (void)Y;
    if (c.is_infinity()) continue;
    std::complex<double> base = c.embed();
    double nb = c.normB.convert_to<double>();
    long trange = lround(std::ceil((w.imag() + 4.0) / w.imag()));
    for (long t = -trange; t <= trange; ++t) {
      double py = base.imag() + double(t) * w.imag();
      if (py < -2.0 || py > w.imag() + 2.0) continue;
      double xoff = base.real() + double(t) * w.real();
      long s_lo = lround(std::floor(-2.0 - xoff));
      long s_hi = lround(std::ceil(3.0 + std::abs(w.real()) - xoff));
      for (long s = s_lo; s <= s_hi; ++s)
        finite_cusps.push_back({{xoff + double(s), py}, nb});
    }
  }

  double min_kappa = INFINITY;
  long samples = 0;
  const int levels = 14;
  for (int gi = 0; gi < grid_resolution; ++gi) {
    for (int gj = 0; gj < grid_resolution; ++gj) {
      double s = (gi + 0.5) / grid_resolution;
      double t = (gj + 0.5) / grid_resolution;
      std::complex<double> z = s + t * w;
      double floor_y = std::max(principal_floor(F, z), 0.02 / rD);
      double top = std::max(2.0 * floor_y, 2.0 / rD);
      for (int li = 0; li < levels; ++li) {
        double y = top * std::pow(floor_y / top, double(li) / (levels - 1));
        double best = y;  // infinity cusp: y_inf = y
        for (const auto& [pos, nb] : finite_cusps) {
          double denom = std::norm(z - pos) + y * y;
          best = std::max(best, y / denom / nb);
        }
        min_kappa = std::min(min_kappa, best * rD);
        ++samples;
      }
    }
  }
  CoverReport rep;
  rep.max_required_kappa = min_kappa;
  rep.covered = cover.kappa <= min_kappa;
  rep.samples = samples;
  return rep;
}

double cusp_shape_tau(const CuspData& xi) {
  FracIdeal B2 = xi.idealB.lat.multiply(xi.idealB.lat);
  return lattice_tau(B2);
}

double unipotent_thin_volume(const QuadField& F) {
  double s = 0;
  for (const auto& c : heegner_points(F)) s += cusp_shape_tau(c);
  return s;
}

TailRatio heegner_tail_ratio(const QuadField& F, double bound) {
  if (!F.imaginary()) throw std::invalid_argument("heegner_tail_ratio: imaginary fields only");
  double D = F.abs_disc.convert_to<double>();
  if (bound <= 0) bound = std::cbrt(D);
  TailRatio r;
  auto cusps = heegner_points(F);
  for (const auto& c : cusps) {
    if (c.is_infinity()) continue;
    ++r.total;
    if (std::abs(c.embed()) > bound) ++r.beyond;
  }
  if (r.total == 0) {
    r.trivial = true;
    r.ratio = 0;
    return r;
  }
  r.ratio = double(r.beyond) / double(r.total);
  return r;
}

}  // namespace bianchi
