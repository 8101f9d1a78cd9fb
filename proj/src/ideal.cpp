#include "bianchi/ideal.hpp"

#include <algorithm>
#include <numeric>

namespace bianchi {

Hnf2 hnf_from_rows(std::vector<std::pair<Int, Int>> gens) {
  // Gaussian elimination over Z on generators (x, y) in omega coords.
  // First make all second coordinates zero except one via gcd cascades.
  Int d = 0, b = 0;
  // reduce on the omega-coordinate (index loop: we append while iterating)
  for (size_t i = 0; i < gens.size(); ++i) {
    Int x = gens[i].first, y = gens[i].second;
    if (y == 0) continue;
    if (d == 0) {
      d = y;
      b = x;
      continue;
    }
    // extended gcd of d and y
    Int r0 = d, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      Int q = r0 / r1;
      r0 -= q * r1;
      std::swap(r0, r1);
      s0 -= q * s1;
      std::swap(s0, s1);
      t0 -= q * t1;
      std::swap(t0, t1);
    }
    Int g0 = r0;
    Int nb = s0 * b + t0 * x;
    // the discarded combination is purely rational: (x*d - b*y)/g0
    Int rat = (x * d - b * y) / g0;
    d = g0;
    b = nb;
    gens.push_back({rat, Int(0)});
  }
  Int a = 0;
  for (auto& g : gens) {
    if (g.second != 0) continue;
    a = boost::multiprecision::gcd(a, g.first);
  }
  a = boost::multiprecision::abs(a);
  if (d < 0) {
    d = -d;
    b = -b;
  }
  Hnf2 h;
  if (d == 0 && a == 0) return h;
  h.a = a;
  h.b = b;
  h.d = d;
  if (h.a != 0 && h.d != 0) {
    Int r = h.b % h.a;
    if (r < 0) r += h.a;
    h.b = r;
  }
  return h;
}

std::optional<std::vector<Int>> solve_integer_combination(
    const std::vector<std::pair<Int, Int>>& gens, const std::pair<Int, Int>& target) {
  // Column HNF with transformation tracking: bring the 2xN matrix to
  // triangular form, solve, and map coefficients back.
  size_t n = gens.size();
  std::vector<std::pair<Int, Int>> M = gens;
  // U is N x N, columns track combinations: M_current[j] = sum_i gens[i]*U[i][j]
  std::vector<std::vector<Int>> U(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i) U[i][i] = 1;

  auto col_addmul = [&](size_t dst, size_t src, const Int& q) {
    M[dst].first -= q * M[src].first;
    M[dst].second -= q * M[src].second;
    for (size_t i = 0; i < n; ++i) U[i][dst] -= q * U[i][src];
  };

  // eliminate second coordinate into a single pivot column
  int pivot2 = -1;
  for (size_t j = 0; j < n; ++j) {
    if (M[j].second == 0) continue;
    if (pivot2 < 0) {
      pivot2 = int(j);
      continue;
    }
    // gcd-reduce columns pivot2 and j on second coordinate
    while (M[j].second != 0) {
      Int q = M[pivot2].second / M[j].second;
      col_addmul(size_t(pivot2), j, q);
      std::swap(M[size_t(pivot2)], M[j]);
      for (size_t i = 0; i < n; ++i) std::swap(U[i][size_t(pivot2)], U[i][j]);
    }
  }
  int pivot1 = -1;
  for (size_t j = 0; j < n; ++j) {
    if (int(j) == pivot2 || M[j].first == 0) continue;
    if (pivot1 < 0) {
      pivot1 = int(j);
      continue;
    }
    while (M[j].first != 0) {
      Int q = M[pivot1].first / M[j].first;
      col_addmul(size_t(pivot1), j, q);
      std::swap(M[size_t(pivot1)], M[j]);
      for (size_t i = 0; i < n; ++i) std::swap(U[i][size_t(pivot1)], U[i][j]);
    }
  }
  // solve: t2 * M[pivot2] + t1 * M[pivot1] = target
  Int c1 = 0, c2 = 0;
  if (pivot2 >= 0) {
    if (target.second % M[size_t(pivot2)].second != 0) return std::nullopt;
    c2 = target.second / M[size_t(pivot2)].second;
  } else if (target.second != 0) {
    return std::nullopt;
  }
  Int rem = target.first - (pivot2 >= 0 ? c2 * M[size_t(pivot2)].first : Int(0));
  if (pivot1 >= 0) {
    if (rem % M[size_t(pivot1)].first != 0) return std::nullopt;
    c1 = rem / M[size_t(pivot1)].first;
  } else if (rem != 0) {
    return std::nullopt;
  }
  std::vector<Int> out(n, 0);
  for (size_t i = 0; i < n; ++i) {
    Int acc = 0;
    if (pivot2 >= 0) acc += U[i][size_t(pivot2)] * c2;
    if (pivot1 >= 0) acc += U[i][size_t(pivot1)] * c1;
    out[i] = acc;
  }
  return out;
}

void FracIdeal::canonicalize() {
  if (den < 0) den = -den;
  if (is_zero()) {
    den = 1;
    return;
  }
  Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(h.a, h.b),
                                     boost::multiprecision::gcd(h.d, den));
  if (g > 1) {
    h.a /= g;
    h.b /= g;
    h.d /= g;
    den /= g;
  }
}

FracIdeal FracIdeal::from_generators(const QuadField& F, const std::vector<FieldElement>& gens,
                                     bool close_under_omega) {
  std::vector<std::pair<Rat, Rat>> coords;
  FieldElement w = FieldElement::omega(F);
  for (const auto& g : gens) {
    auto c = g.omega_coords();
    coords.push_back(c);
    if (close_under_omega) coords.push_back((g * w).omega_coords());
  }
  Int den = 1;
  for (auto& c : coords) {
    den = boost::multiprecision::lcm(den, rat_den(c.first));
    den = boost::multiprecision::lcm(den, rat_den(c.second));
  }
  std::vector<std::pair<Int, Int>> igens;
  for (auto& c : coords)
    igens.push_back({rat_num(c.first * den), rat_num(c.second * den)});
  FracIdeal out;
  out.field = &F;
  out.den = den;
  out.h = hnf_from_rows(std::move(igens));
  out.canonicalize();
  return out;
}

FracIdeal FracIdeal::principal(const FieldElement& g) {
  return from_generators(*g.field, {g});
}

bool FracIdeal::contains(const FieldElement& x) const {
  if (is_zero()) return x.is_zero();
  auto [cx, cy] = x.omega_coords();
  Rat X = cx * den, Y = cy * den;
  if (!is_integer(X) || !is_integer(Y)) return false;
  Int xi = rat_num(X), yi = rat_num(Y);
  if (yi % h.d != 0) return false;
  Int t = yi / h.d;
  Int r = xi - t * h.b;
  return r % h.a == 0;
}

bool FracIdeal::contains_lattice(const FracIdeal& other) const {
  if (other.is_zero()) return true;
  return contains(other.basis1_elt()) && contains(other.basis2_elt());
}

bool FracIdeal::is_integral_ideal() const {
  if (is_zero()) return false;
  FracIdeal O = ring_of_integers(*field);
  if (!O.contains_lattice(*this)) return false;
  // O_F-module: omega * basis stays inside
  FieldElement w = FieldElement::omega(*field);
  return contains(basis1_elt() * w) && contains(basis2_elt() * w);
}

FracIdeal FracIdeal::multiply(const FracIdeal& o) const {
  std::vector<FieldElement> gens = {basis1_elt() * o.basis1_elt(), basis1_elt() * o.basis2_elt(),
                                    basis2_elt() * o.basis1_elt(), basis2_elt() * o.basis2_elt()};
  return from_generators(*field, gens, false);
}

FracIdeal FracIdeal::multiply_elt(const FieldElement& x) const {
  return from_generators(*field, {basis1_elt() * x, basis2_elt() * x}, false);
}

FracIdeal FracIdeal::add(const FracIdeal& o) const {
  return from_generators(*field, {basis1_elt(), basis2_elt(), o.basis1_elt(), o.basis2_elt()},
                         false);
}

FracIdeal FracIdeal::intersect(const FracIdeal& o) const {
  // Solve s1*v1 + s2*v2 = t1*w1 + t2*w2 over Z: kernel of [v1 v2 -w1 -w2].
  Int D = den * o.den;
  auto scale_this = [&](const std::pair<Rat, Rat>& c) {
    return std::pair<Int, Int>(rat_num(c.first * D), rat_num(c.second * D));
  };
  std::vector<std::pair<Int, Int>> cols = {
      scale_this(basis1()), scale_this(basis2()),
      {-rat_num(o.basis1().first * D), -rat_num(o.basis1().second * D)},
      {-rat_num(o.basis2().first * D), -rat_num(o.basis2().second * D)}};
  // kernel via column HNF with transform
  size_t n = 4;
  std::vector<std::pair<Int, Int>> M = cols;
  std::vector<std::vector<Int>> U(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i) U[i][i] = 1;
  auto col_addmul = [&](size_t dst, size_t src, const Int& q) {
    M[dst].first -= q * M[src].first;
    M[dst].second -= q * M[src].second;
    for (size_t i = 0; i < n; ++i) U[i][dst] -= q * U[i][src];
  };
  int p2 = -1;
  for (size_t j = 0; j < n; ++j) {
    if (M[j].second == 0) continue;
    if (p2 < 0) {
      p2 = int(j);
      continue;
    }
    while (M[j].second != 0) {
      Int q = M[size_t(p2)].second / M[j].second;
      col_addmul(size_t(p2), j, q);
      std::swap(M[size_t(p2)], M[j]);
      for (size_t i = 0; i < n; ++i) std::swap(U[i][size_t(p2)], U[i][j]);
    }
  }
  int p1 = -1;
  for (size_t j = 0; j < n; ++j) {
    if (int(j) == p2 || M[j].first == 0) continue;
    if (p1 < 0) {
      p1 = int(j);
      continue;
    }
    while (M[j].first != 0) {
      Int q = M[size_t(p1)].first / M[j].first;
      col_addmul(size_t(p1), j, q);
      std::swap(M[size_t(p1)], M[j]);
      for (size_t i = 0; i < n; ++i) std::swap(U[i][size_t(p1)], U[i][j]);
    }
  }
  // kernel columns: those j with M[j] == (0,0); intersection vectors = first
  // two U-rows applied to this lattice's basis
  std::vector<FieldElement> gens;
  for (size_t j = 0; j < n; ++j) {
    if (M[j].first != 0 || M[j].second != 0) continue;
    FieldElement v = basis1_elt() * Rat(U[0][j]) + basis2_elt() * Rat(U[1][j]);
    gens.push_back(v);
  }
  if (gens.empty()) return zero(*field);
  return from_generators(*field, gens, false);
}

FracIdeal FracIdeal::conjugate() const {
  return from_generators(*field, {basis1_elt().conj(), basis2_elt().conj()}, false);
}

FracIdeal FracIdeal::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero ideal");
  FracIdeal c = conjugate();
  Rat n = norm();
  FracIdeal out = c;
  // divide by norm
  out = out.multiply_elt(FieldElement(*field, Rat(1) / n, 0));
  return out;
}

Int FracIdeal::index_of(const FracIdeal& sub) const {
  if (!contains_lattice(sub)) throw std::invalid_argument("index_of: not a sublattice");
  Rat idx = sub.norm() / norm();
  if (!is_integer(idx)) throw std::logic_error("index_of: non-integer index");
  return rat_num(idx);
}

std::vector<FieldElement> FracIdeal::coset_reps(const FracIdeal& sub) const {
  // coordinates of sub basis w.r.t. this basis form an integer matrix; reps
  // from its HNF digits
  auto c1 = coords_of(sub.basis1_elt());
  auto c2 = coords_of(sub.basis2_elt());
  if (!is_integer(c1.first) || !is_integer(c1.second) || !is_integer(c2.first) ||
      !is_integer(c2.second))
    throw std::invalid_argument("coset_reps: not a sublattice");
  Hnf2 H = hnf_from_rows(
      {{rat_num(c1.first), rat_num(c1.second)}, {rat_num(c2.first), rat_num(c2.second)}});
  std::vector<FieldElement> out;
  out.reserve(size_t((H.a * H.d).convert_to<long long>()));
  for (Int i = 0; i < H.a; ++i)
    for (Int j = 0; j < H.d; ++j) out.push_back(from_coords(Rat(i), Rat(j)));
  return out;
}

std::pair<Rat, Rat> FracIdeal::coords_of(const FieldElement& x) const {
  auto [cx, cy] = x.omega_coords();
  // solve s*(a,0) + t*(b,d) = den*(cx, cy)
  Rat t = cy * den / Rat(h.d);
  Rat s = (cx * den - t * Rat(h.b)) / Rat(h.a);
  return {s, t};
}

FieldElement FracIdeal::from_coords(const Rat& s, const Rat& t) const {
  Rat cx = (s * Rat(h.a) + t * Rat(h.b)) / den;
  Rat cy = t * Rat(h.d) / den;
  return FieldElement::from_omega_coords(*field, cx, cy);
}

IntegralIdeal ideal_gcd(const IntegralIdeal& a, const IntegralIdeal& b) {
  return IntegralIdeal(a.lat.add(b.lat));
}

IntegralIdeal ideal_mul(const IntegralIdeal& a, const IntegralIdeal& b) {
  return IntegralIdeal(a.lat.multiply(b.lat));
}

IntegralIdeal principal_ideal(const FieldElement& g) {
  if (g.is_zero()) throw std::invalid_argument("principal ideal of zero");
  return IntegralIdeal(FracIdeal::principal(g));
}

IntegralIdeal unit_ideal(const QuadField& F) {
  return IntegralIdeal(FracIdeal::ring_of_integers(F));
}

std::vector<IntegralIdeal> ideals_of_norm(const QuadField& F, const Int& n) {
  std::vector<IntegralIdeal> out;
  if (n <= 0) return out;
  // HNF sublattices of index n: basis (a,0),(b,d), a*d = n, 0 <= b < a;
  // keep those closed under multiplication by omega.
  for (Int a = 1; a <= n; ++a) {
    if (n % a != 0) continue;
    Int d = n / a;
    for (Int b = 0; b < a; ++b) {
      FracIdeal L;
      L.field = &F;
      L.den = 1;
      L.h = {a, b, d};
      if (L.is_integral_ideal()) out.push_back(IntegralIdeal(L));
    }
  }
  return out;
}

std::pair<FieldElement, FieldElement> ideal_bezout(const IntegralIdeal& A, const IntegralIdeal& B) {
  const QuadField& F = *A.lat.field;
  std::vector<std::pair<Int, Int>> gens;
  Int D = A.lat.den * B.lat.den;  // both are 1 for integral ideals
  auto push = [&](const FieldElement& e) {
    auto c = e.omega_coords();
    gens.push_back({rat_num(c.first), rat_num(c.second)});
  };
  push(A.lat.basis1_elt());
  push(A.lat.basis2_elt());
  push(B.lat.basis1_elt());
  push(B.lat.basis2_elt());
  (void)D;
  auto sol = solve_integer_combination(gens, {1, 0});
  if (!sol) throw std::invalid_argument("ideal_bezout: ideals not coprime");
  auto& s = *sol;
  FieldElement u = A.lat.basis1_elt() * Rat(s[0]) + A.lat.basis2_elt() * Rat(s[1]);
  FieldElement v = B.lat.basis1_elt() * Rat(s[2]) + B.lat.basis2_elt() * Rat(s[3]);
  return {u, v};
}

}  // namespace bianchi
