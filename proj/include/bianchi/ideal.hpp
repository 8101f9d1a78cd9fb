#pragma once

// Rank-2 Z-modules in a quadratic field, kept in Hermite normal form over the
// integral basis {1, omega}. Fractional ideals, ideal products/gcds/inverses,
// membership and coset enumeration all live here.

#include <functional>
#include <vector>

#include "bianchi/qfield.hpp"

namespace bianchi {

// Column-style HNF for a 2xN integer matrix; returns the (at most two)
// nonzero columns as [[a, b], [0, d]] with a, d > 0 and 0 <= b < a... column
// convention: the module is { s*(a,0) + t*(b,d) : s,t in Z } in row coords.
struct Hnf2 {
  Int a = 0, b = 0, d = 0;  // basis (a, 0), (b, d); zero module has a = d = 0
  bool operator==(const Hnf2& o) const { return a == o.a && b == o.b && d == o.d; }
};

Hnf2 hnf_from_rows(std::vector<std::pair<Int, Int>> gens);

// Solve [g1 ... gn] * x = target over Z. Returns coefficient vector if solvable.
std::optional<std::vector<Int>> solve_integer_combination(
    const std::vector<std::pair<Int, Int>>& gens, const std::pair<Int, Int>& target);

// A Z-lattice of rank 2 in F: denominator-scaled integral HNF.
// Module = (1/den) * { integer span of (a,0),(b,d) in omega coords }.
struct FracIdeal {
  const QuadField* field = nullptr;
  Int den = 1;  // positive
  Hnf2 h;

  static FracIdeal zero(const QuadField& F) { return {&F, 1, {}}; }
  static FracIdeal ring_of_integers(const QuadField& F) { return {&F, 1, {1, 0, 1}}; }
  static FracIdeal from_generators(const QuadField& F, const std::vector<FieldElement>& gens,
                                   bool close_under_omega = true);
  static FracIdeal principal(const FieldElement& g);

  bool is_zero() const { return h.a == 0; }
  void canonicalize();

  // omega-coordinates of the two basis vectors, as rationals
  std::pair<Rat, Rat> basis1() const { return {Rat(h.a, den), Rat(0)}; }
  std::pair<Rat, Rat> basis2() const { return {Rat(h.b, den), Rat(h.d, den)}; }
  FieldElement basis1_elt() const { return FieldElement::from_omega_coords(*field, Rat(h.a, den), 0); }
  FieldElement basis2_elt() const {
    return FieldElement::from_omega_coords(*field, Rat(h.b, den), Rat(h.d, den));
  }

  bool contains(const FieldElement& x) const;
  bool contains_lattice(const FracIdeal& other) const;

  // positive rational; for integral ideals this is the index [O_F : I]
  Rat norm() const {
    return Rat(h.a * h.d, den * den);
  }
  bool is_integral_ideal() const;

  FracIdeal multiply(const FracIdeal& o) const;
  FracIdeal multiply_elt(const FieldElement& x) const;
  FracIdeal add(const FracIdeal& o) const;           // ideal gcd / lattice join
  FracIdeal intersect(const FracIdeal& o) const;     // lattice meet
  FracIdeal conjugate() const;
  FracIdeal inverse() const;  // valid for invertible O_F-ideals: conj/norm

  // index [this : sub] for sub a finite-index sublattice
  Int index_of(const FracIdeal& sub) const;

  // coset representatives of sub inside this lattice (sub must be contained)
  std::vector<FieldElement> coset_reps(const FracIdeal& sub) const;

  // write x in rational coordinates w.r.t. this lattice's basis
  std::pair<Rat, Rat> coords_of(const FieldElement& x) const;
  FieldElement from_coords(const Rat& s, const Rat& t) const;

  bool operator==(const FracIdeal& o) const {
    return den == o.den && h == o.h && field->radicand == o.field->radicand;
  }
};

// Integral ideal wrapper: invariant checked on construction.
struct IntegralIdeal {
  FracIdeal lat;

  IntegralIdeal() = default;
  explicit IntegralIdeal(FracIdeal l) : lat(std::move(l)) {
    if (!lat.is_integral_ideal()) throw std::invalid_argument("not an integral O_F-ideal");
  }
  Int norm() const { return rat_num(lat.norm()); }
  bool operator==(const IntegralIdeal& o) const { return lat == o.lat; }
};

IntegralIdeal ideal_gcd(const IntegralIdeal& a, const IntegralIdeal& b);
IntegralIdeal ideal_mul(const IntegralIdeal& a, const IntegralIdeal& b);
IntegralIdeal principal_ideal(const FieldElement& g);
IntegralIdeal unit_ideal(const QuadField& F);

// All integral ideals of norm exactly n (HNF enumeration with closure test).
std::vector<IntegralIdeal> ideals_of_norm(const QuadField& F, const Int& n);

// Split 1 = u + v with u in A, v in B for coprime integral ideals A + B = O_F.
std::pair<FieldElement, FieldElement> ideal_bezout(const IntegralIdeal& A, const IntegralIdeal& B);

}  // namespace bianchi
