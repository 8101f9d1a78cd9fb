#include "bianchi/pell.hpp"

#include <map>

namespace bianchi {

namespace {

// floor((P + sqrt(d)) / Q) for irrational sqrt(d), any sign of Q != 0
Int cf_floor(const Int& P, const Int& Q, const Int& d, const Int& sq) {
  // sq = floor(sqrt(d))
  if (Q > 0) {
    Int n = P + sq;
    Int q = n / Q;
    if (n % Q != 0 && n < 0) q -= 1;
    return q;
  }
  // floor(x / Q) with Q < 0: x = P + sqrt(d) in (P+sq, P+sq+1)
  Int Qp = -Q;
  // floor((P + sqrt d)/Q) = -ceil((P + sqrt d)/Qp) = -(floor((P+sq)/Qp) + 1)
  Int n = P + sq;
  Int fl = n / Qp;
  if (n % Qp != 0 && n < 0) fl -= 1;
  return -(fl + 1);
}

}  // namespace

bool is_discriminant(const Int& d) {
  if (d == 0) return false;
  Int r = ((d % 4) + 4) % 4;
  return r == 0 || r == 1;
}

UnitData fundamental_unit(const Int& d) {
  if (d <= 0) throw std::invalid_argument("fundamental_unit: d must be positive");
  if (!is_discriminant(d)) throw std::invalid_argument("fundamental_unit: d must be 0 or 1 mod 4");
  if (is_square(d)) throw std::invalid_argument("fundamental_unit: d must not be a square");

  const Int sq = isqrt(d);
  Int P = (d % 2 == 0) ? Int(0) : Int(1);
  Int Q = 2;

  struct State {
    Int P, Q;
    bool operator<(const State& o) const { return P != o.P ? P < o.P : Q < o.Q; }
  };
  std::map<State, int> seen;
  std::vector<Int> partials;
  std::vector<State> states;

  int start = -1;
  for (int step = 0;; ++step) {
    State st{P, Q};
    auto it = seen.find(st);
    if (it != seen.end()) {
      start = it->second;
      break;
    }
    seen[st] = step;
    states.push_back(st);
    Int a = cf_floor(P, Q, d, sq);
    partials.push_back(a);
    Int Pn = a * Q - P;
    Int Qn = (d - Pn * Pn) / Q;
    if (Qn == 0) throw std::logic_error("fundamental_unit: square discriminant slipped through");
    P = Pn;
    Q = Qn;
    if (step > 4000000) throw std::runtime_error("fundamental_unit: period not found");
  }

  // product of [[a,1],[1,0]] over the period [start, end)
  Int m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  for (size_t k = size_t(start); k < partials.size(); ++k) {
    const Int& a = partials[k];
    Int n00 = m00 * a + m01, n10 = m10 * a + m11;
    m01 = m00;
    m11 = m10;
    m00 = n00;
    m10 = n10;
  }
  size_t period = partials.size() - size_t(start);
  const State& st = states[size_t(start)];
  // unit = m10 * alpha + m11, alpha = (P + sqrt d)/Q
  Int tn = 2 * (m10 * st.P + m11 * st.Q);
  Int un = 2 * m10;
  if (tn % st.Q != 0 || un % st.Q != 0)
    throw std::logic_error("fundamental_unit: non-integral unit coordinates");
  UnitData out;
  out.d = d;
  out.t = tn / st.Q;
  out.u = un / st.Q;
  if (out.t < 0) out.t = -out.t;
  if (out.u < 0) out.u = -out.u;
  Int nrm = out.t * out.t - d * out.u * out.u;
  if (nrm == 4)
    out.norm_sign = 1;
  else if (nrm == -4)
    out.norm_sign = -1;
  else
    throw std::logic_error("fundamental_unit: not a +-4 Pell solution");
  (void)period;
  // log((t + u sqrt d)/2), stable for huge t
  double lt = log_big(out.t);
  double lu = log_big(out.u) + 0.5 * log_big(d);
  double hi = std::max(lt, lu), lo = std::min(lt, lu);
  out.regulator = hi + std::log1p(std::exp(lo - hi)) - std::log(2.0);
  return out;
}

Int real_class_number(const Int& dK) {
  if (dK <= 0 || !is_discriminant(dK)) throw std::invalid_argument("need a positive discriminant");
  auto [f0, cond] = fundamental_part(dK);
  if (cond != 1) throw std::invalid_argument("real_class_number: discriminant not fundamental");
  UnitData eps = fundamental_unit(dK);
  long dk = dK.convert_to<long>();
  double s = 0.0;
  for (long a = 1; a < dk; ++a) {
    int chi = kronecker(dK, a);
    if (chi == 0) continue;
    s -= chi * std::log(2.0 * std::sin(M_PI * double(a) / double(dk)));
  }
  double h = s / (2.0 * eps.regulator);
  double r = std::round(h);
  if (std::abs(h - r) > 1e-5 * std::max(1.0, r))
    throw std::logic_error("real_class_number: analytic value is not near an integer");
  return Int(static_cast<long long>(r));
}

int unit_index_in_order(const Int& dK, const Int& f) {
  if (f == 1) return 1;
  UnitData eps = fundamental_unit(dK);
  Int tk = eps.t, uk = eps.u;
  for (int k = 1; k <= 1000000; ++k) {
    if (uk % f == 0) return k;
    Int tn = (eps.t * tk + dK * eps.u * uk) / 2;
    Int un = (eps.t * uk + eps.u * tk) / 2;
    tk = tn;
    uk = un;
  }
  throw std::runtime_error("unit_index_in_order: index not found");
}

Int order_class_number(const Int& dK, const Int& f) {
  Int h = real_class_number(dK);
  if (f == 1) return h;
  Int num = h * f;
  auto fac = factor_int64(f.convert_to<int64_t>());
  for (auto& [p, e] : fac) {
    (void)e;
    num = num / p * (Int(p) - kronecker(dK, p));
  }
  Int idx = unit_index_in_order(dK, f);
  if (num % idx != 0) throw std::logic_error("order_class_number: unit index does not divide");
  return num / idx;
}

Int order_class_number_narrow(const Int& dK, const Int& f) {
  Int h = order_class_number(dK, f);
  UnitData eps = fundamental_unit(f * f * dK);
  return eps.norm_sign == 1 ? 2 * h : h;
}

std::pair<Int, Int> fundamental_part(const Int& d) {
  if (!is_discriminant(d)) throw std::invalid_argument("not a discriminant");
  Int ad = boost::multiprecision::abs(d);
  auto fac = factor_int64(ad.convert_to<int64_t>());
  Int f = 1;
  for (auto& [p, e] : fac)
    for (int i = 0; i < e / 2; ++i) f *= p;
  Int core = d / (f * f);  // squarefree up to sign
  Int r = ((core % 4) + 4) % 4;
  if (r == 1) return {core, f};
  // need 4 | dK: pull a factor 2 out of f
  if (f % 2 != 0) throw std::logic_error("fundamental_part: inconsistent 2-adic part");
  f /= 2;
  Int dK = 4 * core;
  r = ((dK / 4 % 4) + 4) % 4;
  if (!(r == 2 || r == 3))
    throw std::logic_error("fundamental_part: residue not a fundamental discriminant");
  return {dK, f};
}

}  // namespace bianchi
