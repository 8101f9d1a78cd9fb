#pragma once

// Exact integer/rational scalar layer plus the handful of elementary number
// theory routines everything else leans on (isqrt, squarefree test, Kronecker
// symbol, smallest-prime-factor sieve).

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bianchi {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

// Floor of a rational.
inline Int rat_floor(const Rat& q) {
  Int n = rat_num(q), d = rat_den(q);
  Int quo = n / d, rem = n % d;
  if (rem != 0 && n < 0) quo -= 1;
  return quo;
}

inline Int rat_round(const Rat& q) { return rat_floor(q + Rat(1, 2)); }

// Integer square root (floor). Throws on negative input.
inline Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  return boost::multiprecision::sqrt(n);
}

inline bool is_square(const Int& n, Int* root = nullptr) {
  if (n < 0) return false;
  Int r = isqrt(n);
  if (r * r == n) {
    if (root) *root = r;
    return true;
  }
  return false;
}

inline bool is_squarefree(const Int& n_in) {
  Int n = boost::multiprecision::abs(n_in);
  if (n == 0) return false;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return true;
}

// log of a positive big integer, safe against double overflow.
inline double log_big(const Int& n) {
  if (n <= 0) throw std::domain_error("log_big needs a positive integer");
  size_t bits = boost::multiprecision::msb(n);
  if (bits <= 900) return std::log(n.convert_to<double>());
  Int top = n >> (bits - 64);
  return std::log(top.convert_to<double>()) + static_cast<double>(bits - 64) * std::log(2.0);
}

inline double to_double(const Rat& q) {
  // Scale so both parts fit a double even when numerator/denominator are huge.
  Int n = rat_num(q), d = rat_den(q);
  if (n == 0) return 0.0;
  bool neg = n < 0;
  if (neg) n = -n;
  double r = std::exp(log_big(n) - log_big(d));
  return neg ? -r : r;
}

// Kronecker symbol (a|n), full generality including n <= 0 and n even.
inline int kronecker(Int a, Int n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && n % 2 == 0) return 0;
  int sign = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) sign = -sign;
  }
  // strip factors of two from n, using (a|2) = (2|a)
  int v2 = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v2;
  }
  if (v2 % 2 == 1) {
    Int am8 = ((a % 8) + 8) % 8;
    if (am8 == 3 || am8 == 5) sign = -sign;
  }
  a %= n;
  if (a < 0) a += n;
  // Jacobi ladder
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      Int nm8 = n % 8;
      if (nm8 == 3 || nm8 == 5) sign = -sign;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) sign = -sign;
    a %= n;
  }
  return (n == 1) ? sign : 0;
}

// Smallest-prime-factor sieve; shared by factoring helpers.
class SpfSieve {
 public:
  explicit SpfSieve(uint32_t limit) : limit_(limit), spf_(size_t(limit) + 1, 0) {
    for (uint32_t i = 2; i <= limit; ++i) {
      if (spf_[i] == 0) {
        for (uint64_t j = i; j <= limit; j += i)
          if (spf_[j] == 0) spf_[j] = i;
      }
    }
  }

  uint32_t limit() const { return limit_; }

  // prime -> exponent, ascending primes
  std::vector<std::pair<int64_t, int>> factor(int64_t n) const {
    if (n < 0) n = -n;
    std::vector<std::pair<int64_t, int>> out;
    if (n <= 1) return out;
    while (n > 1) {
      int64_t p;
      if (n <= limit_) {
        p = spf_[size_t(n)];
      } else {
        p = trial_factor(n);
      }
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static int64_t trial_factor(int64_t n) {
    for (int64_t p = 2; p * p <= n; ++p)
      if (n % p == 0) return p;
    return n;
  }
  uint32_t limit_;
  std::vector<uint32_t> spf_;
};

inline std::vector<std::pair<int64_t, int>> factor_int64(int64_t n) {
  static const SpfSieve sieve(1u << 20);
  return sieve.factor(n);
}

inline Int pow_int(Int base, unsigned e) {
  Int r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace bianchi
