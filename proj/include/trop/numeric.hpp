#pragma once

/// Exact arithmetic primitives shared by all ring backends.
///
/// Integers and rationals are GMP-backed (mpz_class / mpq_class); everything
/// here is value-semantic and safe to share across threads.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace trop {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_from_string(const std::string& s) {
  Int v;
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("not a decimal integer: " + s);
  return v;
}

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm_int(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int pow_int(const Int& a, unsigned long k) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), k);
  return r;
}

inline Int mod_floor(const Int& a, const Int& n) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool divides(const Int& d, const Int& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int divexact(const Int& a, const Int& d) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;  // exact for anything desk-scale
}

/// Largest k with p^k | a.  Requires a != 0 and p > 1.
inline long valuation(Int a, const Int& p) {
  if (a == 0) throw std::invalid_argument("valuation of 0");
  long k = 0;
  a = abs_int(a);
  while (divides(p, a)) {
    a = divexact(a, p);
    ++k;
  }
  return k;
}

inline std::vector<Int> primes_up_to(long bound) {
  std::vector<Int> out;
  if (bound < 2) return out;
  std::vector<bool> sieve(static_cast<size_t>(bound) + 1, true);
  for (long i = 2; i <= bound; ++i) {
    if (!sieve[i]) continue;
    out.emplace_back(i);
    for (long j = 2 * i; j <= bound; j += i) sieve[j] = false;
  }
  return out;
}

/// Prime factorization by trial division; fine at the scales we verify.
inline std::map<Int, unsigned> factorize(Int n) {
  if (n == 0) throw std::invalid_argument("factorize(0)");
  n = abs_int(n);
  std::map<Int, unsigned> fac;
  Int p = 2;
  while (p * p <= n) {
    while (divides(p, n)) {
      ++fac[p];
      n = divexact(n, p);
    }
    p += (p == 2) ? 1 : 2;
  }
  if (n > 1) ++fac[n];
  return fac;
}

/// Product of the distinct prime divisors of n (the radical of <n> in Z).
inline Int squarefree_part(const Int& n) {
  if (n == 0) return 0;
  Int r = 1;
  for (const auto& [p, e] : factorize(n)) r *= p;
  return r;
}

inline bool is_prime_power(const Int& n) {
  if (abs_int(n) < 2) return false;
  return factorize(n).size() == 1;
}

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(int_from_string(s));
  return make_rat(int_from_string(s.substr(0, slash)), int_from_string(s.substr(slash + 1)));
}

inline std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace trop
