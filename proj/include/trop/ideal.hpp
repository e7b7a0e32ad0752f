#pragma once

/// Finitely generated ideals in canonical form, the element type of fgId(R).
///
/// Canonical forms per backend:
///   Z            single generator g >= 0 (gcd)
///   Q, Frac(R)   0 or 1
///   Z/n          single generator d | n in [0,n), 0 meaning the zero ideal
///   K[x]         0, or the monic gcd
///   K[x]_x       monic gcd with the unit x stripped
///   K[x]/(m)     monic divisor of m, 0 meaning the zero ideal
///   R_(pi)       0, or pi^k
///   Q[x1..xn]    reduced Groebner basis (empty = zero ideal)
///
/// Two ideals are equal exactly when their canonical forms are equal.

#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "trop/fields.hpp"
#include "trop/groebner.hpp"
#include "trop/integers.hpp"
#include "trop/localized.hpp"
#include "trop/mpoly.hpp"
#include "trop/numeric.hpp"
#include "trop/upoly.hpp"

namespace trop {

template <class>
struct is_upoly_ring : std::false_type {};
template <class F>
struct is_upoly_ring<UPolyRing<F>> : std::true_type {};

template <class>
struct is_laurent_ring : std::false_type {};
template <class F>
struct is_laurent_ring<LaurentRing<F>> : std::true_type {};

template <class>
struct is_quotient_upoly_ring : std::false_type {};
template <class F>
struct is_quotient_upoly_ring<QuotientUPolyRing<F>> : std::true_type {};

template <class>
struct is_localized_pid_ring : std::false_type {};
template <class B>
struct is_localized_pid_ring<LocalizedPIDRing<B>> : std::true_type {};

template <class>
struct is_fraction_field_ring : std::false_type {};
template <class B>
struct is_fraction_field_ring<FractionFieldRing<B>> : std::true_type {};

template <class R>
struct Ideal {
  R ring;
  std::vector<typename R::value_type> canonical;
};

namespace detail {

template <class R>
std::vector<typename R::value_type> canonical_ideal_basis(
    const R& ring, const std::vector<typename R::value_type>& gens) {
  using V = typename R::value_type;
  if constexpr (std::is_same_v<R, IntegerRing>) {
    Int g = 0;
    for (const auto& a : gens) g = gcd_int(g, a);
    return {g};
  } else if constexpr (std::is_same_v<R, RationalField> || is_fraction_field_ring<R>::value) {
    for (const auto& a : gens)
      if (!ring.is_zero(a)) return {ring.one()};
    return {ring.zero()};
  } else if constexpr (std::is_same_v<R, ModularRing>) {
    Int g = ring.modulus();
    for (const auto& a : gens) g = gcd_int(g, ring.reduce(a));
    return {g == ring.modulus() ? Int(0) : g};
  } else if constexpr (is_upoly_ring<R>::value) {
    V g = ring.zero();
    for (const auto& a : gens) g = ring.gcd(g, a);
    return {ring.monic(g)};
  } else if constexpr (is_laurent_ring<R>::value) {
    auto g = ring.base().zero();
    for (const auto& a : gens) g = ring.base().gcd(g, a.unit_part);
    if (ring.base().is_zero(g)) return {ring.zero()};
    return {ring.from_poly(ring.base().monic(g))};
  } else if constexpr (is_quotient_upoly_ring<R>::value) {
    auto g = ring.modulus();
    for (const auto& a : gens) g = ring.base().gcd(g, ring.reduce(a));
    if (ring.base().eq(g, ring.base().monic(ring.modulus()))) return {ring.zero()};
    return {g};
  } else if constexpr (is_localized_pid_ring<R>::value) {
    long k = -1;
    for (const auto& a : gens) {
      if (ring.is_zero(a)) continue;
      const long v = ring.order(a);
      k = (k < 0) ? v : std::min(k, v);
    }
    if (k < 0) return {ring.zero()};
    V p = ring.one();
    for (long i = 0; i < k; ++i) p = ring.mul(p, ring.from_base(ring.prime()));
    return {p};
  } else if constexpr (std::is_same_v<R, MPolyRing>) {
    return reduced_groebner_basis(ring, gens);
  } else {
    static_assert(!sizeof(R), "no canonical ideal form for this ring");
  }
}

}  // namespace detail

template <class R>
Ideal<R> make_ideal(const R& ring, const std::vector<typename R::value_type>& gens) {
  return {ring, detail::canonical_ideal_basis(ring, gens)};
}

/// u_R on elements: the principal ideal <a> in canonical form.
template <class R>
Ideal<R> principal_ideal(const R& ring, const typename R::value_type& a) {
  return make_ideal(ring, {a});
}

template <class R>
Ideal<R> zero_ideal(const R& ring) {
  return make_ideal(ring, {ring.zero()});
}

template <class R>
Ideal<R> unit_ideal(const R& ring) {
  return make_ideal(ring, {ring.one()});
}

template <class R>
bool ideal_is_zero(const Ideal<R>& i) {
  if constexpr (std::is_same_v<R, MPolyRing>) return i.canonical.empty();
  return i.canonical.size() == 1 && i.ring.is_zero(i.canonical[0]);
}

template <class R>
bool ideal_is_unit(const Ideal<R>& i) {
  return i.canonical.size() == 1 && i.ring.eq(i.canonical[0], i.ring.one());
}

template <class R>
bool ideal_eq(const Ideal<R>& a, const Ideal<R>& b) {
  if (a.canonical.size() != b.canonical.size()) return false;
  for (size_t i = 0; i < a.canonical.size(); ++i)
    if (!a.ring.eq(a.canonical[i], b.canonical[i])) return false;
  return true;
}

template <class R>
bool ideal_member(const Ideal<R>& i, const typename R::value_type& f) {
  const R& ring = i.ring;
  if constexpr (std::is_same_v<R, MPolyRing>) {
    if (i.canonical.empty()) return ring.is_zero(f);
    return normal_form(ring, f, i.canonical).is_zero();
  } else {
    const auto& d = i.canonical.at(0);
    if constexpr (std::is_same_v<R, IntegerRing>) {
      return divides(d, f);
    } else if constexpr (std::is_same_v<R, RationalField> ||
                         is_fraction_field_ring<R>::value) {
      return ring.is_zero(d) ? ring.is_zero(f) : true;
    } else if constexpr (std::is_same_v<R, ModularRing>) {
      if (d == 0) return ring.is_zero(f);
      return divides(d, ring.reduce(f));
    } else if constexpr (is_upoly_ring<R>::value) {
      if (ring.is_zero(d)) return ring.is_zero(f);
      return ring.divides(d, f);
    } else if constexpr (is_laurent_ring<R>::value) {
      if (ring.is_zero(d)) return ring.is_zero(f);
      if (ring.is_zero(f)) return true;
      return ring.base().divides(d.unit_part, f.unit_part);
    } else if constexpr (is_quotient_upoly_ring<R>::value) {
      if (ring.base().is_zero(d)) return ring.is_zero(f);
      return ring.base().divides(d, ring.reduce(f));
    } else if constexpr (is_localized_pid_ring<R>::value) {
      if (ring.is_zero(d)) return ring.is_zero(f);
      if (ring.is_zero(f)) return true;
      return ring.order(f) >= ring.order(d);
    } else {
      static_assert(!sizeof(R), "no membership test for this ring");
    }
  }
}

/// J subset of I, decided on J's canonical generators.
template <class R>
bool ideal_contains(const Ideal<R>& i, const Ideal<R>& j) {
  for (const auto& g : j.canonical)
    if (!ideal_member(i, g)) return false;
  return true;
}

template <class R>
Ideal<R> ideal_sum(const Ideal<R>& a, const Ideal<R>& b) {
  auto gens = a.canonical;
  gens.insert(gens.end(), b.canonical.begin(), b.canonical.end());
  return make_ideal(a.ring, gens);
}

template <class R>
Ideal<R> ideal_product(const Ideal<R>& a, const Ideal<R>& b) {
  std::vector<typename R::value_type> gens;
  for (const auto& x : a.canonical)
    for (const auto& y : b.canonical) gens.push_back(a.ring.mul(x, y));
  if (gens.empty()) gens.push_back(a.ring.zero());  // a zero factor in Groebner form
  return make_ideal(a.ring, gens);
}

template <class R>
Ideal<R> ideal_pow(const Ideal<R>& a, unsigned k) {
  Ideal<R> r = unit_ideal(a.ring);
  for (unsigned i = 0; i < k; ++i) r = ideal_product(r, a);
  return r;
}

template <class R>
std::string ideal_to_string(const Ideal<R>& i) {
  if constexpr (std::is_same_v<R, MPolyRing>) {
    if (i.canonical.empty()) return "<0>";
  }
  std::string s = "<";
  for (size_t k = 0; k < i.canonical.size(); ++k)
    s += (k ? ", " : "") + i.ring.to_string(i.canonical[k]);
  return s + ">";
}

// ---- primes, primary ideals, radicals ----

/// Exact irreducibility over Q via content-normalized rational-root and
/// Kronecker-style divisor search; intended for the small degrees the
/// spectra and primality checks exercise.
inline bool is_irreducible_q(const QPolyRing& ring, const QPolyRing::value_type& f);

template <class R>
bool ideal_is_prime(const Ideal<R>& i) {
  const R& ring = i.ring;
  if constexpr (std::is_same_v<R, IntegerRing>) {
    const Int& g = i.canonical[0];
    return g == 0 || is_prime(g);
  } else if constexpr (std::is_same_v<R, RationalField> || is_fraction_field_ring<R>::value) {
    return ideal_is_zero(i);
  } else if constexpr (std::is_same_v<R, ModularRing>) {
    const Int& d = i.canonical[0];
    if (d == 0) return is_prime(ring.modulus());
    return is_prime(d);
  } else if constexpr (is_upoly_ring<R>::value) {
    if (ideal_is_zero(i)) return true;
    if constexpr (std::is_same_v<R, GFPolyRing>)
      return is_irreducible(ring, i.canonical[0]);
    else
      return is_irreducible_q(ring, i.canonical[0]);
  } else if constexpr (is_laurent_ring<R>::value) {
    if (ideal_is_zero(i)) return true;
    if (ideal_is_unit(i)) return false;
    const auto& base = ring.base();
    if constexpr (std::is_same_v<typename R::base_ring, GFPolyRing>)
      return is_irreducible(base, i.canonical[0].unit_part);
    else
      return is_irreducible_q(base, i.canonical[0].unit_part);
  } else if constexpr (is_quotient_upoly_ring<R>::value) {
    const auto& d = i.canonical[0];
    if (ring.base().is_zero(d)) return is_irreducible(ring.base(), ring.modulus());
    return is_irreducible(ring.base(), d);
  } else if constexpr (is_localized_pid_ring<R>::value) {
    if (ideal_is_zero(i)) return true;
    if (ideal_is_unit(i)) return false;
    return ring.order(i.canonical[0]) == 1;
  } else {
    static_assert(!sizeof(R), "primality not supported for this ring");
  }
}

/// Primary test for PID-like and Z/n backends: proper and generated by a
/// prime power (the zero ideal of a domain counts).
template <class R>
bool ideal_is_primary(const Ideal<R>& i) {
  const R& ring = i.ring;
  if (ideal_is_unit(i)) return false;
  if constexpr (std::is_same_v<R, IntegerRing>) {
    const Int& g = i.canonical[0];
    return g == 0 || is_prime_power(g);
  } else if constexpr (std::is_same_v<R, ModularRing>) {
    Int d = i.canonical[0];
    if (d == 0) d = ring.modulus();
    return is_prime_power(d);
  } else if constexpr (is_upoly_ring<R>::value) {
    if (ideal_is_zero(i)) return true;
    const auto sq = squarefree_part(ring, i.canonical[0]);
    Ideal<R> sqi{ring, {sq}};
    return ideal_is_prime(sqi);
  } else if constexpr (is_quotient_upoly_ring<R>::value) {
    auto d = i.canonical[0];
    if (ring.base().is_zero(d)) d = ring.modulus();
    auto fac = factorize_gf(ring.base(), d);
    return fac.size() == 1;
  } else if constexpr (is_localized_pid_ring<R>::value) {
    return true;  // every proper ideal of a DVR is a prime power
  } else {
    static_assert(!sizeof(R), "primary test not supported for this ring");
  }
}

/// Radical: squarefree part of the canonical generator (Z, Z/n, K[x],
/// K[x]/(m), DVR backends).
template <class R>
Ideal<R> ideal_radical(const Ideal<R>& i) {
  const R& ring = i.ring;
  if constexpr (std::is_same_v<R, IntegerRing>) {
    return make_ideal(ring, {squarefree_part(i.canonical[0])});
  } else if constexpr (std::is_same_v<R, ModularRing>) {
    Int d = i.canonical[0];
    if (d == 0) d = ring.modulus();
    return make_ideal(ring, {squarefree_part(d)});
  } else if constexpr (is_upoly_ring<R>::value) {
    if (ideal_is_zero(i)) return i;
    return make_ideal(ring, {squarefree_part(ring, i.canonical[0])});
  } else if constexpr (is_quotient_upoly_ring<R>::value) {
    auto d = i.canonical[0];
    if (ring.base().is_zero(d)) d = ring.modulus();
    return make_ideal(ring, {squarefree_part(ring.base(), d)});
  } else if constexpr (is_localized_pid_ring<R>::value) {
    if (ideal_is_zero(i) || ideal_is_unit(i)) return i;
    return principal_ideal(ring, ring.from_base(ring.prime()));
  } else {
    static_assert(!sizeof(R), "radical not supported for this ring");
  }
}

// ---- truncated prime enumeration ----

/// The finite irreducible catalogue used for Spec truncations over Q[x].
/// Closed under coefficient reversal so that the inverse chart transition of
/// the projective line maps catalogue primes to catalogue primes.
inline std::vector<QPolyRing::value_type> q_irreducible_catalogue(const QPolyRing& ring,
                                                                  long max_deg) {
  std::vector<QPolyRing::value_type> out;
  auto add = [&](std::vector<Rat> coeffs) {
    QPolyRing::value_type f(coeffs.begin(), coeffs.end());
    if (ring.deg(f) <= max_deg) out.push_back(ring.normalized(f));
  };
  add({Rat(0), Rat(1)});                       // x
  add({Rat(-1), Rat(1)});                      // x - 1
  add({Rat(1), Rat(1)});                       // x + 1
  add({Rat(-2), Rat(1)});                      // x - 2
  add({Rat(2), Rat(1)});                       // x + 2
  add({make_rat(-1, 2), Rat(1)});              // x - 1/2, the reversal of x - 2
  add({make_rat(1, 2), Rat(1)});               // x + 1/2
  add({Rat(1), Rat(0), Rat(1)});               // x^2 + 1
  add({Rat(-2), Rat(0), Rat(1)});              // x^2 - 2
  add({make_rat(-1, 2), Rat(0), Rat(1)});      // x^2 - 1/2
  add({Rat(1), Rat(1), Rat(1)});               // x^2 + x + 1
  add({Rat(-2), Rat(0), Rat(0), Rat(1)});      // x^3 - 2
  add({make_rat(-1, 2), Rat(0), Rat(0), Rat(1)});  // x^3 - 1/2
  return out;
}

/// <0> (domains only) plus all primes within the bound, canonical forms.
/// Bound: |p| <= bound over Z, deg <= bound over K[x]; ignored where the
/// prime list is finite anyway.
template <class R>
std::vector<Ideal<R>> spec_truncated(const R& ring, long bound) {
  std::vector<Ideal<R>> out;
  if constexpr (std::is_same_v<R, IntegerRing>) {
    out.push_back(zero_ideal(ring));
    for (const auto& p : primes_up_to(bound)) out.push_back(principal_ideal(ring, p));
  } else if constexpr (std::is_same_v<R, RationalField> || is_fraction_field_ring<R>::value) {
    out.push_back(zero_ideal(ring));
  } else if constexpr (std::is_same_v<R, ModularRing>) {
    if (is_prime(ring.modulus())) {
      out.push_back(zero_ideal(ring));
    } else {
      for (const auto& [p, e] : factorize(ring.modulus()))
        out.push_back(principal_ideal(ring, p));
    }
  } else if constexpr (std::is_same_v<R, GFPolyRing>) {
    out.push_back(zero_ideal(ring));
    for (const auto& f : monic_irreducibles_up_to(ring, bound))
      out.push_back(principal_ideal(ring, f));
  } else if constexpr (std::is_same_v<R, QPolyRing>) {
    out.push_back(zero_ideal(ring));
    for (const auto& f : q_irreducible_catalogue(ring, bound))
      out.push_back(principal_ideal(ring, f));
  } else if constexpr (is_quotient_upoly_ring<R>::value) {
    for (const auto& [g, e] : factorize_gf(ring.base(), ring.modulus()))
      out.push_back(principal_ideal(ring, g));
  } else if constexpr (is_localized_pid_ring<R>::value) {
    out.push_back(zero_ideal(ring));
    out.push_back(principal_ideal(ring, ring.from_base(ring.prime())));
  } else {
    static_assert(!sizeof(R), "spectrum enumeration not supported for this ring");
  }
  return out;
}

// ---- irreducibility over Q (Kronecker-style, desk scale) ----

inline bool is_irreducible_q(const QPolyRing& ring, const QPolyRing::value_type& f) {
  const long d = ring.deg(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  // clear denominators to a primitive integer polynomial
  Int den = 1;
  for (const auto& c : f) den = lcm_int(den, c.get_den());
  std::vector<Int> g(f.size());
  for (size_t i = 0; i < f.size(); ++i) g[i] = Int(f[i] * Rat(den));
  Int content = 0;
  for (const auto& c : g) content = gcd_int(content, c);
  for (auto& c : g) c = divexact(c, content);

  auto eval_int = [&](const Int& x) {
    Int acc = 0;
    for (size_t i = g.size(); i-- > 0;) acc = acc * x + g[i];
    return acc;
  };
  // rational root test knocks out every possible linear factor
  {
    const Int a0 = g.front(), an = g.back();
    if (a0 == 0) return false;  // x divides
    std::vector<Int> ps, qs;
    auto divisors = [](const Int& n) {
      std::vector<Int> ds{1};
      for (const auto& [p, e] : factorize(n)) {
        std::vector<Int> next;
        for (const auto& dd : ds) {
          Int pk = 1;
          for (unsigned k = 0; k <= e; ++k) {
            next.push_back(dd * pk);
            pk *= p;
          }
        }
        ds = std::move(next);
      }
      return ds;
    };
    for (const auto& p : divisors(a0))
      for (const auto& q : divisors(an)) {
        const Rat r1 = make_rat(p, q), r2 = make_rat(-p, q);
        if (ring.coeff().is_zero(ring.eval(f, r1)) || ring.coeff().is_zero(ring.eval(f, r2)))
          return false;
      }
  }
  if (d <= 3) return true;  // no root and degree <= 3 means irreducible

  // Kronecker: a degree-k divisor is determined by its values at k+1 points,
  // and those values divide the values of g there.
  for (long k = 2; k <= d / 2; ++k) {
    std::vector<Int> pts;
    for (long t = 0; static_cast<long>(pts.size()) < k + 1; ++t) {
      Int x = (t % 2 == 0) ? Int(t / 2) : Int(-(t / 2 + 1));
      if (eval_int(x) != 0) pts.push_back(x);
    }
    std::vector<std::vector<Int>> value_choices;  // divisors (with signs) of g(x_i)
    for (const auto& x : pts) {
      std::vector<Int> ds;
      const Int v = abs_int(eval_int(x));
      for (Int t = 1; t * t <= v; ++t)
        if (divides(t, v)) {
          for (const Int& u : {t, divexact(v, t)}) {
            ds.push_back(u);
            ds.push_back(-u);
          }
        }
      value_choices.push_back(std::move(ds));
    }
    // Lagrange-interpolate each divisor-value tuple and trial-divide.
    std::vector<size_t> idx(pts.size(), 0);
    while (true) {
      std::vector<Rat> cand(static_cast<size_t>(k) + 1, Rat(0));
      {
        // interpolation through (pts[i], choice[i])
        std::vector<Rat> acc(static_cast<size_t>(k) + 1, Rat(0));
        for (size_t i = 0; i < pts.size(); ++i) {
          std::vector<Rat> basis{Rat(1)};
          Rat denom(1);
          for (size_t j = 0; j < pts.size(); ++j) {
            if (j == i) continue;
            std::vector<Rat> nb(basis.size() + 1, Rat(0));
            for (size_t t = 0; t < basis.size(); ++t) {
              nb[t] += basis[t] * Rat(-pts[j]);
              nb[t + 1] += basis[t];
            }
            basis = std::move(nb);
            denom *= Rat(pts[i] - pts[j]);
          }
          const Rat scale = Rat(value_choices[i][idx[i]]) / denom;
          for (size_t t = 0; t < basis.size() && t < acc.size(); ++t) acc[t] += basis[t] * scale;
        }
        cand = std::move(acc);
      }
      QPolyRing::value_type candidate = ring.normalized({cand.begin(), cand.end()});
      if (ring.deg(candidate) == k && ring.divides(candidate, f)) return false;
      // next tuple
      size_t pos = 0;
      while (pos < idx.size()) {
        if (++idx[pos] < value_choices[pos].size()) break;
        idx[pos] = 0;
        ++pos;
      }
      if (pos == idx.size()) break;
    }
  }
  return true;
}

}  // namespace trop
