#pragma once

/// Localization of a spectrum point: the local ring R_p, the local semiring
/// T_p = localized fgId, the seminorm mu between them, the comparison map
/// zeta : T_p -> fgId(R_p), its kernel probe, and residue semifields.
///
/// fgId of a DVR (or a field, at the generic point) collapses to "zero or
/// pi^k", so zeta lands in a two-field struct instead of a full ideal type.

#include <optional>
#include <string>
#include <vector>

#include "trop/fraction_semiring.hpp"
#include "trop/ideal.hpp"
#include "trop/report.hpp"
#include "trop/valuation.hpp"

namespace trop {

/// An ideal of fgId(R_p): the zero ideal or <pi^exp>.  At the generic point
/// exp is always 0 and the structure is the Boolean semiring.
struct DvrIdeal {
  bool zero = false;
  long exp = 0;
};

inline bool dvr_eq(const DvrIdeal& a, const DvrIdeal& b) {
  return a.zero == b.zero && (a.zero || a.exp == b.exp);
}
inline DvrIdeal dvr_add(const DvrIdeal& a, const DvrIdeal& b) {
  if (a.zero) return b;
  if (b.zero) return a;
  return {false, std::min(a.exp, b.exp)};
}
inline DvrIdeal dvr_mul(const DvrIdeal& a, const DvrIdeal& b) {
  if (a.zero || b.zero) return {true, 0};
  return {false, a.exp + b.exp};
}
inline std::string dvr_to_string(const DvrIdeal& a) {
  if (a.zero) return "<0>";
  if (a.exp == 0) return "<1>";
  return "<pi^" + std::to_string(a.exp) + ">";
}

template <class Base>
struct LocalizedData {
  Base base;
  std::optional<typename Base::value_type> prime;  // nullopt at the generic point
  IdealFractionSemiring<Base> t_local;             // T_p with canonical fractions

  using frac = typename IdealFractionSemiring<Base>::value_type;

  std::string point_name() const {
    return prime ? "<" + base.to_string(*prime) + ">" : "<0>";
  }

  /// pi-adic order of a nonzero fraction (0 at the generic point).
  long order(const frac& x) const {
    if (!prime) return 0;
    if (t_local.is_zero(x)) throw std::invalid_argument("order of 0");
    return pid_valuation(base, x.num, *prime);
  }

  /// zeta(t/u): the ideal of R_p generated by the numerator, since every
  /// allowed denominator becomes a unit.
  DvrIdeal zeta(const frac& x) const {
    if (t_local.is_zero(x)) return {true, 0};
    return {false, order(x)};
  }
};

template <class Base>
LocalizedData<Base> localize_at_prime(const Base& ring, const Ideal<Base>& p) {
  if (!ideal_is_prime(p)) throw std::invalid_argument("not a prime ideal: " + ideal_to_string(p));
  if (ideal_is_zero(p))
    return {ring, std::nullopt, IdealFractionSemiring<Base>::all_nonzero(ring)};
  return {ring, p.canonical.at(0),
          IdealFractionSemiring<Base>::at_prime(ring, p.canonical.at(0))};
}

/// mu : W^{-1}R -> U^{-1}T, a/b -> v(a)/v(b), as a checkable valuation
/// between the localized ring and the localized semiring.
template <class Base>
Valuation<LocalizedPIDRing<Base>, IdealFractionSemiring<Base>> make_mu(
    const LocalizedPIDRing<Base>& rp, const LocalizedData<Base>& data) {
  return {rp, data.t_local,
          [t = data.t_local](const FractionValue<Base>& x) { return t.make(x.num, x.den); },
          "mu"};
}

template <class Base>
Valuation<FractionFieldRing<Base>, IdealFractionSemiring<Base>> make_mu_generic(
    const FractionFieldRing<Base>& rp, const LocalizedData<Base>& data) {
  return {rp, data.t_local,
          [t = data.t_local](const FractionValue<Base>& x) { return t.make(x.num, x.den); },
          "mu"};
}

/// zeta o mu = u_{W^{-1}R} on samples, both sides computed independently:
/// the left side through the fraction semiring, the right side through the
/// canonical ideal of the localized ring.
template <class Base>
Report zeta_mu_factorization(const LocalizedData<Base>& data,
                             const std::vector<FractionValue<Base>>& samples) {
  Report rep;
  rep.subject = "zeta-mu-factorization@" + data.point_name();
  for (const auto& x : samples) {
    DvrIdeal via_semiring = data.zeta(data.t_local.make(x.num, x.den));
    DvrIdeal via_ring;
    if (data.prime) {
      LocalizedPIDRing<Base> rp(data.base, *data.prime);
      const auto i = principal_ideal(rp, rp.make(x.num, x.den));
      via_ring = ideal_is_zero(i) ? DvrIdeal{true, 0} : DvrIdeal{false, rp.order(i.canonical[0])};
    } else {
      via_ring = data.base.is_zero(x.num) ? DvrIdeal{true, 0} : DvrIdeal{false, 0};
    }
    rep.require(dvr_eq(via_semiring, via_ring), "zeta(mu(x)) = u(x)",
                data.base.to_string(x.num) + "/" + data.base.to_string(x.den));
  }
  return rep;
}

/// Exhibits fractions other than 1 that zeta sends to <1>.
template <class Base>
Report zeta_kernel_probe(const LocalizedData<Base>& data,
                         const std::vector<typename LocalizedData<Base>::frac>& samples,
                         size_t want) {
  Report rep;
  rep.subject = "zeta-kernel@" + data.point_name();
  const DvrIdeal unit{false, 0};
  std::vector<std::string> found;
  for (const auto& x : samples) {
    if (data.t_local.is_zero(x)) continue;
    if (data.t_local.eq(x, data.t_local.one())) continue;
    if (dvr_eq(data.zeta(x), unit)) {
      const auto s = data.t_local.to_string(x);
      if (std::find(found.begin(), found.end(), s) == found.end()) found.push_back(s);
    }
  }
  for (const auto& s : found) rep.note("kernel witness: " + s);
  rep.require(found.size() >= want, "kernel is nontrivial",
              "found " + std::to_string(found.size()) + " of " + std::to_string(want));
  // surjectivity of zeta onto fgId(R_p): 0, 1, and each pi^k up to 3
  bool onto = true;
  {
    std::vector<DvrIdeal> targets{{true, 0}, {false, 0}};
    if (data.prime)
      for (long k = 1; k <= 3; ++k) targets.push_back({false, k});
    for (const auto& tgt : targets) {
      bool hit = false;
      if (tgt.zero) hit = true;  // zeta(0) = <0>
      for (const auto& x : samples)
        if (!data.t_local.is_zero(x) && dvr_eq(data.zeta(x), tgt)) hit = true;
      if (data.prime && !tgt.zero) {
        // pi^k / 1 always lies in T_p
        auto pk = data.t_local.one();
        for (long k2 = 0; k2 < tgt.exp; ++k2)
          pk = data.t_local.mul(pk, data.t_local.make(*data.prime, data.base.one()));
        if (dvr_eq(data.zeta(pk), tgt)) hit = true;
      }
      if (!hit) onto = false;
    }
  }
  rep.require(onto, "zeta is surjective onto fgId(R_p)", data.point_name());
  return rep;
}

/// Prop-style localization bijection on a truncation: the primes of T_p must
/// match the truncation primes contained in p.
template <class Base>
Report localization_prime_bijection(const LocalizedData<Base>& data,
                                    const std::vector<Ideal<Base>>& truncation_primes) {
  Report rep;
  rep.subject = "localization-prime-bijection@" + data.point_name();
  // primes of R_p (hence of T_p by the correspondence): <0>, plus <pi> at a
  // closed point
  size_t expected = data.prime ? 2 : 1;
  std::vector<std::string> contained;
  for (const auto& q : truncation_primes) {
    const bool inside = !data.prime
                            ? ideal_is_zero(q)
                            : (ideal_is_zero(q) ||
                               data.base.eq(q.canonical.at(0), pid_assoc(data.base, *data.prime)));
    if (inside) contained.push_back(ideal_to_string(q));
  }
  rep.require(contained.size() == expected, "primes below p match Spec of the localization",
              std::to_string(contained.size()) + " vs " + std::to_string(expected));
  for (const auto& s : contained) rep.note("prime below: " + s);
  return rep;
}

// ---- residue semifields ----

/// kappa(p) = Frac(T/p).  At the generic point this is Frac(T) itself; at a
/// closed point the classes collapse by pi-adic order onto the Boolean
/// semifield.  class_of computes the class of a T_p fraction.
template <class Base>
struct ResidueSemifield {
  LocalizedData<Base> data;

  /// 0 for the zero class; at a closed point every order-0 fraction is a
  /// unit and lands in the class of 1; at the generic point the fraction is
  /// its own class.
  bool is_zero_class(const typename LocalizedData<Base>::frac& x) const {
    if (data.t_local.is_zero(x)) return true;
    if (data.prime) return data.order(x) > 0;
    return false;
  }

  bool same_class(const typename LocalizedData<Base>::frac& x,
                  const typename LocalizedData<Base>::frac& y) const {
    if (data.prime) return is_zero_class(x) == is_zero_class(y);
    return data.t_local.eq(x, y);  // generic point: Frac(T) itself
  }
};

template <class Base>
ResidueSemifield<Base> residue_semifield(const LocalizedData<Base>& data) {
  return {data};
}

/// Nonzero classes must be multiplicatively invertible, and 1 != 0.
template <class Base>
Report residue_semifield_check(const ResidueSemifield<Base>& k,
                               const std::vector<typename LocalizedData<Base>::frac>& samples) {
  Report rep;
  rep.subject = "residue-semifield@" + k.data.point_name();
  const auto& t = k.data.t_local;
  rep.require(!k.same_class(t.one(), t.zero()), "1 != 0 in kappa", k.data.point_name());
  for (const auto& x : samples) {
    if (k.is_zero_class(x)) continue;
    // invertibility is computed in T_p when possible, otherwise refuted
    bool invertible = t.is_unit(x);
    if (invertible)
      rep.require(t.eq(t.mul(x, t.inv(x)), t.one()), "inverse multiplies to 1", t.to_string(x));
    else
      rep.require(false, "nonzero class is invertible", t.to_string(x));
  }
  // well-definedness on equal fractions, sampled
  for (const auto& x : samples)
    for (const auto& y : samples)
      if (t.eq(x, y))
        rep.require(k.same_class(x, y), "classes respect fraction equality",
                    t.to_string(x) + " vs " + t.to_string(y));
  return rep;
}

}  // namespace trop
