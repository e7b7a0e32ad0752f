#pragma once

/// Fraction-style ring backends built over a PID base: the full fraction
/// field Frac(R) and the localization R_(pi) at a nonzero prime element pi.
/// Values are lowest-terms pairs with an associate-normalized denominator
/// (positive over Z, monic over K[x]), so equality is plain pair equality.

#include <stdexcept>
#include <string>
#include <utility>

#include "trop/integers.hpp"
#include "trop/numeric.hpp"
#include "trop/upoly.hpp"

namespace trop {

// Associate normalization and gcd for the two PID bases we localize.
inline Int pid_assoc(const IntegerRing&, const Int& a) { return abs_int(a); }
inline Int pid_gcd(const IntegerRing&, const Int& a, const Int& b) { return gcd_int(a, b); }
inline Int pid_div(const IntegerRing&, const Int& a, const Int& b) { return divexact(a, b); }
inline bool pid_divides(const IntegerRing&, const Int& d, const Int& a) { return divides(d, a); }

// A field is a degenerate PID: the only associate classes are 0 and 1.
inline Rat pid_assoc(const RationalField&, const Rat& a) { return a == 0 ? Rat(0) : Rat(1); }
inline Rat pid_gcd(const RationalField&, const Rat& a, const Rat& b) {
  return (a == 0 && b == 0) ? Rat(0) : Rat(1);
}
inline Rat pid_div(const RationalField& f, const Rat& a, const Rat& b) { return f.mul(a, f.inv(b)); }
inline bool pid_divides(const RationalField&, const Rat& d, const Rat& a) {
  return d != 0 || a == 0;
}

template <class F>
typename UPolyRing<F>::value_type pid_assoc(const UPolyRing<F>& r,
                                            const typename UPolyRing<F>::value_type& a) {
  return r.monic(a);
}
template <class F>
typename UPolyRing<F>::value_type pid_gcd(const UPolyRing<F>& r,
                                          const typename UPolyRing<F>::value_type& a,
                                          const typename UPolyRing<F>::value_type& b) {
  return r.gcd(a, b);
}
template <class F>
typename UPolyRing<F>::value_type pid_div(const UPolyRing<F>& r,
                                          const typename UPolyRing<F>::value_type& a,
                                          const typename UPolyRing<F>::value_type& b) {
  return r.divmod(a, b).first;
}
template <class F>
bool pid_divides(const UPolyRing<F>& r, const typename UPolyRing<F>::value_type& d,
                 const typename UPolyRing<F>::value_type& a) {
  return r.divides(d, a);
}

/// pi-adic valuation of a nonzero base element.
template <class Base>
long pid_valuation(const Base& base, typename Base::value_type a,
                   const typename Base::value_type& pi) {
  if (base.is_zero(a)) throw std::invalid_argument("valuation of 0");
  long k = 0;
  while (pid_divides(base, pi, a)) {
    a = pid_div(base, a, pi);
    ++k;
  }
  return k;
}

template <class Base>
struct FractionValue {
  typename Base::value_type num;
  typename Base::value_type den;  // associate-normalized, coprime to num
};

namespace detail {

template <class Base>
FractionValue<Base> reduce_fraction(const Base& base, typename Base::value_type num,
                                    typename Base::value_type den) {
  if (base.is_zero(den)) throw std::invalid_argument("zero denominator");
  if (base.is_zero(num)) return {base.zero(), base.one()};
  auto g = pid_gcd(base, num, den);
  num = pid_div(base, num, g);
  den = pid_div(base, den, g);
  // move the denominator's unit onto the numerator: den = u * assoc(den),
  // so num/u = num * assoc(den) / den, an exact division
  auto dn = pid_assoc(base, den);
  if (!base.eq(dn, den)) {
    num = pid_div(base, base.mul(num, dn), den);
    den = dn;
  }
  return {std::move(num), std::move(den)};
}

}  // namespace detail

/// Frac(R) for a PID base R.
template <class Base>
class FractionFieldRing {
 public:
  using base_ring = Base;
  using value_type = FractionValue<Base>;

  explicit FractionFieldRing(Base base) : base_(std::move(base)) {}

  const Base& base() const { return base_; }
  std::string name() const { return "Frac(" + base_.name() + ")"; }
  bool is_field() const { return true; }
  bool is_domain() const { return true; }

  value_type make(typename Base::value_type num, typename Base::value_type den) const {
    return detail::reduce_fraction(base_, std::move(num), std::move(den));
  }
  value_type from_base(typename Base::value_type a) const { return make(std::move(a), base_.one()); }

  value_type zero() const { return {base_.zero(), base_.one()}; }
  value_type one() const { return {base_.one(), base_.one()}; }
  bool is_zero(const value_type& a) const { return base_.is_zero(a.num); }

  value_type add(const value_type& a, const value_type& b) const {
    return make(base_.add(base_.mul(a.num, b.den), base_.mul(b.num, a.den)),
                base_.mul(a.den, b.den));
  }
  value_type neg(const value_type& a) const { return {base_.neg(a.num), a.den}; }
  value_type sub(const value_type& a, const value_type& b) const { return add(a, neg(b)); }
  value_type mul(const value_type& a, const value_type& b) const {
    return make(base_.mul(a.num, b.num), base_.mul(a.den, b.den));
  }
  value_type inv(const value_type& a) const {
    if (is_zero(a)) throw std::invalid_argument("inverse of 0");
    return make(a.den, a.num);
  }

  bool eq(const value_type& a, const value_type& b) const {
    return base_.eq(a.num, b.num) && base_.eq(a.den, b.den);
  }

  std::string to_string(const value_type& a) const {
    if (base_.eq(a.den, base_.one())) return base_.to_string(a.num);
    return base_.to_string(a.num) + "/" + base_.to_string(a.den);
  }

 private:
  Base base_;
};

/// R localized at the prime (pi): lowest-terms fractions whose denominator is
/// coprime to pi.  A discrete valuation ring.
template <class Base>
class LocalizedPIDRing {
 public:
  using base_ring = Base;
  using value_type = FractionValue<Base>;

  LocalizedPIDRing(Base base, typename Base::value_type prime)
      : base_(std::move(base)), pi_(pid_assoc(base_, prime)) {
    if (base_.is_zero(pi_)) throw std::invalid_argument("localization prime must be nonzero");
  }

  const Base& base() const { return base_; }
  const typename Base::value_type& prime() const { return pi_; }
  std::string name() const { return base_.name() + "_(" + base_.to_string(pi_) + ")"; }
  bool is_field() const { return false; }
  bool is_domain() const { return true; }

  value_type make(typename Base::value_type num, typename Base::value_type den) const {
    auto v = detail::reduce_fraction(base_, std::move(num), std::move(den));
    if (pid_divides(base_, pi_, v.den))
      throw std::invalid_argument("denominator not invertible in " + name());
    return v;
  }
  value_type from_base(typename Base::value_type a) const { return make(std::move(a), base_.one()); }

  value_type zero() const { return {base_.zero(), base_.one()}; }
  value_type one() const { return {base_.one(), base_.one()}; }
  bool is_zero(const value_type& a) const { return base_.is_zero(a.num); }

  value_type add(const value_type& a, const value_type& b) const {
    return make(base_.add(base_.mul(a.num, b.den), base_.mul(b.num, a.den)),
                base_.mul(a.den, b.den));
  }
  value_type neg(const value_type& a) const { return {base_.neg(a.num), a.den}; }
  value_type sub(const value_type& a, const value_type& b) const { return add(a, neg(b)); }
  value_type mul(const value_type& a, const value_type& b) const {
    return make(base_.mul(a.num, b.num), base_.mul(a.den, b.den));
  }

  /// pi-adic order of a nonzero element.
  long order(const value_type& a) const {
    if (is_zero(a)) throw std::invalid_argument("order of 0");
    return pid_valuation(base_, a.num, pi_);
  }

  bool is_unit(const value_type& a) const { return !is_zero(a) && order(a) == 0; }

  value_type inv(const value_type& a) const {
    if (!is_unit(a)) throw std::invalid_argument("not a unit in " + name());
    return make(a.den, a.num);
  }

  bool eq(const value_type& a, const value_type& b) const {
    return base_.eq(a.num, b.num) && base_.eq(a.den, b.den);
  }

  std::string to_string(const value_type& a) const {
    if (base_.eq(a.den, base_.one())) return base_.to_string(a.num);
    return base_.to_string(a.num) + "/" + base_.to_string(a.den);
  }

 private:
  Base base_;
  typename Base::value_type pi_;
};

}  // namespace trop
