#pragma once

/// Localizations of fgId(R) for a PID backend R, with lowest-terms canonical
/// forms.  Since every f.g. ideal of a PID is principal, a fraction of ideals
/// is a pair of associate-normalized ring elements num/den with num, den
/// coprime; equality is pair equality.
///
/// Three denominator disciplines cover everything the spectra and sheaf
/// sections need:
///   AllNonzero          U = T \ {0}            (Frac(T); kappa at <0>)
///   ComplementOfPrime   U = T \ p^dag          (T_p, the k-local stalk)
///   PowersOf(f)         U = {f^n}              (T_f, basic-open sections)

#include <stdexcept>
#include <string>
#include <utility>

#include "trop/ideal.hpp"
#include "trop/localized.hpp"

namespace trop {

enum class DenSet { kAllNonzero, kComplementOfPrime, kPowersOf };

template <class R>
class IdealFractionSemiring {
 public:
  using elem = typename R::value_type;
  struct value_type {
    elem num, den;  // assoc-normalized, coprime; zero is 0/1
  };

  static IdealFractionSemiring all_nonzero(R ring) {
    return IdealFractionSemiring(std::move(ring), DenSet::kAllNonzero, {});
  }
  static IdealFractionSemiring at_prime(R ring, elem prime) {
    return IdealFractionSemiring(std::move(ring), DenSet::kComplementOfPrime, std::move(prime));
  }
  static IdealFractionSemiring powers_of(R ring, elem f) {
    if (ring.is_zero(f)) throw std::invalid_argument("denominator element must be nonzero");
    return IdealFractionSemiring(std::move(ring), DenSet::kPowersOf, std::move(f));
  }

  const R& ring() const { return ring_; }
  DenSet den_set() const { return den_; }
  const elem& pivot() const { return pivot_; }

  std::string name() const {
    switch (den_) {
      case DenSet::kAllNonzero:
        return "Frac(fgId(" + ring_.name() + "))";
      case DenSet::kComplementOfPrime:
        return "fgId(" + ring_.name() + ")_(" + ring_.to_string(pivot_) + ")";
      default:
        return "fgId(" + ring_.name() + ")_" + ring_.to_string(pivot_);
    }
  }

  bool den_allowed(const elem& d) const {
    if (ring_.is_zero(d)) return false;
    switch (den_) {
      case DenSet::kAllNonzero:
        return true;
      case DenSet::kComplementOfPrime:
        return !pid_divides(ring_, pivot_, d);
      case DenSet::kPowersOf: {
        // d may only carry factors of the pivot
        elem rest = pid_assoc(ring_, d);
        while (true) {
          elem g = pid_gcd(ring_, rest, pivot_);
          if (ring_.eq(g, pid_assoc(ring_, ring_.one()))) break;
          rest = pid_div(ring_, rest, g);
        }
        return ring_.eq(rest, pid_assoc(ring_, ring_.one()));
      }
    }
    return false;
  }

  value_type make(elem num, elem den) const {
    if (!den_allowed(den))
      throw std::invalid_argument("denominator " + ring_.to_string(den) + " not invertible in " +
                                  name());
    auto v = detail::reduce_fraction(ring_, std::move(num), std::move(den));
    return {pid_assoc(ring_, v.num), v.den};  // ideals forget units
  }

  value_type from_ideal(const Ideal<R>& i) const { return make(i.canonical.at(0), ring_.one()); }

  value_type zero() const { return {ring_.zero(), ring_.one()}; }
  value_type one() const { return {pid_assoc(ring_, ring_.one()), ring_.one()}; }
  bool is_zero(const value_type& a) const { return ring_.is_zero(a.num); }

  /// Lifted ideal sum: <a>/b + <c>/d = (<ad> + <cb>)/<bd>, computed by gcd.
  value_type add(const value_type& a, const value_type& b) const {
    return make(pid_gcd(ring_, ring_.mul(a.num, b.den), ring_.mul(b.num, a.den)),
                ring_.mul(a.den, b.den));
  }

  value_type mul(const value_type& a, const value_type& b) const {
    return make(ring_.mul(a.num, b.num), ring_.mul(a.den, b.den));
  }

  bool eq(const value_type& a, const value_type& b) const {
    return ring_.eq(a.num, b.num) && ring_.eq(a.den, b.den);
  }

  bool is_unit(const value_type& a) const {
    if (is_zero(a)) return false;
    return den_allowed(a.num);
  }

  value_type inv(const value_type& a) const {
    if (!is_unit(a)) throw std::invalid_argument("not a unit in " + name());
    return make(a.den, a.num);
  }

  std::string to_string(const value_type& a) const {
    if (ring_.eq(a.den, ring_.one())) return ring_.to_string(a.num);
    return ring_.to_string(a.num) + "/" + ring_.to_string(a.den);
  }

 private:
  IdealFractionSemiring(R ring, DenSet den, elem pivot)
      : ring_(std::move(ring)), den_(den), pivot_(pid_assoc(ring_, std::move(pivot))) {}

  R ring_;
  DenSet den_;
  elem pivot_;  // the prime or the inverted element; unused for AllNonzero
};

}  // namespace trop
