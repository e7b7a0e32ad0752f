#pragma once

/// fgId(R) as a semiring: finitely generated ideals under ideal sum and
/// product.  Idempotent and simple; the codomain of the universal integral
/// valuation u_R.

#include <string>

#include "trop/ideal.hpp"

namespace trop {

template <class R>
struct FgIdSemiring {
  R ring;
  using value_type = Ideal<R>;

  std::string name() const { return "fgId(" + ring.name() + ")"; }
  value_type zero() const { return zero_ideal(ring); }
  value_type one() const { return unit_ideal(ring); }
  value_type add(const value_type& a, const value_type& b) const { return ideal_sum(a, b); }
  value_type mul(const value_type& a, const value_type& b) const { return ideal_product(a, b); }
  bool eq(const value_type& a, const value_type& b) const { return ideal_eq(a, b); }
  bool is_zero(const value_type& a) const { return ideal_is_zero(a); }
  std::string to_string(const value_type& a) const { return ideal_to_string(a); }
};

/// The universal integral valuation u_R: a |-> <a>.
template <class R>
Ideal<R> u_R(const R& ring, const typename R::value_type& a) {
  return principal_ideal(ring, a);
}

}  // namespace trop
