#pragma once

/// The closed catalogue of ring morphisms the functor machinery accepts:
/// identities, modular reductions, localization inclusions, and variable
/// substitutions.  Image ideals are generated by images of the canonical
/// generators, which is well defined for any generating set.

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "trop/ideal.hpp"

namespace trop {

template <class R1, class R2>
struct RingHom {
  R1 src;
  R2 dst;
  std::function<typename R2::value_type(const typename R1::value_type&)> map;
  std::string label;
};

template <class R1, class R2>
Ideal<R2> induced_ideal_map(const RingHom<R1, R2>& f, const Ideal<R1>& i) {
  std::vector<typename R2::value_type> gens;
  for (const auto& g : i.canonical) gens.push_back(f.map(g));
  if (gens.empty()) gens.push_back(f.dst.zero());
  return make_ideal(f.dst, gens);
}

template <class R>
RingHom<R, R> hom_identity(const R& r) {
  return {r, r, [](const typename R::value_type& a) { return a; }, "id"};
}

inline RingHom<IntegerRing, ModularRing> hom_reduction(const IntegerRing& z,
                                                       const ModularRing& zn) {
  return {z, zn, [zn](const Int& a) { return zn.reduce(a); }, "Z -> " + zn.name()};
}

inline RingHom<ModularRing, ModularRing> hom_reduction_between(const ModularRing& a,
                                                               const ModularRing& b) {
  if (!divides(b.modulus(), a.modulus()))
    throw std::invalid_argument("no reduction " + a.name() + " -> " + b.name());
  return {a, b, [b](const Int& x) { return b.reduce(x); }, a.name() + " -> " + b.name()};
}

template <class F>
RingHom<UPolyRing<F>, LaurentRing<F>> hom_localize_at_variable(const UPolyRing<F>& r) {
  LaurentRing<F> dst(r);
  return {r, dst,
          [dst](const typename UPolyRing<F>::value_type& f) { return dst.from_poly(f); },
          r.name() + " -> " + dst.name()};
}

template <class F>
RingHom<UPolyRing<F>, QuotientUPolyRing<F>> hom_quotient_map(const UPolyRing<F>& r,
                                                             const QuotientUPolyRing<F>& q) {
  return {r, q,
          [q](const typename UPolyRing<F>::value_type& f) { return q.reduce(f); },
          r.name() + " -> " + q.name()};
}

/// x |-> g(x) endomorphism of K[x].
template <class F>
RingHom<UPolyRing<F>, UPolyRing<F>> hom_substitution(const UPolyRing<F>& r,
                                                     typename UPolyRing<F>::value_type g) {
  auto label = r.var() + " -> " + r.to_string(g);
  return {r, r,
          [r, g = std::move(g)](const typename UPolyRing<F>::value_type& f) {
            return r.compose(f, g);
          },
          std::move(label)};
}

template <class Base>
RingHom<Base, LocalizedPIDRing<Base>> hom_localize_at_prime(const Base& r,
                                                            const LocalizedPIDRing<Base>& loc) {
  return {r, loc,
          [loc](const typename Base::value_type& a) { return loc.from_base(a); },
          r.name() + " -> " + loc.name()};
}

template <class Base>
RingHom<Base, FractionFieldRing<Base>> hom_to_fractions(const Base& r,
                                                        const FractionFieldRing<Base>& fr) {
  return {r, fr,
          [fr](const typename Base::value_type& a) { return fr.from_base(a); },
          r.name() + " -> " + fr.name()};
}

}  // namespace trop
