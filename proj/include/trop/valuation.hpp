#pragma once

/// Seminorms and valuations from rings into idempotent semirings, the axiom
/// checker over sample sets, the induced semiring morphism on fgId, and the
/// commuting-square check for the fgId functor.  The module-side analogues
/// (u_M, v-norms, the induced monoid morphism on fgMod) live here too.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "trop/fgid.hpp"
#include "trop/hom.hpp"
#include "trop/report.hpp"
#include "trop/semiring.hpp"
#include "trop/submodule.hpp"

namespace trop {

template <class R, class S>
struct Valuation {
  R ring;
  S target;
  std::function<typename S::value_type(const typename R::value_type&)> map;
  std::string label;
};

template <class R>
Valuation<R, FgIdSemiring<R>> valuation_u_R(const R& ring) {
  FgIdSemiring<R> t{ring};
  return {ring, t, [ring](const typename R::value_type& a) { return principal_ideal(ring, a); },
          "u_R"};
}

/// u_R followed by the collapse <0> -> 0, everything else -> 1.
template <class R>
Valuation<R, BooleanSemiring> valuation_collapse_boolean(const R& ring) {
  return {ring, BooleanSemiring{},
          [ring](const typename R::value_type& a) { return ring.is_zero(a) ? 0 : 1; },
          "collapse_to_boolean"};
}

inline Valuation<IntegerRing, NatGcdSemiring> valuation_nat_gcd_abs() {
  return {IntegerRing{}, NatGcdSemiring{}, [](const Int& a) { return abs_int(a); },
          "nat_gcd_abs"};
}

/// A periodic table valuation on Z from JSON {"modulus": m, "values":
/// [...labels]}: v(n) = values[n mod m].  Whether the table is a genuine
/// seminorm is for check_seminorm to decide.
inline Valuation<IntegerRing, FiniteSemiring> valuation_from_table(const FiniteSemiring& target,
                                                                   const nlohmann::json& j) {
  const long m = j.at("modulus").get<long>();
  if (m < 1) throw std::invalid_argument("table modulus must be positive");
  std::vector<int> values;
  for (const auto& v : j.at("values")) values.push_back(target.parse(v.get<std::string>()));
  if (static_cast<long>(values.size()) != m)
    throw std::invalid_argument("table needs exactly one value per residue");
  return {IntegerRing{}, target,
          [m, values](const Int& a) {
            return values[static_cast<size_t>(mpz_class(mod_floor(a, m)).get_ui())];
          },
          "table_mod_" + std::to_string(m)};
}

/// Checks the seminorm axioms on every sample pair and flags multiplicativity
/// and norm status in the report notes.
template <class R, class S>
Report check_seminorm(const Valuation<R, S>& v,
                      const std::vector<typename R::value_type>& samples) {
  Report rep;
  rep.subject = "seminorm:" + v.label;
  const R& ring = v.ring;
  const S& t = v.target;
  if (!t.eq(v.map(ring.zero()), t.zero())) rep.fail("unit |0|=0", "0");
  if (!t.eq(v.map(ring.one()), t.one())) rep.fail("unit |1|=1", "1");
  if (!t.eq(v.map(ring.neg(ring.one())), t.one())) rep.fail("sign |-1|=1", "-1");
  bool multiplicative = true, norm = true, integral = true;
  for (const auto& a : samples) {
    if (ring.is_zero(a)) continue;
    if (t.is_zero(v.map(a))) norm = false;
  }
  for (const auto& a : samples) {
    if (!natural_leq(t, v.map(a), t.one())) integral = false;
    for (const auto& b : samples) {
      const auto vab = v.map(ring.mul(a, b));
      const auto vavb = t.mul(v.map(a), v.map(b));
      if (!natural_leq(t, vab, vavb))
        rep.fail("submultiplicativity", ring.to_string(a) + ", " + ring.to_string(b));
      if (!t.eq(vab, vavb)) multiplicative = false;
      const auto vsum = v.map(ring.add(a, b));
      if (!natural_leq(t, vsum, t.add(v.map(a), v.map(b))))
        rep.fail("subadditivity", ring.to_string(a) + ", " + ring.to_string(b));
    }
  }
  rep.note(std::string("multiplicative: ") + (multiplicative ? "yes" : "no"));
  rep.note(std::string("norm: ") + (norm ? "yes" : "no"));
  rep.note(std::string("integral: ") + (integral ? "yes" : "no"));
  return rep;
}

/// The induced map vhat on fgId(R): sum of v over the canonical generators.
template <class R, class S>
typename S::value_type induced_vhat(const Valuation<R, S>& v, const Ideal<R>& alpha) {
  typename S::value_type acc = v.target.zero();
  for (const auto& g : alpha.canonical) acc = v.target.add(acc, v.map(g));
  return acc;
}

/// vhat must agree across generator presentations of the same ideal; the
/// presentations are re-evaluated literally, not through canonical forms.
template <class R, class S>
Report vhat_presentation_independent(const Valuation<R, S>& v,
                                     const std::vector<typename R::value_type>& gens_a,
                                     const std::vector<typename R::value_type>& gens_b) {
  Report rep;
  rep.subject = "vhat-presentation-independence:" + v.label;
  const auto ia = make_ideal(v.ring, gens_a);
  const auto ib = make_ideal(v.ring, gens_b);
  if (!ideal_eq(ia, ib)) {
    rep.fail("presentations generate the same ideal", ideal_to_string(ia) + " vs " + ideal_to_string(ib));
    return rep;
  }
  auto eval = [&](const std::vector<typename R::value_type>& gens) {
    typename S::value_type acc = v.target.zero();
    for (const auto& g : gens) acc = v.target.add(acc, v.map(g));
    return acc;
  };
  rep.require(v.target.eq(eval(gens_a), eval(gens_b)), "vhat agrees on both presentations",
              ideal_to_string(ia));
  return rep;
}

/// Prop-style functoriality: fgId(f)(u_{R1}(a)) = u_{R2}(f(a)) on samples.
template <class R1, class R2>
Report fgid_functor_commutes(const RingHom<R1, R2>& f,
                             const std::vector<typename R1::value_type>& samples) {
  Report rep;
  rep.subject = "fgid-functor:" + f.label;
  for (const auto& a : samples) {
    const auto left = induced_ideal_map(f, principal_ideal(f.src, a));
    const auto right = principal_ideal(f.dst, f.map(a));
    rep.require(ideal_eq(left, right), "square commutes", f.src.to_string(a));
  }
  return rep;
}

// ---- module-side norms ----

template <class R>
struct ModuleNorm {
  R ring;
  size_t ambient;
  std::function<Submodule<R>(const std::vector<typename R::value_type>&)> map;
  std::string label;
};

template <class R>
ModuleNorm<R> norm_u_M(const R& ring, size_t ambient) {
  return {ring, ambient,
          [ring](const std::vector<typename R::value_type>& m) {
            return cyclic_submodule(ring, m);
          },
          "u_M"};
}

/// w(r*m) <= C * u_R(r) * w(m), with the strong form w(r*m) = u_R(r)*w(m)
/// flagged separately.  C is a parameter; the whole catalogue uses C = <1>.
template <class R>
Report check_v_norm(const ModuleNorm<R>& w, const Ideal<R>& c_constant,
                    const std::vector<typename R::value_type>& ring_samples,
                    const std::vector<std::vector<typename R::value_type>>& module_samples) {
  Report rep;
  rep.subject = "v-norm:" + w.label;
  const R& ring = w.ring;
  // subadditivity of the underlying group seminorm
  for (const auto& m1 : module_samples)
    for (const auto& m2 : module_samples) {
      std::vector<typename R::value_type> sum;
      for (size_t i = 0; i < m1.size(); ++i) sum.push_back(ring.add(m1[i], m2[i]));
      rep.require(submodule_contains(submodule_sum(w.map(m1), w.map(m2)), w.map(sum)),
                  "subadditivity w(m+n) <= w(m)+w(n)", submodule_to_string(w.map(sum)));
    }
  for (const auto& r : ring_samples) {
    const auto vr = principal_ideal(ring, r);
    const auto cvr = ideal_product(c_constant, vr);
    for (const auto& m : module_samples) {
      std::vector<typename R::value_type> rm;
      for (const auto& x : m) rm.push_back(ring.mul(r, x));
      const auto wrm = w.map(rm);
      rep.require(submodule_contains(module_action(cvr, w.map(m)), wrm),
                  "w(r m) <= C v(r) w(m)", ring.to_string(r));
      rep.require(submodule_eq(wrm, module_action(vr, w.map(m))),
                  "strong equality w(r m) = v(r) w(m)", ring.to_string(r));
    }
  }
  return rep;
}

/// Monoid morphism induced on fgMod: sum of w over the HNF basis rows.
template <class R>
Submodule<R> induced_what(const ModuleNorm<R>& w, const Submodule<R>& mu) {
  Submodule<R> acc = zero_submodule(w.ring, w.ambient);
  for (const auto& row : mu.basis) acc = submodule_sum(acc, w.map(row));
  return acc;
}

}  // namespace trop
