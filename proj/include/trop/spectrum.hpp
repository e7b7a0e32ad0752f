#pragma once

/// Truncated prime spectra Spec_k(fgId(R)) with the Zariski topology given by
/// closed sets V_k, the radical/intersection cross-check, and the quotient
/// diagram that matches the four descriptions of V(I) against each other.
/// Truncations are explicit: operations report "inconclusive beyond bound"
/// instead of pretending the finite point list is the whole spectrum.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "trop/correspondence.hpp"
#include "trop/ideal.hpp"
#include "trop/ideal_theory.hpp"
#include "trop/report.hpp"
#include "trop/semiring.hpp"

namespace trop {

template <class R>
struct SpectrumPoint {
  Ideal<R> prime;           // ring side
  KIdealHandle<R> handle;   // the corresponding prime k-ideal of fgId(R)
};

template <class R>
struct TruncatedSpectrum {
  R ring;
  long bound;
  std::vector<SpectrumPoint<R>> points;
};

template <class R>
TruncatedSpectrum<R> speck_truncated(const R& ring, long bound) {
  TruncatedSpectrum<R> spec{ring, bound, {}};
  for (auto& p : spec_truncated(ring, bound))
    spec.points.push_back({p, correspondence_forward(p)});
  return spec;
}

/// V_k on the truncation: points whose prime contains the handle's ideal.
template <class R>
std::vector<size_t> vk(const KIdealHandle<R>& h, const TruncatedSpectrum<R>& spec) {
  std::vector<size_t> out;
  for (size_t i = 0; i < spec.points.size(); ++i)
    if (ideal_contains(spec.points[i].prime, h.image)) out.push_back(i);
  return out;
}

/// D_k of a single semiring element f (an ideal of R): the complement of
/// V_k(<f>_k).
template <class R>
std::vector<size_t> dk(const Ideal<R>& f, const TruncatedSpectrum<R>& spec) {
  const auto closed = vk(correspondence_forward(f), spec);
  std::vector<size_t> out;
  for (size_t i = 0; i < spec.points.size(); ++i)
    if (std::find(closed.begin(), closed.end(), i) == closed.end()) out.push_back(i);
  return out;
}

/// Topology laws on the truncation: V(I) u V(J) = V(I x J) and arbitrary
/// intersections of V's match V of the handle sum.
template <class R>
Report spectrum_topology_laws(const TruncatedSpectrum<R>& spec,
                              const std::vector<KIdealHandle<R>>& handles) {
  Report rep;
  rep.subject = "spectrum-topology-laws";
  auto set_union = [](std::vector<size_t> a, const std::vector<size_t>& b) {
    for (size_t x : b)
      if (std::find(a.begin(), a.end(), x) == a.end()) a.push_back(x);
    std::sort(a.begin(), a.end());
    return a;
  };
  auto set_inter = [](const std::vector<size_t>& a, const std::vector<size_t>& b) {
    std::vector<size_t> out;
    for (size_t x : a)
      if (std::find(b.begin(), b.end(), x) != b.end()) out.push_back(x);
    return out;
  };
  for (size_t i = 0; i < handles.size(); ++i)
    for (size_t j = i; j < handles.size(); ++j) {
      auto lhs = set_union(vk(handles[i], spec), vk(handles[j], spec));
      auto rhs = vk(kideal_product(handles[i], handles[j]), spec);
      rep.require(lhs == rhs, "V(I) u V(J) = V(I x J)",
                  handle_to_string(handles[i]) + ", " + handle_to_string(handles[j]));
    }
  // families of size up to 3 for the intersection law
  for (size_t i = 0; i < handles.size(); ++i)
    for (size_t j = i; j < handles.size(); ++j)
      for (size_t k = j; k < handles.size(); ++k) {
        auto lhs = set_inter(set_inter(vk(handles[i], spec), vk(handles[j], spec)),
                             vk(handles[k], spec));
        auto rhs = vk(handle_sum(handle_sum(handles[i], handles[j]), handles[k]), spec);
        rep.require(lhs == rhs, "intersection of V's = V of the sum",
                    handle_to_string(handles[i]) + ", " + handle_to_string(handles[j]) + ", " +
                        handle_to_string(handles[k]));
      }
  return rep;
}

/// The point bijection Spec(R) <-> Spec_k(fgId(R)) preserves closed sets on
/// the truncation: the image of V(I) is exactly V_k(h(I)).
template <class R>
Report spectrum_homeomorphism_check(const TruncatedSpectrum<R>& spec,
                                    const std::vector<Ideal<R>>& ideals) {
  Report rep;
  rep.subject = "spectrum-homeomorphism";
  for (const auto& i : ideals) {
    std::vector<size_t> ring_side;
    for (size_t p = 0; p < spec.points.size(); ++p)
      if (ideal_contains(spec.points[p].prime, i)) ring_side.push_back(p);
    auto semiring_side = vk(correspondence_forward(i), spec);
    rep.require(ring_side == semiring_side, "V(I) matches V_k(h(I))", ideal_to_string(i));
  }
  return rep;
}

// ---- radicals on handles ----

template <class R>
KIdealHandle<R> radical_handle(const KIdealHandle<R>& h) {
  return {ideal_radical(h.image)};
}

template <class R>
bool handle_is_radical(const KIdealHandle<R>& h) {
  return ideal_eq(h.image, ideal_radical(h.image));
}

/// Whether every prime factor of the canonical generator lies inside the
/// truncation bound, so that V_k(I) on the truncation sees all minimal primes.
template <class R>
bool truncation_covers(const R& ring, const Ideal<R>& i, long bound) {
  if (ideal_is_zero(i) || ideal_is_unit(i)) return true;
  if constexpr (std::is_same_v<R, IntegerRing>) {
    for (const auto& [p, e] : factorize(i.canonical[0]))
      if (p > bound) return false;
    return true;
  } else if constexpr (std::is_same_v<R, GFPolyRing>) {
    for (const auto& [g, e] : factorize_gf(ring, i.canonical[0]))
      if (ring.deg(g) > bound) return false;
    return true;
  } else {
    return true;
  }
}

/// sqrt(I) = intersection of the primes in V_k(I), computed on the
/// truncation.  For a PID the intersection of the distinct primes containing
/// I is their product, with <0> short-circuiting to <0>.
template <class R>
Report radical_intersection_crosscheck(const KIdealHandle<R>& h,
                                       const TruncatedSpectrum<R>& spec) {
  Report rep;
  rep.subject = "radical-intersection";
  if (!truncation_covers(spec.ring, h.image, spec.bound)) {
    rep.note("inconclusive beyond bound " + std::to_string(spec.bound));
    return rep;
  }
  if (ideal_is_unit(h.image)) {
    rep.note("unit ideal: V_k is empty, radical is the unit ideal");
    rep.require(handle_eq(radical_handle(h), h), "radical of <1> is <1>", handle_to_string(h));
    return rep;
  }
  const auto closed = vk(h, spec);
  Ideal<R> inter = unit_ideal(spec.ring);
  bool has_zero_prime = false;
  for (size_t p : closed) {
    if (ideal_is_zero(spec.points[p].prime)) has_zero_prime = true;
    inter = ideal_product(inter, spec.points[p].prime);
  }
  if (has_zero_prime) inter = zero_ideal(spec.ring);
  rep.require(ideal_eq(inter, radical_handle(h).image),
              "intersection of V_k primes equals the radical",
              handle_to_string(h) + " -> " + ideal_to_string(inter));
  return rep;
}

// ---- quotient rings and the quotient diagram ----

inline ModularRing quotient_ring(const IntegerRing&, const Ideal<IntegerRing>& i) {
  return ModularRing(abs_int(i.canonical.at(0)));
}
template <class F>
QuotientUPolyRing<F> quotient_ring(const UPolyRing<F>& r, const Ideal<UPolyRing<F>>& i) {
  return QuotientUPolyRing<F>(r, i.canonical.at(0));
}

/// fgId of the quotient ring R/I as a finite table: carrier = canonical
/// ideal forms, operations through the ideal arithmetic.  The element list
/// maps table indices back to ideals.
template <class Q>
struct FgIdTable {
  FiniteSemiring table;
  std::vector<Ideal<Q>> elements;
};

template <class Q>
FgIdTable<Q> fgid_table(const Q& qring) {
  std::vector<Ideal<Q>> elems;
  auto push_unique = [&](const Ideal<Q>& x) {
    for (const auto& e : elems)
      if (ideal_eq(e, x)) return;
    elems.push_back(x);
  };
  if constexpr (std::is_same_v<Q, ModularRing>) {
    const Int n = qring.modulus();
    for (Int d = 1; d <= n; ++d)
      if (divides(d, n)) push_unique(make_ideal(qring, {d == n ? Int(0) : d}));
  } else {
    // monic divisors of the modulus, from subsets of the factorization
    const auto fac = factorize_gf(qring.base(), qring.modulus());
    std::vector<unsigned> exps(fac.size(), 0);
    while (true) {
      auto d = qring.base().one();
      for (size_t i = 0; i < fac.size(); ++i)
        for (unsigned e = 0; e < exps[i]; ++e) d = qring.base().mul(d, fac[i].first);
      push_unique(make_ideal(qring, {qring.reduce(d)}));
      size_t pos = 0;
      while (pos < exps.size() && exps[pos] == fac[pos].second) {
        exps[pos] = 0;
        ++pos;
      }
      if (pos == exps.size()) break;
      ++exps[pos];
    }
  }
  const int m = static_cast<int>(elems.size());
  auto index_of = [&](const Ideal<Q>& x) {
    for (int i = 0; i < m; ++i)
      if (ideal_eq(elems[i], x)) return i;
    throw std::logic_error("ideal outside the fgId table");
  };
  std::vector<std::string> labels;
  for (const auto& e : elems) labels.push_back(ideal_to_string(e));
  std::vector<std::vector<int>> add(m, std::vector<int>(m)), mul(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      add[i][j] = index_of(ideal_sum(elems[i], elems[j]));
      mul[i][j] = index_of(ideal_product(elems[i], elems[j]));
    }
  FiniteSemiring out(labels, add, mul, index_of(zero_ideal(qring)), index_of(unit_ideal(qring)));
  out.set_name("fgId(" + qring.name() + ")");
  return {std::move(out), std::move(elems)};
}

/// The bottom row of the quotient diagram: Spec_k(fgId(R/I)), Spec(R/I),
/// V(I) in Spec(R), and Spec_k(T/I^dag) must carry identical point sets and
/// closed-set lattices.  Points are matched through the canonical generator
/// of the corresponding prime of R.
template <class R>
Report quotient_diagram_check(const R& ring, const Ideal<R>& i) {
  Report rep;
  rep.subject = "quotient-diagram";
  if (ideal_is_zero(i)) {
    rep.fail("nonzero ideal required", ideal_to_string(i));
    return rep;
  }
  if (ideal_is_unit(i)) {
    // every space in the row is empty
    rep.note("unit ideal: all four spaces are empty");
    return rep;
  }
  const auto q = quotient_ring(ring, i);

  // route A: Spec_k(fgId(R/I)) via the quotient ring's prime enumeration,
  // named by the lift of each prime to R
  std::vector<std::string> route_a;
  std::vector<Ideal<R>> lifted;  // primes of R containing I, in route-A order
  for (const auto& p : spec_truncated(q, 0)) {
    // the zero ideal of R/I lifts to I itself
    auto lift = ideal_is_zero(p) ? i : make_ideal(ring, {p.canonical.at(0)});
    route_a.push_back(ideal_to_string(lift));
    lifted.push_back(lift);
  }
  std::sort(route_a.begin(), route_a.end());

  // route B: V(I) inside Spec(R), exact via factorization
  std::vector<std::string> route_b;
  std::vector<Ideal<R>> primes_of_r;
  if constexpr (std::is_same_v<R, IntegerRing>) {
    for (const auto& [p, e] : factorize(i.canonical[0]))
      primes_of_r.push_back(principal_ideal(ring, p));
  } else {
    for (const auto& [g, e] : factorize_gf(ring, i.canonical[0]))
      primes_of_r.push_back(principal_ideal(ring, g));
  }
  for (const auto& p : primes_of_r) route_b.push_back(ideal_to_string(p));
  std::sort(route_b.begin(), route_b.end());
  rep.require(route_a == route_b, "Spec(R/I) matches V(I) in Spec(R)", ideal_to_string(i));

  // route C: the prime k-ideals of the finite semiring fgId(R/I), each
  // identified by the set of table elements it contains
  const auto tbl = fgid_table(q);
  const FiniteSemiring& t = tbl.table;
  // lift of each table element back to R: generated by the representative
  auto lift_of = [&](int e) {
    if (ideal_is_zero(tbl.elements[e])) return i;
    return make_ideal(ring, {tbl.elements[e].canonical.at(0)});
  };
  std::vector<Mask> prime_masks;
  for (Mask m : enumerate_k_ideals(t))
    if (is_prime_ideal_mask(t, m)) prime_masks.push_back(m);
  rep.require(prime_masks.size() == route_a.size(),
              "Spec_k of the finite quotient semiring has the same point count",
              std::to_string(prime_masks.size()) + " vs " + std::to_string(route_a.size()));

  // each prime k-ideal must consist of exactly the table elements whose lift
  // sits inside one of the lifted primes; remember the matching
  std::vector<const Ideal<R>*> mask_prime(prime_masks.size(), nullptr);
  for (size_t mi = 0; mi < prime_masks.size(); ++mi) {
    for (const auto& p : lifted) {
      bool agrees = true;
      for (int e = 0; e < static_cast<int>(t.size()); ++e) {
        const bool in_mask = mask_has(prime_masks[mi], e);
        const bool in_prime = ideal_contains(p, lift_of(e));
        if (in_mask != in_prime) {
          agrees = false;
          break;
        }
      }
      if (agrees) {
        mask_prime[mi] = &p;
        break;
      }
    }
    rep.require(mask_prime[mi] != nullptr, "prime k-ideal corresponds to a prime of R",
                mask_to_string(t, prime_masks[mi]));
  }

  // closed-set lattices: for every divisor ideal J >= I, the point set
  // {p : J <= p} must agree across the ring route and the table route
  for (int e = 0; e < static_cast<int>(t.size()); ++e) {
    const auto j = lift_of(e);
    std::vector<std::string> ring_closed;
    for (const auto& p : lifted)
      if (ideal_contains(p, j)) ring_closed.push_back(ideal_to_string(p));
    std::sort(ring_closed.begin(), ring_closed.end());
    std::vector<std::string> table_closed;
    for (size_t mi = 0; mi < prime_masks.size(); ++mi)
      if (mask_has(prime_masks[mi], e) && mask_prime[mi])
        table_closed.push_back(ideal_to_string(*mask_prime[mi]));
    std::sort(table_closed.begin(), table_closed.end());
    rep.require(ring_closed == table_closed, "closed sets agree across the routes",
                t.label(e));
  }
  return rep;
}

}  // namespace trop
