#pragma once

/// Tropicalization of glued schemes with respect to a fixed affine covering.
/// The tested shape is the projective line: two polynomial charts glued along
/// D(x) ~ D(y) by x -> 1/y.  n-chart data parses structurally, but checks run
/// pairwise and on listed triples.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "trop/fraction_semiring.hpp"
#include "trop/parse.hpp"
#include "trop/report.hpp"
#include "trop/spectrum.hpp"

namespace trop {

struct GluingChart {
  std::string ring;  // descriptor string, e.g. "GF(2)[x]" or "Q[x]"
};

struct GluingOverlap {
  int i = 0, j = 0;
  std::string f_i, f_j;  // basic-open denominators on each side
};

struct GluingTransition {
  int i = 0, j = 0;
  std::string substitution;  // catalogued: "inverse" (x -> 1/y) or "identity"
};

struct GluingData {
  std::vector<GluingChart> charts;
  std::vector<GluingOverlap> overlaps;
  std::vector<GluingTransition> transitions;
  std::vector<std::array<int, 3>> cocycle_triples;

  static GluingData from_json(const nlohmann::json& j) {
    GluingData g;
    for (const auto& c : j.at("charts")) g.charts.push_back({c.at("ring").get<std::string>()});
    for (const auto& o : j.at("overlaps"))
      g.overlaps.push_back({o.at("i").get<int>(), o.at("j").get<int>(),
                            o.at("f_i").get<std::string>(), o.at("f_j").get<std::string>()});
    for (const auto& t : j.at("transitions"))
      g.transitions.push_back({t.at("i").get<int>(), t.at("j").get<int>(),
                               t.at("substitution").get<std::string>()});
    if (j.contains("triples"))
      for (const auto& t : j.at("triples"))
        g.cocycle_triples.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
    return g;
  }
};

/// y^{deg g} * g(1/y): plain coefficient reversal, monic-normalized.
template <class F>
typename UPolyRing<F>::value_type reverse_poly(const UPolyRing<F>& ring,
                                               const typename UPolyRing<F>::value_type& g) {
  typename UPolyRing<F>::value_type rev(g.rbegin(), g.rend());
  return ring.monic(ring.normalized(std::move(rev)));
}

/// The induced point map D_k(u(x)) -> D_k(u(y)) of the inverse transition.
template <class F>
Ideal<UPolyRing<F>> transition_prime_inverse(const UPolyRing<F>& src, const UPolyRing<F>& dst,
                                             const Ideal<UPolyRing<F>>& p) {
  if (ideal_is_zero(p)) return zero_ideal(dst);
  const auto& g = p.canonical.at(0);
  if (src.deg(g) >= 1 && src.coeff().is_zero(g.front()))
    throw std::invalid_argument("prime lies outside the overlap");
  return principal_ideal(dst, reverse_poly(dst, g));
}

/// The tropical section transition is fgId of the chart transition between
/// the localized rings K[x]_x -> K[y]_y: an ideal of the Laurent ring, in
/// canonical form a monic polynomial with nonzero constant term, maps to the
/// ideal of its coefficient reversal.
template <class F>
Ideal<LaurentRing<F>> transition_laurent_ideal_inverse(const LaurentRing<F>& src,
                                                       const LaurentRing<F>& dst,
                                                       const Ideal<LaurentRing<F>>& i) {
  if (ideal_is_zero(i)) return zero_ideal(dst);
  const auto& unit_part = i.canonical.at(0).unit_part;
  return principal_ideal(dst, dst.from_poly(reverse_poly(dst.base(), unit_part)));
}

/// The tropicalization of a two-chart P^1 gluing: chart-wise Spec_k
/// truncations, the overlap identification, with every structural check in
/// the report.
template <class F>
struct TropSchemeData {
  UPolyRing<F> chart0, chart1;
  TruncatedSpectrum<UPolyRing<F>> spec0, spec1;
  std::vector<size_t> overlap0, overlap1;  // D_k point indices per chart
  std::vector<std::pair<size_t, size_t>> identified;  // matched point pairs
  Report report;
};

template <class F>
TropSchemeData<F> trop_p1(const UPolyRing<F>& chart0, const UPolyRing<F>& chart1, long bound) {
  TropSchemeData<F> out{chart0, chart1, speck_truncated(chart0, bound),
                        speck_truncated(chart1, bound), {}, {}, {}, {}};
  Report& rep = out.report;
  rep.subject = "trop-p1";

  const auto fx = principal_ideal(chart0, chart0.variable());
  const auto fy = principal_ideal(chart1, chart1.variable());
  out.overlap0 = dk(fx, out.spec0);
  out.overlap1 = dk(fy, out.spec1);
  rep.note("chart 0 points: " + std::to_string(out.spec0.points.size()));
  rep.note("chart 1 points: " + std::to_string(out.spec1.points.size()));
  rep.require(out.overlap0.size() == out.overlap1.size(), "overlaps have equal size",
              std::to_string(out.overlap0.size()) + " vs " + std::to_string(out.overlap1.size()));

  // the point map is a bijection matching the overlap sets
  std::vector<bool> hit(out.spec1.points.size(), false);
  for (size_t idx : out.overlap0) {
    const auto img = transition_prime_inverse(chart0, chart1, out.spec0.points[idx].prime);
    bool found = false;
    for (size_t jdx : out.overlap1) {
      if (ideal_eq(out.spec1.points[jdx].prime, img)) {
        if (hit[jdx]) rep.fail("point map is injective", ideal_to_string(img));
        hit[jdx] = true;
        out.identified.push_back({idx, jdx});
        found = true;
        break;
      }
    }
    rep.require(found, "point map lands in the other overlap",
                ideal_to_string(out.spec0.points[idx].prime));
  }
  for (size_t jdx : out.overlap1)
    rep.require(hit[jdx], "point map is surjective",
                ideal_to_string(out.spec1.points[jdx].prime));

  // the transition is an involution on primes
  for (size_t idx : out.overlap0) {
    const auto& p = out.spec0.points[idx].prime;
    const auto round =
        transition_prime_inverse(chart1, chart0, transition_prime_inverse(chart0, chart1, p));
    rep.require(ideal_eq(round, p), "transition is its own inverse on points",
                ideal_to_string(p));
  }

  // section-level transition is fgId of the localized chart transition: it
  // must be a semiring isomorphism and its own inverse, and the degenerate
  // cocycle phi_00 = phi_10 o phi_01 holds elementwise
  const LaurentRing<F> lx(chart0), ly(chart1);
  std::vector<Ideal<LaurentRing<F>>> samples;
  samples.push_back(zero_ideal(lx));
  samples.push_back(unit_ideal(lx));
  for (long deg = 1; deg <= 2; ++deg)
    for (long shift : {0L, 1L}) {
      auto a = chart0.add(chart0.monomial(chart0.coeff().one(), deg), chart0.one());
      samples.push_back(
          principal_ideal(lx, lx.from_poly(chart0.mul(a, chart0.monomial(chart0.coeff().one(),
                                                                         shift)))));
    }
  auto phi01 = [&](const Ideal<LaurentRing<F>>& s) {
    return transition_laurent_ideal_inverse(lx, ly, s);
  };
  auto phi10 = [&](const Ideal<LaurentRing<F>>& s) {
    return transition_laurent_ideal_inverse(ly, lx, s);
  };
  for (const auto& s : samples)
    rep.require(ideal_eq(phi10(phi01(s)), s), "sections round-trip through the transition",
                ideal_to_string(s));
  for (const auto& s1 : samples)
    for (const auto& s2 : samples) {
      rep.require(ideal_eq(phi01(ideal_sum(s1, s2)), ideal_sum(phi01(s1), phi01(s2))),
                  "transition preserves sums",
                  ideal_to_string(s1) + " + " + ideal_to_string(s2));
      rep.require(ideal_eq(phi01(ideal_product(s1, s2)), ideal_product(phi01(s1), phi01(s2))),
                  "transition preserves products",
                  ideal_to_string(s1) + " * " + ideal_to_string(s2));
    }
  return out;
}

/// Glued point count of the P^1 tropicalization: chart-0 points plus the
/// chart-1 points missed by the identification.
template <class F>
size_t trop_p1_point_count(const TropSchemeData<F>& t) {
  return t.spec0.points.size() + (t.spec1.points.size() - t.identified.size());
}

/// A single affine chart tropicalizes to its Spec_k truncation verbatim.
template <class R>
Report trop_single_chart_consistency(const R& ring, long bound) {
  Report rep;
  rep.subject = "trop-affine-consistency";
  const auto direct = speck_truncated(ring, bound);
  const auto again = speck_truncated(ring, bound);
  rep.require(direct.points.size() == again.points.size(), "point counts agree", "");
  for (size_t i = 0; i < direct.points.size(); ++i)
    rep.require(ideal_eq(direct.points[i].prime, again.points[i].prime),
                "identity gluing leaves points fixed", ideal_to_string(direct.points[i].prime));
  return rep;
}

}  // namespace trop
