#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trop/localize.hpp"
#include "trop/parse.hpp"
#include "trop/rng.hpp"
#include "trop/spectrum.hpp"

using namespace trop;

namespace {
const IntegerRing Z;
const RationalField Q;
}  // namespace

TEST_CASE("truncated spectra carry both sides of each point") {
  auto spec = speck_truncated(Z, 10);
  REQUIRE(spec.points.size() == 5);
  CHECK(spec.points[0].prime.canonical[0] == 0);
  CHECK(spec.points[2].prime.canonical[0] == 3);
  for (const auto& pt : spec.points) CHECK(ideal_eq(pt.handle.image, pt.prime));

  // the N^gcd reading: <p>^dag = { m : p | m }, spot-checked
  for (const auto& pt : spec.points) {
    if (ideal_is_zero(pt.prime)) continue;
    const Int p = pt.prime.canonical[0];
    for (long m = 0; m <= 200; ++m)
      CHECK(handle_member(pt.handle, u_R(Z, Int(m))) == divides(p, Int(m)));
  }
}

TEST_CASE("closed and basic-open point sets") {
  auto spec = speck_truncated(Z, 10);
  CHECK(vk(correspondence_forward(zero_ideal(Z)), spec).size() == 5);
  auto v6 = vk(correspondence_forward(u_R(Z, Int(6))), spec);
  REQUIRE(v6.size() == 2);
  CHECK(spec.points[v6[0]].prime.canonical[0] == 2);
  CHECK(spec.points[v6[1]].prime.canonical[0] == 3);
  auto d6 = dk(u_R(Z, Int(6)), spec);
  REQUIRE(d6.size() == 3);
  CHECK(spec.points[d6[0]].prime.canonical[0] == 0);
  CHECK(spec.points[d6[1]].prime.canonical[0] == 5);
  CHECK(spec.points[d6[2]].prime.canonical[0] == 7);
}

TEST_CASE("topology laws and the homeomorphism on truncations") {
  auto spec = speck_truncated(Z, 30);
  Rng rng(41);
  std::vector<KIdealHandle<IntegerRing>> handles;
  std::vector<Ideal<IntegerRing>> ideals;
  for (int t = 0; t < 12; ++t) {
    auto i = make_ideal(Z, {Int(rng.range(0, 200)), Int(rng.range(0, 200))});
    ideals.push_back(i);
    handles.push_back(correspondence_forward(i));
  }
  CHECK(spectrum_topology_laws(spec, handles).pass());
  CHECK(spectrum_homeomorphism_check(spec, ideals).pass());

  ModularRing GF2(2);
  GFPolyRing F2x(GF2, "x");
  auto fspec = speck_truncated(F2x, 2);
  REQUIRE(fspec.points.size() == 4);
  std::vector<KIdealHandle<GFPolyRing>> fhandles;
  fhandles.push_back(correspondence_forward(principal_ideal(F2x, parse_upoly(F2x, "x^2 + x"))));
  fhandles.push_back(correspondence_forward(principal_ideal(F2x, parse_upoly(F2x, "x"))));
  fhandles.push_back(correspondence_forward(zero_ideal(F2x)));
  fhandles.push_back(correspondence_forward(unit_ideal(F2x)));
  CHECK(spectrum_topology_laws(fspec, fhandles).pass());
}

TEST_CASE("localization at the generic point of Z") {
  auto data = localize_at_prime(Z, zero_ideal(Z));
  CHECK_FALSE(data.prime.has_value());
  // T_<0> is the positive-rational gcd semifield
  auto x = data.t_local.make(Int(4), Int(6));
  CHECK(data.t_local.to_string(x) == "2/3");
  // zeta lands in B
  CHECK(dvr_eq(data.zeta(x), DvrIdeal{false, 0}));
  CHECK(dvr_eq(data.zeta(data.t_local.zero()), DvrIdeal{true, 0}));

  // kernel is nontrivial with >= 10 distinct witnesses
  std::vector<LocalizedData<IntegerRing>::frac> samples;
  for (long a = 1; a <= 20; ++a)
    for (long b = 1; b <= 20; ++b) samples.push_back(data.t_local.make(Int(a), Int(b)));
  auto probe = zeta_kernel_probe(data, samples, 10);
  CHECK(probe.pass());

  FractionFieldRing<IntegerRing> FQ(Z);
  auto mu = make_mu_generic(FQ, data);
  std::vector<FractionValue<IntegerRing>> fr;
  for (long a = -8; a <= 8; ++a)
    for (long b = 1; b <= 5; ++b) fr.push_back(FQ.make(Int(a), Int(b)));
  CHECK(check_seminorm(mu, fr).pass());
  CHECK(zeta_mu_factorization(data, fr).pass());
}

TEST_CASE("localization at a closed point of Z") {
  auto p5 = u_R(Z, Int(5));
  auto data = localize_at_prime(Z, p5);
  REQUIRE(data.prime.has_value());

  // fgId(Z_(5)) is {0} plus the powers of 5: zeta image check
  CHECK(dvr_eq(data.zeta(data.t_local.make(Int(5), Int(1))), DvrIdeal{false, 1}));
  CHECK(dvr_eq(data.zeta(data.t_local.make(Int(50), Int(3))), DvrIdeal{false, 2}));
  CHECK(dvr_eq(data.zeta(data.t_local.make(Int(2), Int(3))), DvrIdeal{false, 0}));
  CHECK_THROWS(data.t_local.make(Int(1), Int(5)));  // 5 is not invertible

  LocalizedPIDRing<IntegerRing> Z5(Z, Int(5));
  auto mu = make_mu(Z5, data);
  std::vector<FractionValue<IntegerRing>> fr;
  for (long a = -10; a <= 10; ++a)
    for (long b : {1, 2, 3, 7}) fr.push_back(Z5.make(Int(a), Int(b)));
  CHECK(check_seminorm(mu, fr).pass());
  CHECK(zeta_mu_factorization(data, fr).pass());

  std::vector<LocalizedData<IntegerRing>::frac> samples;
  for (long a = 1; a <= 30; ++a)
    for (long b : {1, 2, 3, 7, 9}) samples.push_back(data.t_local.make(Int(a), Int(b)));
  CHECK(zeta_kernel_probe(data, samples, 10).pass());

  auto spec = speck_truncated(Z, 10);
  std::vector<Ideal<IntegerRing>> primes;
  for (const auto& pt : spec.points) primes.push_back(pt.prime);
  CHECK(localization_prime_bijection(data, primes).pass());
}

TEST_CASE("localization of a field backend gives the Boolean image") {
  auto data = localize_at_prime(Q, zero_ideal(Q));
  auto one = data.t_local.one();
  CHECK(dvr_eq(data.zeta(one), DvrIdeal{false, 0}));
  // only two zeta values occur: <0> and <1>
  auto x = data.t_local.make(make_rat(2, 3), Rat(1));
  CHECK(dvr_eq(data.zeta(x), DvrIdeal{false, 0}));
}

TEST_CASE("residue semifields") {
  // generic point: Frac(N^gcd), equality is fraction equality
  auto d0 = localize_at_prime(Z, zero_ideal(Z));
  auto k0 = residue_semifield(d0);
  std::vector<LocalizedData<IntegerRing>::frac> s0;
  for (long a = 0; a <= 12; ++a)
    for (long b = 1; b <= 6; ++b) s0.push_back(d0.t_local.make(Int(a), Int(b)));
  CHECK(residue_semifield_check(k0, s0).pass());
  CHECK_FALSE(k0.same_class(d0.t_local.make(Int(2), Int(3)), d0.t_local.make(Int(2), Int(1))));

  // closed point: two classes by p-adic order, never the zero semiring
  auto d5 = localize_at_prime(Z, u_R(Z, Int(5)));
  auto k5 = residue_semifield(d5);
  std::vector<LocalizedData<IntegerRing>::frac> s5;
  for (long a = 1; a <= 30; ++a) s5.push_back(d5.t_local.make(Int(a), Int(1)));
  CHECK(residue_semifield_check(k5, s5).pass());
  CHECK(k5.is_zero_class(d5.t_local.make(Int(10), Int(3))));
  CHECK_FALSE(k5.is_zero_class(d5.t_local.make(Int(2), Int(3))));
  CHECK(k5.same_class(d5.t_local.make(Int(2), Int(3)), d5.t_local.one()));
}

TEST_CASE("radicals on handles with the spectrum cross-check") {
  auto h12 = correspondence_forward(u_R(Z, Int(12)));
  CHECK(handle_eq(radical_handle(h12), correspondence_forward(u_R(Z, Int(6)))));
  auto h5 = correspondence_forward(u_R(Z, Int(5)));
  CHECK(handle_eq(radical_handle(h5), h5));
  CHECK(handle_is_radical(h5));
  CHECK_FALSE(handle_is_radical(h12));

  auto spec = speck_truncated(Z, 10);
  CHECK(radical_intersection_crosscheck(h12, spec).pass());
  CHECK(radical_intersection_crosscheck(h5, spec).pass());
  CHECK(radical_intersection_crosscheck(correspondence_forward(zero_ideal(Z)), spec).pass());

  // radical is idempotent, inflationary (downward in generators: divides),
  // monotone; radical of a primary handle is prime
  Rng rng(51);
  for (int t = 0; t < 150; ++t) {
    Int n = rng.range(1, 400);
    auto h = correspondence_forward(u_R(Z, n));
    auto r = radical_handle(h);
    CHECK(handle_eq(radical_handle(r), r));
    CHECK(handle_member(r, h.image));  // I <= sqrt(I)
    if (ideal_is_primary(h.image) && !ideal_is_zero(h.image))
      CHECK(ideal_is_prime(r.image));
    // monotone: I <= J implies sqrt(I) <= sqrt(J)
    Int m = n * rng.range(1, 8);  // <m> <= <n>
    auto rm = radical_handle(correspondence_forward(u_R(Z, m)));
    CHECK(handle_member(r, rm.image));
  }

  // truncation too small: flagged, not asserted
  auto h_big = correspondence_forward(u_R(Z, Int(13 * 13)));
  auto rep = radical_intersection_crosscheck(h_big, spec);
  CHECK(rep.pass());  // no violation, just a flag
  REQUIRE(rep.notes.size() == 1);
  CHECK(rep.notes[0].find("inconclusive") != std::string::npos);
}

TEST_CASE("quotient diagram over Z and F2[x]") {
  CHECK(quotient_diagram_check(Z, u_R(Z, Int(12))).pass());
  CHECK(quotient_diagram_check(Z, u_R(Z, Int(30))).pass());
  auto unit = quotient_diagram_check(Z, unit_ideal(Z));
  CHECK(unit.pass());
  REQUIRE(!unit.notes.empty());
  CHECK(unit.notes[0].find("empty") != std::string::npos);

  ModularRing GF2(2);
  GFPolyRing F2x(GF2, "x");
  auto rep = quotient_diagram_check(F2x, principal_ideal(F2x, parse_upoly(F2x, "x^2 + x")));
  for (const auto& v : rep.violations) MESSAGE(v.rule, " @ ", v.witness);
  CHECK(rep.pass());
}
