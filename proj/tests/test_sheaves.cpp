#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixture_corpus.hpp"
#include "trop/basic_open.hpp"
#include "trop/comparison.hpp"
#include "trop/gluing.hpp"
#include "trop/ideal_theory.hpp"
#include "trop/parse.hpp"
#include "trop/presheaf.hpp"

using namespace trop;

namespace {
const IntegerRing Z;

SitePresheaf<FiniteRing> sierpinski_z4_z2() {
  const auto site = FiniteSite::sierpinski();
  return zmod_chain_presheaf(site, {{site.full(), 4}, {1, 2}});
}
}  // namespace

TEST_CASE("finite sites") {
  CHECK(FiniteSite::one_point().validate().pass());
  CHECK(FiniteSite::sierpinski().validate().pass());
  CHECK(FiniteSite::chain3().validate().pass());
  CHECK(FiniteSite::discrete(2).validate().pass());

  auto s = FiniteSite::sierpinski();
  CHECK(s.min_open(0) == 1);        // {p0}
  CHECK(s.min_open(1) == s.full()); // {p0,p1}

  // a family missing an intersection fails validation
  FiniteSite bad(2, {1, 2});  // {p0}, {p1}: union {p0,p1} missing until ctor adds full
  CHECK(bad.validate().pass());  // ctor closed it by adding 0 and full
  FiniteSite bad2(3, {3, 6});    // {p0,p1}, {p1,p2}: intersection {p1} missing
  CHECK_FALSE(bad2.validate().pass());
}

TEST_CASE("fgId of finite rings") {
  auto z4 = FiniteRing::zmod(4);
  auto fg = fgid_finite(z4);
  REQUIRE(fg.table.size() == 3);  // <0>, <2>, <1>
  CHECK(check_semiring_axioms(fg.table).pass());
  CHECK(is_simple(fg.table));

  auto z2 = FiniteRing::zmod(2);
  std::vector<int> red = {0, 1, 0, 1};  // reduction Z/4 -> Z/2
  CHECK(check_ring_hom(z4, z2, red).pass());
  auto fg2 = fgid_finite(z2);
  auto fmap = fgid_map(z4, fg, z2, fg2, red);
  // <2> = {0,2} maps to <0> = {0}
  const int two_ideal = fg.index_of(0b0101);
  CHECK(fmap[two_ideal] == fg2.index_of(0b01));
}

TEST_CASE("phi on the Sierpinski chain presheaf") {
  auto p = sierpinski_z4_z2();
  CHECK(check_presheaf_functorial(p).pass());
  auto q = phi_presheaf(p);
  CHECK(check_presheaf_functorial(q).pass());
  CHECK(q.at(q.site.full()).size() == 3);  // fgId(Z/4)
  CHECK(q.at(1).size() == 2);              // fgId(Z/2)

  // one-point site: phi of the stalk is the only section
  auto one = zmod_chain_presheaf(FiniteSite::one_point(), {{1, 4}});
  auto qone = phi_presheaf(one);
  CHECK(stalk(qone, 0).size() == 3);
  CHECK(stalk_commutation_check(qone, 0).pass());
}

TEST_CASE("stalk commutation is a bijection, by complete class enumeration") {
  auto q = phi_presheaf(sierpinski_z4_z2());
  auto open_pt = stalk_commutation_check(q, 0);
  CHECK(open_pt.pass());
  CHECK(open_pt.notes[0] == "classes: 2");
  auto closed_pt = stalk_commutation_check(q, 1);
  CHECK(closed_pt.pass());
  CHECK(closed_pt.notes[0] == "classes: 3");

  // 3-point chain with Z/8 -> Z/4 -> Z/2
  auto chain = zmod_chain_presheaf(FiniteSite::chain3(), {{7, 8}, {3, 4}, {1, 2}});
  auto qc = phi_presheaf(chain);
  CHECK(check_presheaf_functorial(qc).pass());
  for (int x = 0; x < 3; ++x) CHECK(stalk_commutation_check(qc, x).pass());
}

TEST_CASE("stalk commutation for module presheaves") {
  auto rings = sierpinski_z4_z2();
  SitePresheaf<FiniteModule> mods{rings.site, {}, rings.res};
  for (const auto& r : rings.sections) mods.sections.push_back(FiniteModule::regular(r));
  auto qm = phi_presheaf_modules(rings, mods);
  for (int x = 0; x < 2; ++x) CHECK(stalk_commutation_check(qm, x).pass());
}

TEST_CASE("sheafification of an already-sheafy presheaf is isomorphic") {
  auto q = phi_presheaf(sierpinski_z4_z2());
  auto s = sheafify(q);
  // sections over the whole space biject with Phi sections there
  CHECK(s.families[q.site.open_index(q.site.full())].size() == 3);
  CHECK(sheaf_axioms_check(s).pass());
  CHECK(sheaf_restrictions_are_morphisms(s, q).pass());
}

TEST_CASE("sheafification completes a constant presheaf to the product") {
  const auto site = FiniteSite::discrete(2);
  SitePresheaf<FiniteSemiring> q{site, {}, {}};
  const auto b = boolean_table();
  for (size_t u = 0; u < site.opens().size(); ++u) q.sections.push_back(b);
  for (size_t u = 0; u < site.opens().size(); ++u)
    for (size_t v = 0; v < site.opens().size(); ++v) {
      if (u == v || (site.opens()[v] & ~site.opens()[u]) != 0) continue;
      q.res[{u, v}] = {0, 1};  // identity on the constant sections
    }
  auto s = sheafify(q);
  CHECK(s.families[site.open_index(site.full())].size() == 4);  // B x B
  CHECK(s.families[site.open_index(1)].size() == 2);
  CHECK(sheaf_axioms_check(s).pass());
  CHECK(sheaf_restrictions_are_morphisms(s, q).pass());
}

TEST_CASE("structure sections on basic opens") {
  auto whole = structure_sections_on_basic_open(Z, Int(1));
  REQUIRE_FALSE(whole.collapsed());
  // denominators are units: a copy of fgId(Z)
  CHECK(whole.semiring->make(Int(5), Int(1)).den == 1);

  auto t6 = structure_sections_on_basic_open(Z, Int(6));
  REQUIRE_FALSE(t6.collapsed());
  auto x = t6.semiring->make(Int(4), Int(6));
  CHECK(t6.semiring->to_string(x) == "2/3");

  auto empty = structure_sections_on_basic_open(Z, Int(0));
  CHECK(empty.collapsed());

  std::vector<Ideal<IntegerRing>> samples;
  for (long a : {0L, 1L, 2L, 5L, 12L, 30L}) samples.push_back(u_R(Z, Int(a)));
  CHECK(basic_open_restriction_consistency(Z, Int(6), Int(10), samples).pass());
  CHECK(basic_open_restriction_consistency(Z, Int(2), Int(3), samples).pass());
}

TEST_CASE("module sheaf sections on basic opens") {
  ModuleSheafOnBasicOpen<IntegerRing> n2(Z, 2, Int(2));
  // zero module gives the zero sheaf
  auto z = n2.from_submodule(zero_submodule(Z, 2));
  CHECK(n2.eq(z, n2.make(zero_submodule(Z, 2), 3)));
  // (1,0)/<2> is well formed and distinct from (1,0)/1
  auto half = n2.make(cyclic_submodule(Z, {Int(1), Int(0)}), 1);
  CHECK(half.exp == 1);
  CHECK_FALSE(n2.eq(half, n2.from_submodule(cyclic_submodule(Z, {Int(1), Int(0)}))));
  // but (2,0)/<2> reduces to (1,0)/1
  auto red = n2.make(cyclic_submodule(Z, {Int(2), Int(0)}), 1);
  CHECK(n2.eq(red, n2.from_submodule(cyclic_submodule(Z, {Int(1), Int(0)}))));

  std::vector<Submodule<IntegerRing>> samples = {
      zero_submodule(Z, 2), full_module(Z, 2), cyclic_submodule(Z, {Int(2), Int(4)}),
      cyclic_submodule(Z, {Int(1), Int(3)}),
      make_submodule(Z, 2, {{Int(2), Int(0)}, {Int(0), Int(2)}})};
  CHECK(module_sheaf_check(Z, 2, Int(2), Int(3), samples).pass());
}

TEST_CASE("trop of P1 over GF(2)") {
  ModularRing GF2(2);
  GFPolyRing F2x(GF2, "x"), F2y(GF2, "y");
  auto t = trop_p1(F2x, F2y, 3);
  for (const auto& v : t.report.violations) MESSAGE(v.rule, " @ ", v.witness);
  CHECK(t.report.pass());
  // degree <= 3 irreducibles over GF(2): x, x+1, x^2+x+1, x^3+x+1, x^3+x^2+1
  CHECK(t.spec0.points.size() == 6);  // <0> plus five
  CHECK(t.spec1.points.size() == 6);
  CHECK(t.overlap0.size() == 5);      // everything except <x>
  CHECK(t.identified.size() == 5);
  CHECK(trop_p1_point_count(t) == 7);  // glued line: 6 + the missing <y>

  auto t2 = trop_p1(F2x, F2y, 2);
  CHECK(t2.report.pass());
  CHECK(t2.spec0.points.size() == 4);
  CHECK(trop_p1_point_count(t2) == 5);
}

TEST_CASE("trop of P1 over Q with the irreducible catalogue") {
  RationalField Q;
  QPolyRing Qx(Q, "x"), Qy(Q, "y");
  auto t = trop_p1(Qx, Qy, 2);
  for (const auto& v : t.report.violations) MESSAGE(v.rule, " @ ", v.witness);
  CHECK(t.report.pass());
  CHECK(t.spec0.points.size() == t.spec1.points.size());
  CHECK(trop_single_chart_consistency(Qx, 2).pass());
}

TEST_CASE("gluing data parses from JSON") {
  nlohmann::json j = {
      {"charts", {{{"ring", "GF(2)[x]"}}, {{"ring", "GF(2)[y]"}}}},
      {"overlaps", {{{"i", 0}, {"j", 1}, {"f_i", "x"}, {"f_j", "y"}}}},
      {"transitions", {{{"i", 0}, {"j", 1}, {"substitution", "inverse"}}}}};
  auto g = GluingData::from_json(j);
  REQUIRE(g.charts.size() == 2);
  CHECK(g.charts[1].ring == "GF(2)[y]");
  CHECK(g.overlaps[0].f_i == "x");
  CHECK(g.transitions[0].substitution == "inverse");
}

TEST_CASE("pushforward stalks versus quotient stalks, reported not interpreted") {
  // Both sides of the open comparison i_*(O_{Spec_k(T/I)}) vs O/I are
  // computed stalkwise on a finite fixture; the outcome is recorded, with no
  // equality claim either way.
  const auto t = trop_fixtures::divisor_semiring(12);  // fgId(Z/12) tables
  const Mask ideal_i = subtractive_closure_mask(t, Mask(1) << t.parse("6"));
  for (Mask prime : enumerate_k_ideals(t)) {
    if (!is_prime_ideal_mask(t, prime)) continue;
    if ((prime & ideal_i) != ideal_i) continue;  // stalks only over V_k(I)
    // side A: localize the quotient at the image of the prime
    const Congruence y = map_c(t, ideal_i);
    const auto q = quotient_semiring(t, y);
    std::vector<int> comp_q;
    for (int x = 0; x < static_cast<int>(t.size()); ++x)
      if (!mask_has(prime, x)) comp_q.push_back(y.cls[x]);
    std::sort(comp_q.begin(), comp_q.end());
    comp_q.erase(std::unique(comp_q.begin(), comp_q.end()), comp_q.end());
    const auto side_a = localize_semiring(q, comp_q);
    // side B: localize first, then quotient by the pushed-forward k-ideal
    std::vector<int> comp_t;
    for (int x = 0; x < static_cast<int>(t.size()); ++x)
      if (!mask_has(prime, x)) comp_t.push_back(x);
    const auto loc = localize_semiring_with_map(t, comp_t);
    Mask pushed = 0;
    for (int x = 0; x < static_cast<int>(t.size()); ++x)
      if (mask_has(ideal_i, x)) pushed = mask_with(pushed, loc.unit_map[x]);
    const auto side_b = quotient_by_kideal(loc.table, subtractive_closure_mask(loc.table, pushed));
    CHECK(check_semiring_axioms(side_a).pass());
    CHECK(check_semiring_axioms(side_b).pass());
    const bool same = finite_semiring_isomorphic(side_a, side_b);
    MESSAGE("stalk comparison at ", mask_to_string(t, prime), ": ",
            std::string(same ? "isomorphic" : "not isomorphic"), " (", side_a.size(), " vs ",
            side_b.size(), " elements)");
  }
}

TEST_CASE("comparison morphism phi") {
  std::vector<Ideal<IntegerRing>> nums;
  for (long a : {1L, 2L, 3L, 4L, 6L, 9L}) nums.push_back(u_R(Z, Int(a)));
  auto rep = comparison_phi_check(Z, 10, Int(6), Int(5), nums);
  for (const auto& v : rep.violations) MESSAGE(v.rule, " @ ", v.witness);
  CHECK(rep.pass());

  // the generic-point kernel is nontrivial: at least ten witnesses
  std::vector<Ideal<IntegerRing>> samples;
  for (long a = 1; a <= 12; ++a) samples.push_back(u_R(Z, Int(a)));
  CHECK(comparison_kernel_at_generic_point(Z, samples, 10).pass());

  // over a field the comparison is injective on the two classes
  RationalField Q;
  auto data = localize_at_prime(Q, zero_ideal(Q));
  CHECK(dvr_eq(data.zeta(data.t_local.zero()), DvrIdeal{true, 0}));
  CHECK(dvr_eq(data.zeta(data.t_local.one()), DvrIdeal{false, 0}));
  CHECK_FALSE(dvr_eq(data.zeta(data.t_local.zero()), data.zeta(data.t_local.one())));
}
