#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixture_corpus.hpp"
#include "trop/ideal_theory.hpp"

using namespace trop;

namespace {
Mask mask_of(const FiniteSemiring& s, const std::vector<std::string>& labels) {
  Mask m = 0;
  for (const auto& l : labels) m = mask_with(m, s.parse(l));
  return m;
}
}  // namespace

TEST_CASE("ideal enumeration on the named examples") {
  auto b = boolean_table();
  auto ib = enumerate_ideals(b);
  REQUIRE(ib.size() == 2);  // {0} and B

  auto c3 = chain_semiring(3);
  auto ic = enumerate_ideals(c3);
  REQUIRE(ic.size() == 3);
  CHECK(std::find(ic.begin(), ic.end(), mask_of(c3, {"0", "a1"})) != ic.end());

  auto zs = trop_fixtures::zero_semiring();
  CHECK(enumerate_ideals(zs).size() == 1);

  FiniteSemiring big(std::vector<std::string>(9, "x"),
                     std::vector<std::vector<int>>(9, std::vector<int>(9, 0)),
                     std::vector<std::vector<int>>(9, std::vector<int>(9, 0)), 0, 0);
  CHECK_THROWS_AS(enumerate_ideals(big), std::runtime_error);
}

TEST_CASE("k-ideals are the downward closed ideals on idempotent fixtures") {
  for (const auto& s : trop_fixtures::corpus()) {
    if (!is_idempotent(s)) continue;
    INFO(s.name());
    for (Mask m : enumerate_ideals(s))
      CHECK(is_subtractive_mask(s, m) == is_downward_closed_mask(s, m));
  }
  auto c3 = chain_semiring(3);
  auto ks = enumerate_k_ideals(c3);
  REQUIRE(ks.size() == 3);  // {0}, {0,a}, S
}

TEST_CASE("subtractive closure") {
  auto c3 = chain_semiring(3);
  // closure of a k-ideal is itself
  for (Mask m : enumerate_k_ideals(c3)) CHECK(subtractive_closure_mask(c3, m) == m);
  // closure of {a} is {0,a}
  CHECK(subtractive_closure_mask(c3, Mask(1) << c3.parse("a1")) == mask_of(c3, {"0", "a1"}));
  // fixpoint terminates within carrier-size iterations: closure of closure
  for (const auto& s : trop_fixtures::corpus())
    for (Mask m : enumerate_ideals(s)) {
      Mask c = subtractive_closure_mask(s, m);
      CHECK(subtractive_closure_mask(s, c) == c);
    }
}

TEST_CASE("congruence enumeration and generation") {
  auto b = boolean_table();
  auto cb = enumerate_congruences(b);
  REQUIRE(cb.size() == 2);  // identity and total

  auto c3 = chain_semiring(3);
  auto cc = enumerate_congruences(c3);
  // identity partition is always there
  Congruence ident{{0, 1, 2}};
  CHECK(std::find(cc.begin(), cc.end(), ident) != cc.end());
  // {{0},{a,1}} is stable for max/min
  Congruence glue_top{{0, 1, 1}};
  CHECK(is_congruence(c3, glue_top));
  CHECK(std::find(cc.begin(), cc.end(), glue_top) != cc.end());

  CHECK(congruence_generated(c3, {}) == ident);
  CHECK(congruence_generated(b, {{b.one(), b.zero()}}).classes() == 1);
  // (a,0) on the chain forces {{0,a},{1}}
  Congruence got = congruence_generated(c3, {{c3.parse("a1"), c3.zero()}});
  CHECK(got == Congruence{{0, 0, 1}});
}

TEST_CASE("maps c, r, j on the named examples") {
  auto b = boolean_table();
  auto c3 = chain_semiring(3);

  CHECK(map_c(b, Mask(1) << b.zero()).classes() == 2);  // identity
  CHECK(map_c(b, mask_of(b, {"0", "1"})).classes() == 1);  // total
  CHECK(map_c(c3, mask_of(c3, {"0", "a1"})) == Congruence{{0, 0, 1}});

  CHECK(map_r(b, Congruence{{0, 1}}) == Mask(1) << b.zero());
  CHECK(map_r(b, Congruence{{0, 0}}) == mask_of(b, {"0", "1"}));
  CHECK(map_r(c3, Congruence{{0, 0, 1}}) == mask_of(c3, {"0", "a1"}));

  CHECK(map_j(c3, Mask(1) << c3.parse("a1")) == mask_of(c3, {"0", "a1"}));
}

TEST_CASE("retraction theorems hold on the whole corpus") {
  for (const auto& s : trop_fixtures::corpus()) {
    INFO(s.name());
    auto r1 = verify_retraction_congruences(s);
    for (const auto& v : r1.violations) MESSAGE(v.rule, " @ ", v.witness);
    CHECK(r1.pass());
    auto r2 = verify_retraction_ideals(s);
    for (const auto& v : r2.violations) MESSAGE(v.rule, " @ ", v.witness);
    CHECK(r2.pass());
  }
}

TEST_CASE("boolean c is a bijection onto the congruence lattice") {
  auto b = boolean_table();
  auto ks = enumerate_k_ideals(b);
  auto cs = enumerate_congruences(b);
  REQUIRE(ks.size() == cs.size());
  std::vector<Congruence> images;
  for (Mask m : ks) images.push_back(map_c(b, m));
  for (const auto& y : cs) CHECK(std::find(images.begin(), images.end(), y) != images.end());
}

TEST_CASE("quotient semirings") {
  auto b = boolean_table();
  auto c3 = chain_semiring(3);

  // S/{0} is S
  auto q1 = quotient_by_kideal(c3, Mask(1) << c3.zero());
  CHECK(q1.size() == c3.size());
  CHECK(check_semiring_axioms(q1).pass());

  // B/B is the one-element semiring
  auto q2 = quotient_by_kideal(b, mask_of(b, {"0", "1"}));
  CHECK(q2.size() == 1);

  // chain/{0,a} has two elements
  auto q3 = quotient_by_kideal(c3, mask_of(c3, {"0", "a1"}));
  CHECK(q3.size() == 2);
  CHECK(check_semiring_axioms(q3).pass());

  // every quotient of every fixture by every congruence is again a semiring
  for (const auto& s : trop_fixtures::corpus()) {
    if (s.size() > 5) continue;
    for (const auto& y : enumerate_congruences(s))
      CHECK(check_semiring_axioms(quotient_semiring(s, y)).pass());
  }
}

TEST_CASE("quotient k-ideal bijection") {
  auto b = boolean_table();
  auto c3 = chain_semiring(3);

  CHECK(quotient_kideal_bijection_check(c3, Mask(1) << c3.zero()).pass());
  auto rep = quotient_kideal_bijection_check(c3, mask_of(c3, {"0", "a1"}));
  CHECK(rep.pass());
  CHECK(quotient_kideal_bijection_check(b, mask_of(b, {"0", "1"})).pass());
  for (const auto& s : trop_fixtures::corpus()) {
    INFO(s.name());
    for (Mask m : enumerate_k_ideals(s)) CHECK(quotient_kideal_bijection_check(s, m).pass());
  }
}

TEST_CASE("prime ideal predicate") {
  auto c3 = chain_semiring(3);
  CHECK(is_prime_ideal_mask(c3, mask_of(c3, {"0", "a1"})));  // complement {1} closed
  CHECK(is_prime_ideal_mask(c3, Mask(1) << c3.zero()));      // mul = min: complement closed
  CHECK_FALSE(is_prime_ideal_mask(c3, mask_of(c3, {"0", "a1", "1"})));  // improper

  auto z4 = trop_fixtures::zmod_table(4);
  CHECK_FALSE(is_prime_ideal_mask(z4, Mask(1) << z4.zero()));  // 2*2 = 0
}

TEST_CASE("compact elements and LO-semigroups") {
  auto c3 = chain_semiring(3);
  PosetSpace p(3, [&](int a, int b) { return c3.leq(a, b); },
               PosetSpace::Topology::kCoarseLower);
  auto compacts = compact_elements(p, [&](int a, int b) { return c3.add(a, b); });
  CHECK(compacts.size() == 3);  // every element of a finite lattice

  CHECK(is_lo_semigroup(chain_semiring(4)).pass());
  CHECK(is_lo_semigroup(boolean_table()).pass());
  CHECK_FALSE(is_lo_semigroup(trop_fixtures::maxplus_fragment(3)).pass());

  // Id_k of the chain, as a semiring in its own right, is a LO-semigroup
  auto idk = kideal_semiring(chain_semiring(3));
  CHECK(check_semiring_axioms(idk).pass());
  CHECK(is_lo_semigroup(idk).pass());
}

TEST_CASE("poset topology closedness criterion") {
  // chain 0 < 1 < 2 with the coarse lower topology: closed sets are up-sets
  PosetSpace chain(3, [](int a, int b) { return a <= b; }, PosetSpace::Topology::kCoarseLower);
  CHECK(chain.is_closed({false, true, true}));
  CHECK(chain.is_closed({false, false, true}));
  CHECK(chain.is_closed({true, true, true}));
  CHECK(chain.is_closed({false, false, false}));
  CHECK_FALSE(chain.is_closed({true, false, false}));  // down-set, not closed here
  CHECK_FALSE(chain.is_closed({false, true, false}));

  PosetSpace chain_u(3, [](int a, int b) { return a <= b; }, PosetSpace::Topology::kCoarseUpper);
  CHECK(chain_u.is_closed({true, false, false}));
  CHECK_FALSE(chain_u.is_closed({false, false, true}));
}
