#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "fixture_corpus.hpp"
#include "trop/fraction_semiring.hpp"
#include "trop/integers.hpp"
#include "trop/rng.hpp"
#include "trop/semiring.hpp"

using namespace trop;

TEST_CASE("axiom checker accepts the whole corpus") {
  for (const auto& s : trop_fixtures::corpus()) {
    auto rep = check_semiring_axioms(s);
    INFO(s.name());
    CHECK(rep.pass());
  }
}

TEST_CASE("axiom checker reports a distributivity witness") {
  // chain {0,a,1} with mul(a,a) patched to 1: a*(a+1) = a but a*a + a*1 = 1
  FiniteSemiring bad({"0", "a", "1"}, {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}},
                     {{0, 0, 0}, {0, 2, 1}, {0, 1, 2}}, 0, 2);
  auto rep = check_semiring_axioms(bad);
  REQUIRE_FALSE(rep.pass());
  bool found = false;
  for (const auto& v : rep.violations) {
    CHECK(v.rule == "distributivity");
    found = true;
  }
  CHECK(found);
}

TEST_CASE("malformed tables are structural errors") {
  CHECK_THROWS_AS(FiniteSemiring({"0", "1"}, {{0, 1}}, {{0, 0}, {0, 1}}, 0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(FiniteSemiring({"0", "1"}, {{0, 7}, {1, 1}}, {{0, 0}, {0, 1}}, 0, 1),
                  std::invalid_argument);
  nlohmann::json j = boolean_table().to_json();
  j["zero"] = "nope";
  CHECK_THROWS_AS(FiniteSemiring::from_json(j), std::invalid_argument);
}

TEST_CASE("idempotent and simple predicates") {
  CHECK(is_idempotent(boolean_table()));
  CHECK(is_simple(boolean_table()));
  CHECK_FALSE(is_idempotent(trop_fixtures::saturating_naturals(3)));  // 1+1=2
  CHECK(is_idempotent(trop_fixtures::maxplus_fragment(3)));
  CHECK_FALSE(is_simple(trop_fixtures::maxplus_fragment(3)));  // 2 max 0 = 2 != 0

  // simple implies idempotent, exhaustively over the corpus
  for (const auto& s : trop_fixtures::corpus())
    if (is_simple(s)) CHECK(is_idempotent(s));
}

TEST_CASE("N^gcd is idempotent and simple on samples") {
  NatGcdSemiring N;
  Rng rng(3);
  for (int t = 0; t < 500; ++t) {
    Int a = rng.range(0, 10000);
    CHECK(N.add(a, a) == a);
    CHECK(N.add(a, N.one()) == N.one());
  }
  // natural order is reverse divisibility with 0 bottom and 1 top
  CHECK(natural_leq(N, Int(12), Int(4)));
  CHECK_FALSE(natural_leq(N, Int(4), Int(12)));
  for (int t = 0; t < 200; ++t) {
    Int a = rng.range(0, 300), b = rng.range(0, 300);
    CHECK(natural_leq(N, a, b) == (b == 0 ? a == 0 : divides(b, a)));
    CHECK(natural_leq(N, Int(0), a));
    CHECK(natural_leq(N, a, Int(1)));
  }
}

TEST_CASE("natural order is a partial order on every idempotent fixture") {
  for (const auto& s : trop_fixtures::corpus()) {
    if (!is_idempotent(s)) continue;
    const int n = static_cast<int>(s.size());
    for (int a = 0; a < n; ++a) {
      CHECK(s.leq(a, a));
      for (int b = 0; b < n; ++b) {
        if (s.leq(a, b) && s.leq(b, a)) CHECK(a == b);
        for (int c = 0; c < n; ++c)
          if (s.leq(a, b) && s.leq(b, c)) CHECK(s.leq(a, c));
      }
    }
  }
}

TEST_CASE("element domain errors") {
  CHECK_THROWS_AS(boolean_table().parse("2"), std::invalid_argument);
}

TEST_CASE("lo-semiring recognition") {
  CHECK(is_lo_semiring(boolean_table()));
  CHECK(is_lo_semiring(chain_semiring(3)));
  CHECK(is_lo_semiring(trop_fixtures::product(boolean_table(), boolean_table(), "diamond")));
  CHECK_FALSE(is_lo_semiring(trop_fixtures::maxplus_fragment(3)));  // not simple

  // a raw add-table whose induced order has two maximal common lower bounds,
  // so the glb search comes up empty
  FiniteSemiring broken({"0", "c1", "c2", "a", "b", "1"},
                        {{0, 1, 2, 3, 4, 5},
                         {1, 1, 3, 3, 4, 5},
                         {2, 3, 2, 3, 4, 5},
                         {3, 3, 3, 3, 5, 5},
                         {4, 4, 4, 5, 4, 5},
                         {5, 5, 5, 5, 5, 5}},
                        {{0, 0, 0, 0, 0, 0},
                         {0, 1, 0, 1, 1, 1},
                         {0, 0, 2, 2, 2, 2},
                         {0, 1, 2, 3, 3, 3},
                         {0, 1, 2, 3, 4, 4},
                         {0, 1, 2, 3, 4, 5}},
                        0, 5);
  CHECK_FALSE(natural_glb(broken, broken.parse("a"), broken.parse("b")).has_value());
  CHECK_FALSE(is_lo_semiring(broken));
}

TEST_CASE("units enumeration") {
  auto units = units_of(boolean_table());
  REQUIRE(units.size() == 1);
  CHECK(units[0] == boolean_table().one());
  CHECK(units_of(trop_fixtures::zmod_table(4)).size() == 2);  // 1 and 3
}

TEST_CASE("localization of finite semirings") {
  // identity localization at {1}
  auto b = boolean_table();
  auto lb = localize_semiring(b, {b.one()});
  CHECK(lb.size() == b.size());
  CHECK(check_semiring_axioms(lb).pass());

  // chain {0,a,1} at {a,1} collapses a with 1
  auto c3 = chain_semiring(3);
  auto lc = localize_semiring(c3, {c3.parse("a1"), c3.one()});
  CHECK(lc.size() == 2);
  CHECK(check_semiring_axioms(lc).pass());
  CHECK(is_idempotent(lc));

  CHECK_THROWS_AS(localize_semiring(c3, {}), std::invalid_argument);
  CHECK_THROWS_AS(localize_semiring(c3, {c3.zero()}), std::invalid_argument);  // misses 1

  // localization preserves idempotence for every closed subset of every
  // idempotent fixture
  for (const auto& s : trop_fixtures::corpus()) {
    if (!is_idempotent(s) || s.size() > 4) continue;
    const int n = static_cast<int>(s.size());
    for (std::uint32_t sub = 1; sub < (1u << n); ++sub) {
      std::vector<int> v;
      for (int i = 0; i < n; ++i)
        if ((sub >> i) & 1) v.push_back(i);
      bool closed = std::find(v.begin(), v.end(), s.one()) != v.end();
      for (int a : v)
        for (int b2 : v)
          if (std::find(v.begin(), v.end(), s.mul(a, b2)) == v.end()) closed = false;
      if (!closed) continue;
      auto loc = localize_semiring(s, v);
      CHECK(check_semiring_axioms(loc).pass());
      CHECK(is_idempotent(loc));
    }
  }
}

TEST_CASE("localizations of N^gcd") {
  IntegerRing Z;
  // at {1}: an isomorphic copy
  auto at1 = IdealFractionSemiring<IntegerRing>::powers_of(Z, Int(1));
  NatGcdSemiring N;
  Rng rng(17);
  for (int t = 0; t < 300; ++t) {
    Int a = rng.range(0, 500), b = rng.range(0, 500);
    auto fa = at1.make(a, Int(1)), fb = at1.make(b, Int(1));
    CHECK(at1.add(fa, fb).num == N.add(a, b));
    CHECK(at1.mul(fa, fb).num == N.mul(a, b));
    CHECK(at1.add(fa, fb).den == 1);
  }

  // at all nonzero elements: the positive-rational gcd semifield
  auto frac = IdealFractionSemiring<IntegerRing>::all_nonzero(Z);
  auto half = frac.make(Int(1), Int(2));
  auto third = frac.make(Int(1), Int(3));
  auto s = frac.add(half, third);
  CHECK(s.num == 1);
  CHECK(s.den == 6);  // gcd(3,2)/6
  CHECK(frac.eq(frac.mul(frac.make(Int(2), Int(3)), frac.make(Int(3), Int(2))), frac.one()));
  for (int t = 0; t < 200; ++t) {
    auto x = frac.make(Int(rng.range(0, 60)), Int(rng.range(1, 60)));
    CHECK(frac.eq(frac.add(x, x), x));  // idempotent
    if (!frac.is_zero(x)) CHECK(frac.eq(frac.mul(x, frac.inv(x)), frac.one()));
  }
  CHECK(frac.den_allowed(Int(7)));
  CHECK_THROWS_AS(frac.make(Int(1), Int(0)), std::invalid_argument);
}

TEST_CASE("fixture JSON files round-trip") {
  for (const auto& s : trop_fixtures::corpus()) {
    const std::string path = std::string(TROP_FIXTURE_DIR) + "/" + s.name() + ".json";
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), path);
    nlohmann::json j;
    in >> j;
    auto loaded = FiniteSemiring::from_json(j);
    REQUIRE(loaded.size() == s.size());
    for (int a = 0; a < static_cast<int>(s.size()); ++a)
      for (int b = 0; b < static_cast<int>(s.size()); ++b) {
        CHECK(loaded.add(a, b) == s.add(a, b));
        CHECK(loaded.mul(a, b) == s.mul(a, b));
      }
  }
}
