// Command-line front end: every verification and computation as a
// deterministic, scriptable command with JSON output.
//
// Exit codes: 0 = all checks pass, 1 = a theorem check failed (witnesses in
// the JSON), 2 = usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trop/basic_open.hpp"
#include "trop/comparison.hpp"
#include "trop/correspondence.hpp"
#include "trop/gluing.hpp"
#include "trop/ideal_theory.hpp"
#include "trop/localize.hpp"
#include "trop/parse.hpp"
#include "trop/presheaf.hpp"
#include "trop/rng.hpp"
#include "trop/spectrum.hpp"

using nlohmann::json;
using namespace trop;

namespace {

struct RingSpec {
  enum class Kind { kZ, kQ, kZmod, kGF, kQPoly, kGFPoly, kQMulti } kind;
  long n = 0;                      // modulus for Z/n, GF(p)
  std::vector<std::string> vars;   // polynomial variables
};

RingSpec parse_ring_spec(const std::string& s) {
  RingSpec spec{RingSpec::Kind::kZ, 0, {}};
  auto var_list = [](const std::string& inside) {
    std::vector<std::string> vars;
    std::string cur;
    for (char c : inside) {
      if (c == ',') {
        vars.push_back(cur);
        cur.clear();
      } else if (!isspace(static_cast<unsigned char>(c))) {
        cur += c;
      }
    }
    if (!cur.empty()) vars.push_back(cur);
    return vars;
  };
  if (s == "Z") return spec;
  if (s == "Q") return {RingSpec::Kind::kQ, 0, {}};
  if (s.rfind("Z/", 0) == 0) return {RingSpec::Kind::kZmod, std::stol(s.substr(2)), {}};
  if (s.rfind("GF(", 0) == 0) {
    auto close = s.find(')');
    if (close == std::string::npos) throw std::invalid_argument("bad ring spec: " + s);
    long p = std::stol(s.substr(3, close - 3));
    std::string rest = s.substr(close + 1);
    if (rest.empty()) return {RingSpec::Kind::kGF, p, {}};
    if (rest.front() == '[' && rest.back() == ']')
      return {RingSpec::Kind::kGFPoly, p, var_list(rest.substr(1, rest.size() - 2))};
    throw std::invalid_argument("bad ring spec: " + s);
  }
  if (s.rfind("Q[", 0) == 0 && s.back() == ']') {
    auto vars = var_list(s.substr(2, s.size() - 3));
    if (vars.size() == 1) return {RingSpec::Kind::kQPoly, 0, vars};
    return {RingSpec::Kind::kQMulti, 0, vars};
  }
  throw std::invalid_argument("unsupported ring spec: " + s);
}

std::string resolve_fixture(const std::string& path) {
  std::ifstream probe(path);
  if (probe.good()) return path;
  if (const char* dir = std::getenv("TROP_FIXTURES")) {
    std::string alt = std::string(dir) + "/" + path;
    std::ifstream probe2(alt);
    if (probe2.good()) return alt;
  }
  throw std::invalid_argument("cannot open file: " + path);
}

json load_json(const std::string& path) {
  std::ifstream in(resolve_fixture(path));
  json j;
  in >> j;
  return j;
}

json report_json(const Report& rep) { return rep.to_json(); }

void emit(const json& j, bool human) {
  if (!human) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  if (j.contains("subject"))
    std::cout << j["subject"].get<std::string>() << ": "
              << (j["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
  if (j.contains("witnesses"))
    for (const auto& w : j["witnesses"])
      std::cout << "  violated: " << w["rule"].get<std::string>() << " @ "
                << w["witness"].get<std::string>() << "\n";
  if (j.contains("notes"))
    for (const auto& n : j["notes"]) std::cout << "  note: " << n.get<std::string>() << "\n";
  if (!j.contains("subject")) std::cout << j.dump(2) << "\n";
}

int finish(const Report& rep, bool human) {
  emit(report_json(rep), human);
  return rep.pass() ? 0 : 1;
}

// ---- fgid-table ----

template <class R>
json fgid_table_json(const R& ring, const std::vector<typename R::value_type>& elems) {
  FgIdSemiring<R> t{ring};
  json out;
  out["semiring"] = t.name();
  json entries = json::array();
  for (const auto& a : elems)
    for (const auto& b : elems) {
      const auto ia = u_R(ring, a), ib = u_R(ring, b);
      entries.push_back({{"a", ring.to_string(a)},
                         {"b", ring.to_string(b)},
                         {"u(a)", ideal_to_string(ia)},
                         {"u(b)", ideal_to_string(ib)},
                         {"sum", ideal_to_string(t.add(ia, ib))},
                         {"product", ideal_to_string(t.mul(ia, ib))}});
    }
  out["entries"] = entries;
  return out;
}

int cmd_fgid_table(const std::string& ring_str, long max, bool human) {
  const auto spec = parse_ring_spec(ring_str);
  json out;
  switch (spec.kind) {
    case RingSpec::Kind::kZ: {
      IntegerRing z;
      std::vector<Int> elems;
      for (long a = 0; a <= max; ++a) elems.emplace_back(a);
      out = fgid_table_json(z, elems);
      break;
    }
    case RingSpec::Kind::kZmod: {
      ModularRing zn((Int(spec.n)));
      std::vector<Int> elems;
      for (long a = 0; a < std::min(max + 1, spec.n); ++a) elems.emplace_back(a);
      out = fgid_table_json(zn, elems);
      break;
    }
    case RingSpec::Kind::kQ: {
      RationalField q;
      std::vector<Rat> elems;
      for (long a = 0; a <= std::min(max, 3L); ++a) elems.push_back(Rat(a));
      out = fgid_table_json(q, elems);
      break;
    }
    case RingSpec::Kind::kGFPoly: {
      ModularRing gf((Int(spec.n)));
      GFPolyRing ring(gf, spec.vars.at(0));
      std::vector<GFPolyRing::value_type> elems = {ring.zero()};
      for (long d = 0; d <= max; ++d)
        for (const auto& f : monic_polys_of_degree(ring, d)) elems.push_back(f);
      out = fgid_table_json(ring, elems);
      break;
    }
    default:
      throw std::invalid_argument("fgid-table supports Z, Q, Z/n and GF(p)[x]");
  }
  emit(out, human);
  return 0;
}

// ---- speck ----

template <class R>
json speck_json(const R& ring, long bound) {
  const auto spec = speck_truncated(ring, bound);
  json out;
  out["ring"] = ring.name();
  out["bound"] = bound;
  json pts = json::array();
  for (const auto& pt : spec.points)
    pts.push_back({{"prime", ideal_to_string(pt.prime)},
                   {"handle", handle_to_string(pt.handle)}});
  out["points"] = pts;
  return out;
}

int cmd_speck(const std::string& ring_str, long bound, bool human) {
  const auto spec = parse_ring_spec(ring_str);
  json out;
  switch (spec.kind) {
    case RingSpec::Kind::kZ:
      out = speck_json(IntegerRing{}, bound);
      break;
    case RingSpec::Kind::kQ:
      out = speck_json(RationalField{}, bound);
      break;
    case RingSpec::Kind::kZmod:
      out = speck_json(ModularRing(Int(spec.n)), bound);
      break;
    case RingSpec::Kind::kQPoly:
      out = speck_json(QPolyRing(RationalField{}, spec.vars.at(0)), bound);
      break;
    case RingSpec::Kind::kGFPoly:
      out = speck_json(GFPolyRing(ModularRing(Int(spec.n)), spec.vars.at(0)), bound);
      break;
    default:
      throw std::invalid_argument("speck does not support this backend");
  }
  emit(out, human);
  return 0;
}

// ---- verify correspondence ----

template <class R>
void correspondence_trials(const R& ring, Rng& rng, long trials,
                           const std::function<typename R::value_type(Rng&)>& random_elem,
                           Report& rep) {
  for (long t = 0; t < trials; ++t) {
    std::vector<typename R::value_type> gens;
    const int k = 1 + static_cast<int>(rng.below(3));
    for (int i = 0; i < k; ++i) gens.push_back(random_elem(rng));
    const auto i = make_ideal(ring, gens);
    const auto h = correspondence_forward(i);
    rep.require(ideal_eq(correspondence_backward(h), i), "backward(forward(L)) = L",
                ideal_to_string(i));
    const auto j = make_ideal(ring, {random_elem(rng)});
    const bool ring_side = ideal_contains(i, j);
    const bool handle_side = handle_member(h, j);
    rep.require(ring_side == handle_side, "order preserved both ways",
                ideal_to_string(i) + " vs " + ideal_to_string(j));
    // k-ideal product against the ring product, with distributivity
    const auto h2 = correspondence_forward(j);
    rep.require(handle_eq(kideal_product(h, h2), correspondence_forward(ideal_product(i, j))),
                "handle product = ring product", ideal_to_string(i) + " x " + ideal_to_string(j));
    const auto h3 = correspondence_forward(make_ideal(ring, {random_elem(rng)}));
    rep.require(handle_eq(kideal_product(h, handle_sum(h2, h3)),
                          handle_sum(kideal_product(h, h2), kideal_product(h, h3))),
                "distributivity over handle sums", ideal_to_string(i));
  }
}

int cmd_verify_correspondence(const std::string& ring_str, long trials, std::uint64_t seed,
                              bool human) {
  const auto spec = parse_ring_spec(ring_str);
  Rng rng(seed);
  Report rep;
  rep.subject = "correspondence:" + ring_str;
  rep.note("seed: " + std::to_string(seed));
  rep.note("trials: " + std::to_string(trials));
  switch (spec.kind) {
    case RingSpec::Kind::kZ: {
      IntegerRing z;
      correspondence_trials<IntegerRing>(
          z, rng, trials, [](Rng& r) { return Int(r.range(-60, 60)); }, rep);
      // submodule round-trips in Z^2
      for (long t = 0; t < trials; ++t) {
        auto m = make_submodule(z, 2,
                                {{Int(rng.range(-50, 50)), Int(rng.range(-50, 50))},
                                 {Int(rng.range(-50, 50)), Int(rng.range(-50, 50))}});
        auto h = correspondence_forward(m);
        rep.require(submodule_eq(correspondence_backward(h), m),
                    "submodule backward(forward(L)) = L", submodule_to_string(m));
        auto n = make_submodule(z, 2, {{Int(rng.range(-50, 50)), Int(rng.range(-50, 50))}});
        rep.require(submodule_contains(m, n) == handle_member(h, n),
                    "submodule order preserved", submodule_to_string(n));
      }
      break;
    }
    case RingSpec::Kind::kGFPoly: {
      ModularRing gf((Int(spec.n)));
      GFPolyRing ring(gf, spec.vars.at(0));
      correspondence_trials<GFPolyRing>(
          ring, rng, trials,
          [&ring, p = spec.n](Rng& r) {
            GFPolyRing::value_type f;
            const long deg = static_cast<long>(r.below(5));
            for (long i = 0; i <= deg; ++i) f.push_back(Int(r.below(static_cast<std::uint64_t>(p))));
            return ring.normalized(std::move(f));
          },
          rep);
      break;
    }
    case RingSpec::Kind::kQPoly: {
      QPolyRing ring(RationalField{}, spec.vars.at(0));
      correspondence_trials<QPolyRing>(
          ring, rng, trials,
          [&ring](Rng& r) {
            QPolyRing::value_type f;
            const long deg = static_cast<long>(r.below(5));
            for (long i = 0; i <= deg; ++i) f.push_back(Rat(r.range(-5, 5)));
            return ring.normalized(std::move(f));
          },
          rep);
      break;
    }
    case RingSpec::Kind::kQMulti: {
      MPolyRing ring(spec.vars);
      correspondence_trials<MPolyRing>(
          ring, rng, trials,
          [&ring](Rng& r) {
            MPoly f = ring.zero();
            for (int terms = 0; terms < 3; ++terms) {
              Monomial m = ring.unit_monomial();
              long total = 0;
              for (size_t v = 0; v < ring.nvars(); ++v) {
                m.e[v] = static_cast<int>(r.below(3));
                total += m.e[v];
              }
              if (total > 4) continue;
              f = ring.add(f, ring.term(m, Rat(r.range(-4, 4))));
            }
            return f;
          },
          rep);
      break;
    }
    default:
      throw std::invalid_argument("verify correspondence supports Z, GF(p)[x], Q[x], Q[x,..]");
  }
  return finish(rep, human);
}

// ---- verify stalks ----

int cmd_verify_stalks(const std::string& site_path, bool human) {
  const json j = load_json(site_path);
  FiniteSite site = FiniteSite::from_json(j);
  Report rep;
  rep.subject = "stalks:" + site_path;
  rep.absorb(site.validate());
  std::map<OpenMask, int> mods;
  for (const auto& entry : j.at("rings")) {
    OpenMask u = 0;
    for (const auto& p : entry.at("open")) u |= OpenMask(1) << p.get<int>();
    mods[u] = entry.at("zmod").get<int>();
  }
  auto p = zmod_chain_presheaf(site, mods);
  rep.absorb(check_presheaf_functorial(p));
  auto q = phi_presheaf(p);
  rep.absorb(check_presheaf_functorial(q));
  for (int x = 0; x < site.points(); ++x) rep.absorb(stalk_commutation_check(q, x));
  auto s = sheafify(q);
  rep.absorb(sheaf_axioms_check(s));
  rep.absorb(sheaf_restrictions_are_morphisms(s, q));
  return finish(rep, human);
}

// ---- trop (gluing) ----

int cmd_trop(const std::string& gluing_path, long bound, bool human) {
  const auto g = GluingData::from_json(load_json(gluing_path));
  if (g.charts.size() == 1) {
    const auto spec = parse_ring_spec(g.charts[0].ring);
    Report rep;
    switch (spec.kind) {
      case RingSpec::Kind::kZ:
        rep = trop_single_chart_consistency(IntegerRing{}, bound);
        break;
      case RingSpec::Kind::kGFPoly:
        rep = trop_single_chart_consistency(
            GFPolyRing(ModularRing(Int(spec.n)), spec.vars.at(0)), bound);
        break;
      case RingSpec::Kind::kQPoly:
        rep = trop_single_chart_consistency(QPolyRing(RationalField{}, spec.vars.at(0)), bound);
        break;
      default:
        throw std::invalid_argument("unsupported single-chart backend");
    }
    return finish(rep, human);
  }
  if (g.charts.size() != 2 || g.transitions.empty() ||
      g.transitions[0].substitution != "inverse")
    throw std::invalid_argument("supported gluings: single chart, or two charts with the "
                                "inverse transition");
  const auto s0 = parse_ring_spec(g.charts[0].ring);
  const auto s1 = parse_ring_spec(g.charts[1].ring);
  json out;
  Report rep;
  if (s0.kind == RingSpec::Kind::kGFPoly && s1.kind == RingSpec::Kind::kGFPoly &&
      s0.n == s1.n) {
    ModularRing gf((Int(s0.n)));
    auto t = trop_p1(GFPolyRing(gf, s0.vars.at(0)), GFPolyRing(gf, s1.vars.at(0)), bound);
    rep = t.report;
    rep.note("glued points: " + std::to_string(trop_p1_point_count(t)));
  } else if (s0.kind == RingSpec::Kind::kQPoly && s1.kind == RingSpec::Kind::kQPoly) {
    auto t = trop_p1(QPolyRing(RationalField{}, s0.vars.at(0)),
                     QPolyRing(RationalField{}, s1.vars.at(0)), bound);
    rep = t.report;
    rep.note("glued points: " + std::to_string(trop_p1_point_count(t)));
  } else {
    throw std::invalid_argument("charts must both be GF(p)[v] or both Q[v]");
  }
  return finish(rep, human);
}

// ---- compare-sheaves ----

int cmd_compare_sheaves(const std::string& ring_str, const std::string& opens, long bound,
                        bool human) {
  const auto spec = parse_ring_spec(ring_str);
  if (spec.kind != RingSpec::Kind::kZ)
    throw std::invalid_argument("compare-sheaves runs on the Z backend");
  IntegerRing z;
  Report rep;
  if (opens == "generic") {
    std::vector<Ideal<IntegerRing>> samples;
    for (long a = 1; a <= 15; ++a) samples.push_back(u_R(z, Int(a)));
    rep = comparison_kernel_at_generic_point(z, samples, 10);
  } else if (opens.rfind("basic:", 0) == 0) {
    const auto comma = opens.find(',');
    const long f = std::stol(opens.substr(6, comma - 6));
    const long g = comma == std::string::npos ? 5 : std::stol(opens.substr(comma + 1));
    std::vector<Ideal<IntegerRing>> nums;
    for (long a : {1L, 2L, 3L, 4L, 6L, 9L, 12L}) nums.push_back(u_R(z, Int(a)));
    rep = comparison_phi_check(z, bound, Int(f), Int(g), nums);
  } else {
    throw std::invalid_argument("--opens takes 'generic' or 'basic:<f>[,<g>]'");
  }
  return finish(rep, human);
}

// ---- radical / primary / localize ----

int cmd_radical(const std::string& ring_str, const std::string& gens_str, bool human) {
  const auto spec = parse_ring_spec(ring_str);
  json out;
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
      if (c == ';') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
    return parts;
  };
  auto pack = [&](auto ring, auto gens) {
    const auto i = make_ideal(ring, gens);
    json raw = json::array();
    for (const auto& g : gens) raw.push_back(ring.to_string(g));
    out = {{"ring", ring.name()},
           {"generators", raw},
           {"canonical", ideal_to_string(i)},
           {"radical", ideal_to_string(ideal_radical(i))},
           {"is_radical", ideal_eq(i, ideal_radical(i))}};
  };
  if (spec.kind == RingSpec::Kind::kZ) {
    IntegerRing z;
    std::vector<Int> gens;
    for (const auto& p : split(gens_str)) gens.push_back(z.parse(p));
    pack(z, gens);
  } else if (spec.kind == RingSpec::Kind::kQPoly) {
    QPolyRing ring(RationalField{}, spec.vars.at(0));
    std::vector<QPolyRing::value_type> gens;
    for (const auto& p : split(gens_str)) gens.push_back(parse_upoly(ring, p));
    pack(ring, gens);
  } else if (spec.kind == RingSpec::Kind::kZmod) {
    ModularRing zn((Int(spec.n)));
    std::vector<Int> gens;
    for (const auto& p : split(gens_str)) gens.push_back(zn.parse(p));
    pack(zn, gens);
  } else {
    throw std::invalid_argument("radical supports Z, Z/n and Q[x]");
  }
  emit(out, human);
  return 0;
}

int cmd_primary(const std::string& ring_str, const std::string& gens_str, bool human) {
  const auto spec = parse_ring_spec(ring_str);
  json out;
  if (spec.kind == RingSpec::Kind::kZ) {
    IntegerRing z;
    const auto i = make_ideal(z, {z.parse(gens_str)});
    out = {{"ring", z.name()},
           {"ideal", ideal_to_string(i)},
           {"primary", ideal_is_primary(i)},
           {"prime", ideal_is_prime(i)}};
  } else if (spec.kind == RingSpec::Kind::kQPoly) {
    QPolyRing ring(RationalField{}, spec.vars.at(0));
    const auto i = principal_ideal(ring, parse_upoly(ring, gens_str));
    out = {{"ring", ring.name()},
           {"ideal", ideal_to_string(i)},
           {"primary", ideal_is_primary(i)},
           {"prime", ideal_is_prime(i)}};
  } else if (spec.kind == RingSpec::Kind::kZmod) {
    ModularRing zn((Int(spec.n)));
    const auto i = make_ideal(zn, {zn.parse(gens_str)});
    out = {{"ring", zn.name()},
           {"ideal", ideal_to_string(i)},
           {"primary", ideal_is_primary(i)},
           {"prime", ideal_is_prime(i)}};
  } else {
    throw std::invalid_argument("primary supports Z, Z/n and Q[x]");
  }
  emit(out, human);
  return 0;
}

int cmd_localize(const std::string& ring_str, const std::string& prime_str, bool human) {
  const auto spec = parse_ring_spec(ring_str);
  if (spec.kind != RingSpec::Kind::kZ)
    throw std::invalid_argument("localize supports the Z backend");
  IntegerRing z;
  const auto p = make_ideal(z, {z.parse(prime_str)});
  auto data = localize_at_prime(z, p);
  json out;
  out["point"] = data.point_name();
  out["local_semiring"] = data.t_local.name();
  json samples = json::array();
  for (long a : {1L, 2L, 3L, 6L, 10L}) {
    auto x = data.t_local.make(Int(a), Int(1));
    samples.push_back({{"fraction", data.t_local.to_string(x)},
                       {"zeta", dvr_to_string(data.zeta(x))}});
  }
  out["zeta_samples"] = samples;
  Report rep;
  rep.subject = "localize";
  std::vector<LocalizedData<IntegerRing>::frac> fr;
  for (long a = 1; a <= 25; ++a) {
    for (long b = 1; b <= 6; ++b) {
      if (data.prime && divides(*data.prime, Int(b))) continue;
      fr.push_back(data.t_local.make(Int(a), Int(b)));
    }
  }
  rep.absorb(zeta_kernel_probe(data, fr, 3));
  rep.absorb(residue_semifield_check(residue_semifield(data), fr));
  out["checks"] = report_json(rep);
  emit(out, human);
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropicalization of commutative algebra: fgId/fgMod functors, correspondences, "
               "spectra, and sheaf-level checks over exact backends"};
  app.require_subcommand(1);
  bool human = false;
  app.add_flag("--human", human, "print a human-readable summary instead of JSON");

  std::string ring = "Z", semiring_file, site_file, gluing_file, opens = "generic";
  std::string ideal_gens = "0", prime = "0";
  long bound = 10, max = 6;
  long trials = 200;
  std::uint64_t seed = 12345;

  auto* fgid_cmd = app.add_subcommand("fgid-table", "sample the fgId operations of a backend");
  fgid_cmd->add_option("--ring", ring)->required();
  fgid_cmd->add_option("--max", max);

  auto* speck_cmd = app.add_subcommand("speck", "truncated prime spectrum of fgId(R)");
  speck_cmd->add_option("--ring", ring)->required();
  speck_cmd->add_option("--bound", bound);

  auto* verify = app.add_subcommand("verify", "theorem checks");
  verify->require_subcommand(1);
  auto* vrc = verify->add_subcommand("retraction-cong", "retraction between k-ideals and congruences");
  vrc->add_option("--semiring", semiring_file)->required();
  auto* vri = verify->add_subcommand("retraction-ideal", "retraction between ideals and k-ideals");
  vri->add_option("--semiring", semiring_file)->required();
  auto* vc = verify->add_subcommand("correspondence", "correspondence round-trips and products");
  vc->add_option("--ring", ring)->required();
  vc->add_option("--trials", trials);
  vc->add_option("--seed", seed);
  auto* vs = verify->add_subcommand("stalks", "stalk commutation and sheafification on a site");
  vs->add_option("--site", site_file)->required();

  auto* trop_cmd = app.add_subcommand("trop", "tropicalize a glued scheme");
  trop_cmd->add_option("--gluing", gluing_file)->required();
  trop_cmd->add_option("--bound", bound);

  auto* cmp_cmd = app.add_subcommand("compare-sheaves", "the comparison morphism and its kernel");
  cmp_cmd->add_option("--ring", ring)->required();
  cmp_cmd->add_option("--opens", opens);
  cmp_cmd->add_option("--bound", bound);

  auto* rad_cmd = app.add_subcommand("radical", "radical of a f.g. ideal");
  rad_cmd->add_option("--ring", ring)->required();
  rad_cmd->add_option("--ideal", ideal_gens)->required();

  auto* prim_cmd = app.add_subcommand("primary", "primary/prime status of a principal ideal");
  prim_cmd->add_option("--ring", ring)->required();
  prim_cmd->add_option("--ideal", ideal_gens)->required();

  auto* loc_cmd = app.add_subcommand("localize", "localize at a prime with zeta and kappa checks");
  loc_cmd->add_option("--ring", ring)->required();
  loc_cmd->add_option("--prime", prime)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (fgid_cmd->parsed()) return cmd_fgid_table(ring, max, human);
    if (speck_cmd->parsed()) return cmd_speck(ring, bound, human);
    if (vrc->parsed() || vri->parsed()) {
      const auto s = FiniteSemiring::from_json(load_json(semiring_file));
      const Report rep =
          vrc->parsed() ? verify_retraction_congruences(s) : verify_retraction_ideals(s);
      json out = report_json(rep);
      out["theorem"] = rep.subject;
      out["semiring"] = s.name();
      emit(out, human);
      return rep.pass() ? 0 : 1;
    }
    if (vc->parsed()) return cmd_verify_correspondence(ring, trials, seed, human);
    if (vs->parsed()) return cmd_verify_stalks(site_file, human);
    if (trop_cmd->parsed()) return cmd_trop(gluing_file, bound, human);
    if (cmp_cmd->parsed()) return cmd_compare_sheaves(ring, opens, bound, human);
    if (rad_cmd->parsed()) return cmd_radical(ring, ideal_gens, human);
    if (prim_cmd->parsed()) return cmd_primary(ring, ideal_gens, human);
    if (loc_cmd->parsed()) return cmd_localize(ring, prime, human);
  } catch (const std::exception& e) {
    json err = {{"error", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  }
  return 2;
}
