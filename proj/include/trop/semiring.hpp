#pragma once

/// Finite semirings as explicit operation tables, the axiom checker that
/// every fixture passes through, and the two built-in symbolic semirings
/// (Boolean and N^gcd).  Elements of a finite semiring are indices into the
/// carrier; all structure queries are exhaustive loops.

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "trop/numeric.hpp"
#include "trop/report.hpp"

namespace trop {

class FiniteSemiring {
 public:
  using value_type = int;

  FiniteSemiring(std::vector<std::string> labels, std::vector<std::vector<int>> add,
                 std::vector<std::vector<int>> mul, int zero, int one)
      : labels_(std::move(labels)),
        add_(std::move(add)),
        mul_(std::move(mul)),
        zero_(zero),
        one_(one) {
    const size_t n = labels_.size();
    if (n == 0) throw std::invalid_argument("empty carrier");
    auto check_table = [&](const std::vector<std::vector<int>>& t, const char* what) {
      if (t.size() != n) throw std::invalid_argument(std::string(what) + " table is ragged");
      for (const auto& row : t) {
        if (row.size() != n) throw std::invalid_argument(std::string(what) + " table is ragged");
        for (int v : row)
          if (v < 0 || v >= static_cast<int>(n))
            throw std::invalid_argument(std::string(what) + " table has an unknown entry");
      }
    };
    check_table(add_, "add");
    check_table(mul_, "mul");
    if (zero_ < 0 || zero_ >= static_cast<int>(n) || one_ < 0 || one_ >= static_cast<int>(n))
      throw std::invalid_argument("zero/one outside carrier");
  }

  size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int a) const { return labels_.at(static_cast<size_t>(a)); }
  std::string name() const { return name_.empty() ? "semiring(" + std::to_string(size()) + ")" : name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  int zero() const { return zero_; }
  int one() const { return one_; }
  int add(int a, int b) const { return add_.at(a).at(b); }
  int mul(int a, int b) const { return mul_.at(a).at(b); }
  bool eq(int a, int b) const { return a == b; }
  bool is_zero(int a) const { return a == zero_; }
  std::string to_string(int a) const { return label(a); }

  int parse(const std::string& s) const {
    for (size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == s) return static_cast<int>(i);
    throw std::invalid_argument("unknown element label '" + s + "'");
  }

  /// a <= b in the canonical order: a + b = b.
  bool leq(int a, int b) const { return add(a, b) == b; }

  static FiniteSemiring from_json(const nlohmann::json& j) {
    std::vector<std::string> labels = j.at("carrier").get<std::vector<std::string>>();
    auto index_of = [&](const std::string& s) {
      for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == s) return static_cast<int>(i);
      throw std::invalid_argument("unknown label '" + s + "' in semiring tables");
    };
    auto load_table = [&](const nlohmann::json& t) {
      std::vector<std::vector<int>> out;
      for (const auto& row : t) {
        std::vector<int> r;
        for (const auto& cell : row) r.push_back(index_of(cell.get<std::string>()));
        out.push_back(std::move(r));
      }
      return out;
    };
    FiniteSemiring s(labels, load_table(j.at("add")), load_table(j.at("mul")),
                     index_of(j.at("zero").get<std::string>()),
                     index_of(j.at("one").get<std::string>()));
    if (j.contains("name")) s.set_name(j.at("name").get<std::string>());
    return s;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["carrier"] = labels_;
    auto dump_table = [&](const std::vector<std::vector<int>>& t) {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& row : t) {
        nlohmann::json r = nlohmann::json::array();
        for (int v : row) r.push_back(label(v));
        rows.push_back(r);
      }
      return rows;
    };
    j["add"] = dump_table(add_);
    j["mul"] = dump_table(mul_);
    j["zero"] = label(zero_);
    j["one"] = label(one_);
    if (!name_.empty()) j["name"] = name_;
    return j;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> add_, mul_;
  int zero_, one_;
  std::string name_;
};

/// Checks every semiring axiom by exhaustive loops; the report names each
/// violated law with a witness triple.
inline Report check_semiring_axioms(const FiniteSemiring& s) {
  Report rep;
  rep.subject = "semiring-axioms";
  const int n = static_cast<int>(s.size());
  auto w1 = [&](int a) { return s.label(a); };
  auto w2 = [&](int a, int b) { return "(" + s.label(a) + ", " + s.label(b) + ")"; };
  auto w3 = [&](int a, int b, int c) {
    return "(" + s.label(a) + ", " + s.label(b) + ", " + s.label(c) + ")";
  };
  for (int a = 0; a < n; ++a) {
    if (s.add(s.zero(), a) != a) rep.fail("additive identity", w1(a));
    if (s.mul(s.one(), a) != a) rep.fail("multiplicative identity", w1(a));
    if (s.mul(s.zero(), a) != s.zero()) rep.fail("zero absorbs", w1(a));
    for (int b = 0; b < n; ++b) {
      if (s.add(a, b) != s.add(b, a)) rep.fail("add commutative", w2(a, b));
      if (s.mul(a, b) != s.mul(b, a)) rep.fail("mul commutative", w2(a, b));
      for (int c = 0; c < n; ++c) {
        if (s.add(s.add(a, b), c) != s.add(a, s.add(b, c))) rep.fail("add associative", w3(a, b, c));
        if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c))) rep.fail("mul associative", w3(a, b, c));
        if (s.mul(a, s.add(b, c)) != s.add(s.mul(a, b), s.mul(a, c)))
          rep.fail("distributivity", w3(a, b, c));
      }
    }
  }
  return rep;
}

inline bool is_idempotent(const FiniteSemiring& s) {
  for (int a = 0; a < static_cast<int>(s.size()); ++a)
    if (s.add(a, a) != a) return false;
  return true;
}

inline bool is_simple(const FiniteSemiring& s) {
  for (int a = 0; a < static_cast<int>(s.size()); ++a)
    if (s.add(a, s.one()) != s.one()) return false;
  return true;
}

/// Greatest lower bound of {a, b} under the canonical order, if one exists.
inline std::optional<int> natural_glb(const FiniteSemiring& s, int a, int b) {
  std::optional<int> best;
  for (int c = 0; c < static_cast<int>(s.size()); ++c) {
    if (!s.leq(c, a) || !s.leq(c, b)) continue;
    if (!best || s.leq(*best, c)) best = c;
  }
  if (!best) return std::nullopt;
  for (int c = 0; c < static_cast<int>(s.size()); ++c)
    if (s.leq(c, a) && s.leq(c, b) && !s.leq(c, *best)) return std::nullopt;
  return best;
}

/// Simple and every pair has a meet: the lattice-ordered semiring shape.
inline bool is_lo_semiring(const FiniteSemiring& s) {
  if (!is_simple(s)) return false;
  for (int a = 0; a < static_cast<int>(s.size()); ++a)
    for (int b = 0; b < static_cast<int>(s.size()); ++b)
      if (!natural_glb(s, a, b)) return false;
  return true;
}

inline std::vector<int> units_of(const FiniteSemiring& s) {
  std::vector<int> units;
  for (int a = 0; a < static_cast<int>(s.size()); ++a)
    for (int b = 0; b < static_cast<int>(s.size()); ++b)
      if (s.mul(a, b) == s.one()) {
        units.push_back(a);
        break;
      }
  return units;
}

struct LocalizedFiniteSemiring {
  FiniteSemiring table;
  std::vector<int> unit_map;  // x -> class of x/1
};

/// Localization of a finite semiring at a multiplicatively closed subset v:
/// classes of fractions s/v with s/v = s'/v' iff t v' s = t v s' for some t.
inline LocalizedFiniteSemiring localize_semiring_with_map(const FiniteSemiring& s,
                                                          std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (v.empty()) throw std::invalid_argument("localization set is empty");
  auto in_v = [&](int x) { return std::binary_search(v.begin(), v.end(), x); };
  if (!in_v(s.one())) throw std::invalid_argument("localization set must contain 1");
  for (int a : v)
    for (int b : v)
      if (!in_v(s.mul(a, b)))
        throw std::invalid_argument("localization set is not multiplicatively closed");

  struct Frac {
    int num, den;
  };
  std::vector<Frac> pairs;
  for (int a = 0; a < static_cast<int>(s.size()); ++a)
    for (int d : v) pairs.push_back({a, d});
  auto related = [&](const Frac& x, const Frac& y) {
    for (int t : v)
      if (s.mul(t, s.mul(y.den, x.num)) == s.mul(t, s.mul(x.den, y.num))) return true;
    return false;
  };
  // union-find over the raw pairs
  std::vector<int> parent(pairs.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (size_t i = 0; i < pairs.size(); ++i)
    for (size_t j = i + 1; j < pairs.size(); ++j)
      if (related(pairs[i], pairs[j])) parent[find(static_cast<int>(j))] = find(static_cast<int>(i));

  std::vector<int> reps;
  std::vector<int> class_of(pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i) {
    int r = find(static_cast<int>(i));
    auto it = std::find(reps.begin(), reps.end(), r);
    if (it == reps.end()) {
      class_of[i] = static_cast<int>(reps.size());
      reps.push_back(r);
    } else {
      class_of[i] = static_cast<int>(it - reps.begin());
    }
  }
  auto class_of_pair = [&](int num, int den) {
    for (size_t i = 0; i < pairs.size(); ++i)
      if (pairs[i].num == num && pairs[i].den == den) return class_of[i];
    throw std::logic_error("fraction class lookup failed");
  };

  const int m = static_cast<int>(reps.size());
  std::vector<std::string> labels(m);
  for (size_t i = 0; i < pairs.size(); ++i) {
    int c = class_of[i];
    if (labels[c].empty()) labels[c] = s.label(pairs[i].num) + "/" + s.label(pairs[i].den);
  }
  std::vector<std::vector<int>> add(m, std::vector<int>(m)), mul(m, std::vector<int>(m));
  std::vector<size_t> rep_pair(m);
  for (size_t i = 0; i < pairs.size(); ++i) rep_pair[class_of[i]] = i;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      const Frac &fx = pairs[rep_pair[x]], &fy = pairs[rep_pair[y]];
      add[x][y] = class_of_pair(s.add(s.mul(fy.den, fx.num), s.mul(fx.den, fy.num)),
                                s.mul(fx.den, fy.den));
      mul[x][y] = class_of_pair(s.mul(fx.num, fy.num), s.mul(fx.den, fy.den));
    }
  FiniteSemiring out(labels, add, mul, class_of_pair(s.zero(), s.one()),
                     class_of_pair(s.one(), s.one()));
  out.set_name(s.name() + " localized");
  std::vector<int> unit_map(s.size());
  for (int x = 0; x < static_cast<int>(s.size()); ++x) unit_map[x] = class_of_pair(x, s.one());
  return {std::move(out), std::move(unit_map)};
}

inline FiniteSemiring localize_semiring(const FiniteSemiring& s, std::vector<int> v) {
  return localize_semiring_with_map(s, std::move(v)).table;
}

/// Brute-force isomorphism test for small finite semirings.
inline bool finite_semiring_isomorphic(const FiniteSemiring& a, const FiniteSemiring& b) {
  if (a.size() != b.size()) return false;
  if (a.size() > 8) throw std::runtime_error("isomorphism search capped at 8 elements");
  std::vector<int> perm(a.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  do {
    if (perm[a.zero()] != b.zero() || perm[a.one()] != b.one()) continue;
    bool ok = true;
    for (int x = 0; x < static_cast<int>(a.size()) && ok; ++x)
      for (int y = 0; y < static_cast<int>(a.size()) && ok; ++y) {
        if (perm[a.add(x, y)] != b.add(perm[x], perm[y])) ok = false;
        if (perm[a.mul(x, y)] != b.mul(perm[x], perm[y])) ok = false;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// ---- symbolic semirings ----

struct BooleanSemiring {
  using value_type = int;  // 0 or 1
  std::string name() const { return "B"; }
  int zero() const { return 0; }
  int one() const { return 1; }
  int add(int a, int b) const { return a | b; }
  int mul(int a, int b) const { return a & b; }
  bool eq(int a, int b) const { return a == b; }
  bool is_zero(int a) const { return a == 0; }
  std::string to_string(int a) const { return a ? "1" : "0"; }
};

/// N with gcd as addition and integer product as multiplication; isomorphic
/// to fgId(Z) by <n> -> n.
struct NatGcdSemiring {
  using value_type = Int;
  std::string name() const { return "N^gcd"; }
  Int zero() const { return 0; }
  Int one() const { return 1; }
  Int add(const Int& a, const Int& b) const { return gcd_int(a, b); }
  Int mul(const Int& a, const Int& b) const { return a * b; }
  bool eq(const Int& a, const Int& b) const { return a == b; }
  bool is_zero(const Int& a) const { return a == 0; }
  std::string to_string(const Int& a) const { return a.get_str(); }
};

/// Canonical order a <= b iff a + b = b, for any semiring type.
template <class S>
bool natural_leq(const S& s, const typename S::value_type& a, const typename S::value_type& b) {
  return s.eq(s.add(a, b), b);
}

inline FiniteSemiring boolean_table() {
  FiniteSemiring s({"0", "1"}, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}, 0, 1);
  s.set_name("B");
  return s;
}

/// Max/min chain 0 < a1 < ... < 1 of the given size; + is max, * is min.
inline FiniteSemiring chain_semiring(int size) {
  if (size < 1) throw std::invalid_argument("chain size must be >= 1");
  std::vector<std::string> labels;
  for (int i = 0; i < size; ++i)
    labels.push_back(i == 0 ? "0" : (i == size - 1 ? "1" : "a" + std::to_string(i)));
  if (size == 1) labels = {"0"};
  std::vector<std::vector<int>> add(size, std::vector<int>(size)), mul(size, std::vector<int>(size));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      add[i][j] = std::max(i, j);
      mul[i][j] = std::min(i, j);
    }
  FiniteSemiring s(labels, add, mul, 0, size - 1);
  s.set_name("chain" + std::to_string(size));
  return s;
}

}  // namespace trop
