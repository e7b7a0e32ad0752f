#pragma once

/// Sparse multivariate polynomials over Q with lex / grevlex term orders.
/// Terms are kept sorted, leading term first, under the ring's order.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trop/numeric.hpp"

namespace trop {

struct Monomial {
  std::vector<int> e;  // exponent per variable

  long total_degree() const {
    long d = 0;
    for (int x : e) d += x;
    return d;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
  return r;
}

inline bool mono_divides(const Monomial& d, const Monomial& a) {
  for (size_t i = 0; i < d.e.size(); ++i)
    if (d.e[i] > a.e[i]) return false;
  return true;
}

inline Monomial mono_div(const Monomial& a, const Monomial& d) {
  Monomial r = a;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] -= d.e[i];
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
  return r;
}

enum class MonomialOrder { kLex, kGrevlex };

/// Strict order: true when a > b.
inline bool mono_greater(const Monomial& a, const Monomial& b, MonomialOrder ord) {
  if (ord == MonomialOrder::kLex) {
    for (size_t i = 0; i < a.e.size(); ++i)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
  }
  const long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  for (size_t i = a.e.size(); i-- > 0;)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];  // grevlex tiebreak
  return false;
}

struct MPoly {
  std::vector<std::pair<Monomial, Rat>> terms;  // sorted descending, no zero coeffs
  bool is_zero() const { return terms.empty(); }
};

class MPolyRing {
 public:
  using value_type = MPoly;

  MPolyRing(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::kGrevlex)
      : vars_(std::move(vars)), order_(order) {
    if (vars_.empty()) throw std::invalid_argument("need at least one variable");
  }

  const std::vector<std::string>& vars() const { return vars_; }
  MonomialOrder order() const { return order_; }
  size_t nvars() const { return vars_.size(); }

  std::string name() const {
    std::string s = "Q[";
    for (size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
    return s + "]";
  }
  bool is_field() const { return false; }
  bool is_domain() const { return true; }

  Monomial unit_monomial() const { return {std::vector<int>(nvars(), 0)}; }

  MPoly zero() const { return {}; }
  MPoly one() const { return constant(Rat(1)); }
  MPoly constant(const Rat& c) const {
    if (c == 0) return {};
    return {{{unit_monomial(), c}}};
  }
  MPoly variable(size_t i) const {
    Monomial m = unit_monomial();
    m.e.at(i) = 1;
    return {{{m, Rat(1)}}};
  }
  MPoly term(const Monomial& m, const Rat& c) const {
    if (c == 0) return {};
    return {{{m, c}}};
  }

  MPoly normalized(std::vector<std::pair<Monomial, Rat>> terms) const {
    std::map<std::vector<int>, Rat> acc;
    for (auto& [m, c] : terms) acc[m.e] += c;
    std::vector<std::pair<Monomial, Rat>> out;
    for (auto& [e, c] : acc)
      if (c != 0) out.push_back({Monomial{e}, c});
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
      return mono_greater(x.first, y.first, order_);
    });
    return {std::move(out)};
  }

  MPoly add(const MPoly& a, const MPoly& b) const {
    auto t = a.terms;
    t.insert(t.end(), b.terms.begin(), b.terms.end());
    return normalized(std::move(t));
  }
  MPoly neg(const MPoly& a) const {
    MPoly r = a;
    for (auto& [m, c] : r.terms) c = -c;
    return r;
  }
  MPoly sub(const MPoly& a, const MPoly& b) const { return add(a, neg(b)); }

  MPoly mul(const MPoly& a, const MPoly& b) const {
    std::vector<std::pair<Monomial, Rat>> t;
    t.reserve(a.terms.size() * b.terms.size());
    for (const auto& [ma, ca] : a.terms)
      for (const auto& [mb, cb] : b.terms) t.push_back({mono_mul(ma, mb), ca * cb});
    return normalized(std::move(t));
  }

  MPoly scale(const Rat& c, const MPoly& a) const {
    if (c == 0) return {};
    MPoly r = a;
    for (auto& [m, x] : r.terms) x *= c;
    return r;
  }

  MPoly mul_term(const Monomial& m, const Rat& c, const MPoly& a) const {
    if (c == 0) return {};
    MPoly r = a;
    for (auto& [mm, x] : r.terms) {
      mm = mono_mul(mm, m);
      x *= c;
    }
    return r;  // multiplying by a monomial preserves the term order
  }

  MPoly pow(MPoly a, unsigned long k) const {
    MPoly r = one();
    while (k) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }

  bool eq(const MPoly& a, const MPoly& b) const {
    if (a.terms.size() != b.terms.size()) return false;
    for (size_t i = 0; i < a.terms.size(); ++i)
      if (!(a.terms[i].first == b.terms[i].first) || a.terms[i].second != b.terms[i].second)
        return false;
    return true;
  }
  bool is_zero(const MPoly& a) const { return a.terms.empty(); }

  const Monomial& leading_monomial(const MPoly& a) const {
    if (a.is_zero()) throw std::invalid_argument("leading term of 0");
    return a.terms.front().first;
  }
  const Rat& leading_coeff(const MPoly& a) const {
    if (a.is_zero()) throw std::invalid_argument("leading term of 0");
    return a.terms.front().second;
  }

  MPoly monic(const MPoly& a) const {
    if (a.is_zero()) return a;
    return scale(1 / leading_coeff(a), a);
  }

  long total_degree(const MPoly& a) const {
    long d = -1;
    for (const auto& [m, c] : a.terms) d = std::max(d, m.total_degree());
    return d;
  }

  std::string mono_to_string(const Monomial& m) const {
    std::string s;
    for (size_t i = 0; i < m.e.size(); ++i) {
      if (m.e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += vars_[i];
      if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
  }

  std::string to_string(const MPoly& a) const {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : a.terms) {
      std::string cs = rat_to_string(c);
      std::string ms = mono_to_string(m);
      if (!out.empty()) {
        if (cs[0] == '-') {
          out += " - ";
          cs = cs.substr(1);
        } else {
          out += " + ";
        }
      }
      if (ms.empty())
        out += cs;
      else if (cs == "1")
        out += ms;
      else if (cs == "-1" && out.empty())
        out += "-" + ms;
      else
        out += cs + "*" + ms;
    }
    return out;
  }

 private:
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

}  // namespace trop
