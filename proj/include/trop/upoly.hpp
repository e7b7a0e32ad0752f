#pragma once

/// Univariate polynomial rings K[x] over an exact field, plus the two derived
/// backends the correspondence machinery needs: K[x] localized at the
/// variable (Laurent-style elements x^k * f with f(0) != 0) and quotient
/// rings K[x]/(m).
///
/// Polynomials are dense coefficient vectors, low degree first, with no
/// trailing zero coefficients; the zero polynomial is the empty vector.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trop/fields.hpp"
#include "trop/numeric.hpp"

namespace trop {

template <class F>
class UPolyRing {
 public:
  using coeff_type = typename F::value_type;
  using value_type = std::vector<coeff_type>;

  explicit UPolyRing(F coeff, std::string var = "x")
      : coeff_(std::move(coeff)), var_(std::move(var)) {
    if (!coeff_.is_field()) throw std::invalid_argument("coefficients must form a field");
  }

  const F& coeff() const { return coeff_; }
  const std::string& var() const { return var_; }
  std::string name() const { return coeff_.name() + "[" + var_ + "]"; }
  bool is_field() const { return false; }
  bool is_domain() const { return true; }

  long deg(const value_type& f) const { return static_cast<long>(f.size()) - 1; }

  value_type normalized(value_type f) const {
    while (!f.empty() && coeff_.is_zero(f.back())) f.pop_back();
    return f;
  }

  value_type zero() const { return {}; }
  value_type one() const { return {coeff_.one()}; }
  value_type constant(const coeff_type& c) const { return normalized({c}); }
  value_type variable() const { return {coeff_.zero(), coeff_.one()}; }

  value_type monomial(const coeff_type& c, long k) const {
    if (coeff_.is_zero(c)) return {};
    value_type f(static_cast<size_t>(k) + 1, coeff_.zero());
    f.back() = c;
    return f;
  }

  value_type add(const value_type& a, const value_type& b) const {
    value_type r(std::max(a.size(), b.size()), coeff_.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = coeff_.add(r[i], b[i]);
    return normalized(std::move(r));
  }

  value_type neg(const value_type& a) const {
    value_type r = a;
    for (auto& c : r) c = coeff_.neg(c);
    return r;
  }

  value_type sub(const value_type& a, const value_type& b) const { return add(a, neg(b)); }

  value_type mul(const value_type& a, const value_type& b) const {
    if (a.empty() || b.empty()) return {};
    value_type r(a.size() + b.size() - 1, coeff_.zero());
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j)
        r[i + j] = coeff_.add(r[i + j], coeff_.mul(a[i], b[j]));
    return normalized(std::move(r));
  }

  value_type scale(const coeff_type& c, const value_type& a) const {
    value_type r = a;
    for (auto& x : r) x = coeff_.mul(c, x);
    return normalized(std::move(r));
  }

  value_type pow(value_type a, unsigned long k) const {
    value_type r = one();
    while (k) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }

  bool eq(const value_type& a, const value_type& b) const {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
      if (!coeff_.eq(a[i], b[i])) return false;
    return true;
  }

  bool is_zero(const value_type& a) const { return a.empty(); }

  coeff_type leading(const value_type& a) const {
    if (a.empty()) throw std::invalid_argument("leading coefficient of 0");
    return a.back();
  }

  value_type monic(const value_type& a) const {
    if (a.empty()) return a;
    return scale(coeff_.inv(a.back()), a);
  }

  std::pair<value_type, value_type> divmod(const value_type& a, const value_type& b) const {
    if (b.empty()) throw std::invalid_argument("division by zero polynomial");
    value_type rem = a;
    value_type quo(a.size() > b.size() ? a.size() - b.size() + 1 : 1, coeff_.zero());
    const coeff_type lead_inv = coeff_.inv(b.back());
    while (rem.size() >= b.size() && !rem.empty()) {
      const size_t shift = rem.size() - b.size();
      const coeff_type q = coeff_.mul(rem.back(), lead_inv);
      quo[shift] = q;
      for (size_t i = 0; i < b.size(); ++i)
        rem[shift + i] = coeff_.sub(rem[shift + i], coeff_.mul(q, b[i]));
      rem = normalized(std::move(rem));
    }
    return {normalized(std::move(quo)), rem};
  }

  value_type mod(const value_type& a, const value_type& b) const { return divmod(a, b).second; }

  bool divides(const value_type& d, const value_type& a) const {
    if (d.empty()) return a.empty();
    return mod(a, d).empty();
  }

  /// Monic gcd.
  value_type gcd(value_type a, value_type b) const {
    while (!b.empty()) {
      value_type r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  value_type derivative(const value_type& a) const {
    if (a.size() <= 1) return {};
    value_type r(a.size() - 1, coeff_.zero());
    for (size_t i = 1; i < a.size(); ++i) {
      coeff_type k = coeff_.zero();
      for (size_t t = 0; t < i; ++t) k = coeff_.add(k, coeff_.one());  // i * 1, char-safe
      r[i - 1] = coeff_.mul(k, a[i]);
    }
    return normalized(std::move(r));
  }

  coeff_type eval(const value_type& a, const coeff_type& x) const {
    coeff_type acc = coeff_.zero();
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = coeff_.add(coeff_.mul(acc, x), *it);
    return acc;
  }

  /// f(g): substitution.
  value_type compose(const value_type& f, const value_type& g) const {
    value_type acc = zero();
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = add(mul(acc, g), constant(*it));
    return acc;
  }

  std::string to_string(const value_type& a) const {
    if (a.empty()) return "0";
    std::string out;
    for (long i = deg(a); i >= 0; --i) {
      const auto& c = a[static_cast<size_t>(i)];
      if (coeff_.is_zero(c)) continue;
      std::string cs = coeff_.to_string(c);
      if (!out.empty()) {
        if (!cs.empty() && cs[0] == '-') {
          out += " - ";
          cs = cs.substr(1);
        } else {
          out += " + ";
        }
      }
      if (i == 0) {
        out += cs;
      } else {
        if (cs != "1") out += cs + "*";
        out += var_;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  F coeff_;
  std::string var_;
};

using QPolyRing = UPolyRing<RationalField>;
using GFPolyRing = UPolyRing<ModularRing>;

// ---- irreducibility and factorization over finite prime fields ----

/// All monic polynomials of exact degree d over GF(p), in lexicographic
/// coefficient order.
inline std::vector<GFPolyRing::value_type> monic_polys_of_degree(const GFPolyRing& ring, long d) {
  const Int p = ring.coeff().modulus();
  std::vector<GFPolyRing::value_type> out;
  GFPolyRing::value_type f(static_cast<size_t>(d) + 1, 0);
  f.back() = 1;
  while (true) {
    out.push_back(f);
    long i = 0;
    while (i < d && f[static_cast<size_t>(i)] == p - 1) {
      f[static_cast<size_t>(i)] = 0;
      ++i;
    }
    if (i == d) break;
    f[static_cast<size_t>(i)] += 1;
  }
  return out;
}

inline bool is_irreducible(const GFPolyRing& ring, const GFPolyRing::value_type& f) {
  const long d = ring.deg(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  for (long e = 1; e <= d / 2; ++e)
    for (const auto& g : monic_polys_of_degree(ring, e))
      if (ring.divides(g, f)) return false;
  return true;
}

inline std::vector<GFPolyRing::value_type> monic_irreducibles_up_to(const GFPolyRing& ring,
                                                                    long max_deg) {
  std::vector<GFPolyRing::value_type> out;
  for (long d = 1; d <= max_deg; ++d)
    for (auto& f : monic_polys_of_degree(ring, d))
      if (is_irreducible(ring, f)) out.push_back(std::move(f));
  return out;
}

/// Factors a nonzero polynomial over GF(p) into monic irreducibles by trial
/// division (desk scale only).
inline std::vector<std::pair<GFPolyRing::value_type, unsigned>> factorize_gf(
    const GFPolyRing& ring, GFPolyRing::value_type f) {
  if (ring.is_zero(f)) throw std::invalid_argument("factorize(0)");
  std::vector<std::pair<GFPolyRing::value_type, unsigned>> fac;
  f = ring.monic(f);
  long d = 1;
  while (ring.deg(f) > 0) {
    bool split = false;
    for (const auto& g : monic_polys_of_degree(ring, d)) {
      if (ring.deg(f) >= d && ring.divides(g, f) && is_irreducible(ring, g)) {
        unsigned e = 0;
        while (ring.divides(g, f)) {
          f = ring.divmod(f, g).first;
          ++e;
        }
        fac.emplace_back(g, e);
        split = true;
      }
      if (ring.deg(f) == 0) break;
    }
    if (!split) ++d;
    if (d > ring.deg(f) && ring.deg(f) > 0) {
      fac.emplace_back(ring.monic(f), 1);  // remaining factor is irreducible
      break;
    }
  }
  return fac;
}

/// Product of distinct irreducible factors.  Char-0 fields use f/gcd(f,f');
/// finite fields go through the factorization to stay correct for p-th powers.
template <class F>
typename UPolyRing<F>::value_type squarefree_part(const UPolyRing<F>& ring,
                                                  const typename UPolyRing<F>::value_type& f) {
  if (ring.is_zero(f)) return f;
  if (ring.deg(f) == 0) return ring.one();
  if constexpr (std::is_same_v<F, ModularRing>) {
    auto sq = ring.one();
    for (const auto& [g, e] : factorize_gf(ring, f)) sq = ring.mul(sq, g);
    return sq;
  } else {
    auto d = ring.derivative(f);
    if (ring.is_zero(d)) return ring.one();
    return ring.monic(ring.divmod(f, ring.gcd(f, d)).first);
  }
}

// ---- K[x] localized at the variable ----

/// Elements are x^k * f with f(0) != 0, k in Z; the zero element is (0, 0).
template <class F>
struct LaurentValue {
  std::vector<typename F::value_type> unit_part;  // f with nonzero constant term
  long xexp = 0;
};

template <class F>
class LaurentRing {
 public:
  using base_ring = UPolyRing<F>;
  using value_type = LaurentValue<F>;

  explicit LaurentRing(UPolyRing<F> base) : base_(std::move(base)) {}

  const UPolyRing<F>& base() const { return base_; }
  std::string name() const { return base_.name() + "_" + base_.var(); }
  bool is_field() const { return false; }
  bool is_domain() const { return true; }

  value_type from_poly(typename base_ring::value_type f, long xexp = 0) const {
    if (base_.is_zero(f)) return {{}, 0};
    while (base_.coeff().is_zero(f.front())) {  // shift x factors into the exponent
      f.erase(f.begin());
      ++xexp;
    }
    return {std::move(f), xexp};
  }

  value_type zero() const { return {{}, 0}; }
  value_type one() const { return {base_.one(), 0}; }
  bool is_zero(const value_type& a) const { return a.unit_part.empty(); }

  value_type add(const value_type& a, const value_type& b) const {
    if (is_zero(a)) return b;
    if (is_zero(b)) return a;
    const long k = std::min(a.xexp, b.xexp);
    auto fa = base_.mul(a.unit_part, base_.monomial(base_.coeff().one(), a.xexp - k));
    auto fb = base_.mul(b.unit_part, base_.monomial(base_.coeff().one(), b.xexp - k));
    return from_poly(base_.add(fa, fb), k);
  }

  value_type neg(const value_type& a) const { return {base_.neg(a.unit_part), a.xexp}; }
  value_type sub(const value_type& a, const value_type& b) const { return add(a, neg(b)); }

  value_type mul(const value_type& a, const value_type& b) const {
    if (is_zero(a) || is_zero(b)) return zero();
    return {base_.mul(a.unit_part, b.unit_part), a.xexp + b.xexp};
  }

  bool eq(const value_type& a, const value_type& b) const {
    return a.xexp == b.xexp && base_.eq(a.unit_part, b.unit_part);
  }

  std::string to_string(const value_type& a) const {
    if (is_zero(a)) return "0";
    std::string s = "(" + base_.to_string(a.unit_part) + ")";
    if (a.xexp != 0) s += "*" + base_.var() + "^" + std::to_string(a.xexp);
    return s;
  }

 private:
  UPolyRing<F> base_;
};

// ---- K[x]/(m) ----

template <class F>
class QuotientUPolyRing {
 public:
  using base_ring = UPolyRing<F>;
  using value_type = typename base_ring::value_type;  // reduced representative

  QuotientUPolyRing(UPolyRing<F> base, value_type modulus)
      : base_(std::move(base)), m_(base_.monic(std::move(modulus))) {
    if (base_.deg(m_) < 1) throw std::invalid_argument("modulus must have degree >= 1");
  }

  const UPolyRing<F>& base() const { return base_; }
  const value_type& modulus() const { return m_; }
  std::string name() const { return base_.name() + "/(" + base_.to_string(m_) + ")"; }
  bool is_field() const { return false; }  // assume composite modulus for our catalogue
  bool is_domain() const { return false; }

  value_type reduce(const value_type& f) const { return base_.mod(f, m_); }

  value_type zero() const { return base_.zero(); }
  value_type one() const { return base_.one(); }
  value_type add(const value_type& a, const value_type& b) const { return reduce(base_.add(a, b)); }
  value_type sub(const value_type& a, const value_type& b) const { return reduce(base_.sub(a, b)); }
  value_type neg(const value_type& a) const { return reduce(base_.neg(a)); }
  value_type mul(const value_type& a, const value_type& b) const { return reduce(base_.mul(a, b)); }
  bool eq(const value_type& a, const value_type& b) const { return base_.eq(reduce(a), reduce(b)); }
  bool is_zero(const value_type& a) const { return base_.is_zero(reduce(a)); }

  std::string to_string(const value_type& a) const { return base_.to_string(reduce(a)); }

 private:
  UPolyRing<F> base_;
  value_type m_;
};

}  // namespace trop
