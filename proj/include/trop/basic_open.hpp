#pragma once

/// Structure-sheaf sections on basic opens of Spec_k(fgId(R)) for a PID R:
/// T_f with canonical fraction forms, the restriction maps T -> T_f ->
/// T_{fg}, and the semimodule sheaf N~ given on D_k(f) by N_f.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trop/fraction_semiring.hpp"
#include "trop/report.hpp"
#include "trop/submodule.hpp"

namespace trop {

/// O(D_k(f)) = T_f; for f = 0 the open is empty and the section semiring is
/// the one-element semiring, modelled by a collapsed wrapper.
template <class R>
struct BasicOpenSections {
  std::optional<IdealFractionSemiring<R>> semiring;  // nullopt: one-element semiring

  bool collapsed() const { return !semiring.has_value(); }
};

template <class R>
BasicOpenSections<R> structure_sections_on_basic_open(const R& ring,
                                                      const typename R::value_type& f) {
  if (ring.is_zero(f)) return {std::nullopt};
  return {IdealFractionSemiring<R>::powers_of(ring, f)};
}

/// T -> T_f.
template <class R>
typename IdealFractionSemiring<R>::value_type restrict_to_basic_open(
    const IdealFractionSemiring<R>& tf, const Ideal<R>& alpha) {
  return tf.from_ideal(alpha);
}

/// T_f -> T_{fg}: a/f^n -> a g^n / (fg)^n.
template <class R>
typename IdealFractionSemiring<R>::value_type restrict_between_basic_opens(
    const IdealFractionSemiring<R>& tf, const IdealFractionSemiring<R>& tfg,
    const typename IdealFractionSemiring<R>::value_type& x) {
  const R& ring = tf.ring();
  // recover the exponent n with den | f^n; n = number of pivot divisions
  auto den = x.den;
  long n = 0;
  while (!ring.eq(den, pid_assoc(ring, ring.one()))) {
    den = pid_div(ring, den, pid_gcd(ring, den, tf.pivot()));
    ++n;
    if (n > 64) throw std::logic_error("denominator is not a divisor of a pivot power");
  }
  auto fn = ring.one();
  for (long i = 0; i < n; ++i) fn = ring.mul(fn, tf.pivot());
  // x = num * (f^n / den) / f^n
  auto lifted_num = ring.mul(x.num, pid_div(ring, fn, x.den));
  auto gn = ring.one();
  const auto g = pid_div(ring, tfg.pivot(), pid_gcd(ring, tfg.pivot(), tf.pivot()));
  auto fgn = ring.one();
  for (long i = 0; i < n; ++i) {
    gn = ring.mul(gn, g);
    fgn = ring.mul(fgn, tfg.pivot());
  }
  return tfg.make(ring.mul(lifted_num, gn), fgn);
}

/// The triangle T -> T_f -> T_{fg} against the direct T -> T_{fg}, sampled.
template <class R>
Report basic_open_restriction_consistency(const R& ring, const typename R::value_type& f,
                                          const typename R::value_type& g,
                                          const std::vector<Ideal<R>>& samples) {
  Report rep;
  rep.subject = "basic-open-restrictions";
  const auto tf = IdealFractionSemiring<R>::powers_of(ring, f);
  const auto tfg = IdealFractionSemiring<R>::powers_of(ring, ring.mul(f, g));
  for (const auto& a : samples) {
    const auto via = restrict_between_basic_opens(tf, tfg, restrict_to_basic_open(tf, a));
    const auto direct = restrict_to_basic_open(tfg, a);
    rep.require(tfg.eq(via, direct), "triangle commutes", ideal_to_string(a));
  }
  // restriction maps are semiring morphisms on the samples
  for (const auto& a : samples)
    for (const auto& b : samples) {
      const auto ra = restrict_to_basic_open(tf, a), rb = restrict_to_basic_open(tf, b);
      rep.require(tf.eq(restrict_to_basic_open(tf, ideal_sum(a, b)), tf.add(ra, rb)),
                  "restriction preserves sums", ideal_to_string(a) + ", " + ideal_to_string(b));
      rep.require(tf.eq(restrict_to_basic_open(tf, ideal_product(a, b)), tf.mul(ra, rb)),
                  "restriction preserves products",
                  ideal_to_string(a) + ", " + ideal_to_string(b));
    }
  return rep;
}

// ---- the semimodule sheaf N~ ----

/// A section of N~ on D_k(f): a fraction nu / f^exp of a submodule by a
/// power of f, canonical when no basis can be divided by f.
template <class R>
struct SubmoduleFraction {
  Submodule<R> num;
  long exp = 0;
};

template <class R>
class ModuleSheafOnBasicOpen {
 public:
  ModuleSheafOnBasicOpen(R ring, size_t ambient, typename R::value_type f)
      : ring_(std::move(ring)), ambient_(ambient), f_(pid_assoc(ring_, std::move(f))) {
    if (ring_.is_zero(f_)) throw std::invalid_argument("empty basic open");
  }

  const R& ring() const { return ring_; }
  const typename R::value_type& pivot() const { return f_; }

  SubmoduleFraction<R> make(Submodule<R> num, long exp) const {
    while (exp > 0) {
      // reduce when every basis entry is divisible by f
      bool divisible = !num.basis.empty();
      for (const auto& row : num.basis)
        for (const auto& x : row)
          if (!ring_.is_zero(x) && !pid_divides(ring_, f_, x)) divisible = false;
      if (num.basis.empty()) break;  // zero module: exponent is irrelevant
      if (!divisible) break;
      std::vector<std::vector<typename R::value_type>> rows;
      for (const auto& row : num.basis) {
        std::vector<typename R::value_type> nr;
        for (const auto& x : row)
          nr.push_back(ring_.is_zero(x) ? x : pid_div(ring_, x, f_));
        rows.push_back(std::move(nr));
      }
      num = make_submodule(ring_, ambient_, std::move(rows));
      --exp;
    }
    if (num.basis.empty()) exp = 0;
    return {std::move(num), exp};
  }

  SubmoduleFraction<R> from_submodule(const Submodule<R>& n) const { return make(n, 0); }

  bool eq(const SubmoduleFraction<R>& a, const SubmoduleFraction<R>& b) const {
    return a.exp == b.exp && submodule_eq(a.num, b.num);
  }

  SubmoduleFraction<R> add(const SubmoduleFraction<R>& a, const SubmoduleFraction<R>& b) const {
    // common denominator f^{max}: scale the smaller exponent up
    const long m = std::max(a.exp, b.exp);
    return make(submodule_sum(scale_up(a, m - a.exp).num, scale_up(b, m - b.exp).num), m);
  }

  /// Action of a T_f fraction alpha/f^k on a section.
  SubmoduleFraction<R> act(const typename IdealFractionSemiring<R>::value_type& s,
                           const SubmoduleFraction<R>& a) const {
    long k = 0;
    auto den = s.den;
    while (!ring_.eq(den, pid_assoc(ring_, ring_.one()))) {
      den = pid_div(ring_, den, pid_gcd(ring_, den, f_));
      ++k;
      if (k > 64) throw std::logic_error("denominator is not a power of the pivot");
    }
    auto fk = ring_.one();
    for (long i = 0; i < k; ++i) fk = ring_.mul(fk, f_);
    const auto lifted = ring_.mul(s.num, pid_div(ring_, fk, s.den));
    return make(module_action(principal_ideal(ring_, lifted), a.num), a.exp + k);
  }

  std::string to_string(const SubmoduleFraction<R>& a) const {
    std::string out = submodule_to_string(a.num);
    if (a.exp > 0) out += " / " + ring_.to_string(f_) + "^" + std::to_string(a.exp);
    return out;
  }

 private:
  SubmoduleFraction<R> scale_up(const SubmoduleFraction<R>& a, long by) const {
    auto scaled = a.num;
    auto fb = ring_.one();
    for (long i = 0; i < by; ++i) fb = ring_.mul(fb, f_);
    std::vector<std::vector<typename R::value_type>> rows;
    for (const auto& row : scaled.basis) {
      std::vector<typename R::value_type> nr;
      for (const auto& x : row) nr.push_back(ring_.mul(fb, x));
      rows.push_back(std::move(nr));
    }
    return {make_submodule(ring_, ambient_, std::move(rows)), a.exp + by};
  }

  R ring_;
  size_t ambient_;
  typename R::value_type f_;
};

/// Sampled verification of the N~ properties on D_k(f): localization
/// equality is respected, sections restrict compatibly to D_k(fg), and the
/// scalar-action square commutes.
template <class R>
Report module_sheaf_check(const R& ring, size_t ambient, const typename R::value_type& f,
                          const typename R::value_type& g,
                          const std::vector<Submodule<R>>& samples) {
  Report rep;
  rep.subject = "module-sheaf";
  ModuleSheafOnBasicOpen<R> nf(ring, ambient, f);
  ModuleSheafOnBasicOpen<R> nfg(ring, ambient, ring.mul(f, g));
  const auto tf = IdealFractionSemiring<R>::powers_of(ring, f);

  // localization equality: nu/f^n equals f*nu/f^{n+1}
  for (const auto& n : samples) {
    auto x = nf.make(n, 0);
    auto scaled = nf.make(module_action(principal_ideal(ring, f), n), 1);
    rep.require(nf.eq(x, scaled), "fractions identify f nu / f^{n+1} with nu / f^n",
                submodule_to_string(n));
  }
  // restriction compatibility: N_f -> N_{fg} commutes with from_submodule
  for (const auto& n : samples) {
    auto via = nfg.from_submodule(n);
    auto direct = nfg.make(n, 0);
    rep.require(nfg.eq(via, direct), "restriction agrees on honest submodules",
                submodule_to_string(n));
  }
  // scalar action compatibility square on samples
  for (const auto& n : samples) {
    const auto s = tf.make(ring.mul(f, ring.one()), f);  // f/f = 1 in T_f
    auto acted = nf.act(s, nf.from_submodule(n));
    rep.require(nf.eq(acted, nf.from_submodule(n)), "unit acts as identity",
                submodule_to_string(n));
    const auto two = tf.from_ideal(principal_ideal(ring, ring.add(ring.one(), ring.one())));
    auto lhs = nf.act(two, nf.from_submodule(n));
    auto rhs = nf.from_submodule(
        module_action(principal_ideal(ring, ring.add(ring.one(), ring.one())), n));
    rep.require(nf.eq(lhs, rhs), "action commutes with localization",
                submodule_to_string(n));
  }
  return rep;
}

}  // namespace trop
