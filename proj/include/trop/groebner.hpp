#pragma once

/// Buchberger's algorithm with the coprime-lcm criterion, plus full reduction
/// to the unique reduced Groebner basis. Canonical ideal forms and membership
/// for Q[x1..xn] both come through here.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "trop/mpoly.hpp"

namespace trop {

/// Remainder of f under multivariate division by basis (every term of the
/// result is reducible by no leading term of the basis).
inline MPoly normal_form(const MPolyRing& ring, MPoly f, const std::vector<MPoly>& basis) {
  MPoly rem = ring.zero();
  while (!f.is_zero()) {
    bool reduced = false;
    const Monomial& lm = ring.leading_monomial(f);
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      const Monomial& lmg = ring.leading_monomial(g);
      if (mono_divides(lmg, lm)) {
        const Rat q = ring.leading_coeff(f) / ring.leading_coeff(g);
        f = ring.sub(f, ring.mul_term(mono_div(lm, lmg), q, g));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem = ring.add(rem, ring.term(lm, ring.leading_coeff(f)));
      f.terms.erase(f.terms.begin());
    }
  }
  return rem;
}

inline MPoly s_polynomial(const MPolyRing& ring, const MPoly& f, const MPoly& g) {
  const Monomial l = mono_lcm(ring.leading_monomial(f), ring.leading_monomial(g));
  MPoly a = ring.mul_term(mono_div(l, ring.leading_monomial(f)), 1 / ring.leading_coeff(f), f);
  MPoly b = ring.mul_term(mono_div(l, ring.leading_monomial(g)), 1 / ring.leading_coeff(g), g);
  return ring.sub(a, b);
}

inline std::vector<MPoly> buchberger(const MPolyRing& ring, std::vector<MPoly> gens) {
  // inter-reduce the input first; redundant generators are common when the
  // ideal arrives as a sum or product of others
  std::vector<MPoly> basis;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    MPoly r = normal_form(ring, g, basis);
    if (!r.is_zero()) basis.push_back(ring.monic(r));
  }
  if (basis.empty()) return {};

  std::set<std::pair<size_t, size_t>> pending;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pending.insert({i, j});

  auto lcm_of = [&](size_t i, size_t j) {
    return mono_lcm(ring.leading_monomial(basis[i]), ring.leading_monomial(basis[j]));
  };

  while (!pending.empty()) {
    // normal selection strategy: smallest lcm degree first
    auto best = pending.begin();
    long best_deg = lcm_of(best->first, best->second).total_degree();
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      const long d = lcm_of(it->first, it->second).total_degree();
      if (d < best_deg) {
        best = it;
        best_deg = d;
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);

    const Monomial &mi = ring.leading_monomial(basis[i]), &mj = ring.leading_monomial(basis[j]);
    const Monomial l = mono_lcm(mi, mj);
    // Buchberger's first criterion: coprime leading monomials reduce to zero
    if (mono_mul(mi, mj) == l) continue;
    // chain criterion: if some k divides the lcm and both pairs with k were
    // already treated, this S-polynomial is redundant
    bool chained = false;
    for (size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == i || k == j) continue;
      if (!mono_divides(ring.leading_monomial(basis[k]), l)) continue;
      const auto pik = std::minmax(i, k), pjk = std::minmax(j, k);
      if (!pending.count({pik.first, pik.second}) && !pending.count({pjk.first, pjk.second}))
        chained = true;
    }
    if (chained) continue;

    MPoly s = normal_form(ring, s_polynomial(ring, basis[i], basis[j]), basis);
    if (s.is_zero()) continue;
    basis.push_back(ring.monic(s));
    for (size_t k = 0; k + 1 < basis.size(); ++k) pending.insert({k, basis.size() - 1});
  }
  return basis;
}

/// Unique reduced Groebner basis: monic elements, no leading term divisible by
/// another's, all tails fully reduced, sorted by decreasing leading monomial.
inline std::vector<MPoly> reduced_groebner_basis(const MPolyRing& ring, std::vector<MPoly> gens) {
  std::vector<MPoly> gb = buchberger(ring, std::move(gens));
  // minimalize
  std::vector<MPoly> minimal;
  for (size_t i = 0; i < gb.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gb.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial &mi = ring.leading_monomial(gb[i]), &mj = ring.leading_monomial(gb[j]);
      if (mono_divides(mj, mi) && !(mi == mj && j > i)) redundant = true;
    }
    if (!redundant) minimal.push_back(gb[i]);
  }
  // tail-reduce each element against the others
  std::vector<MPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MPoly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    MPoly r = normal_form(ring, minimal[i], others);
    if (!r.is_zero()) reduced.push_back(ring.monic(r));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const MPoly& a, const MPoly& b) {
    return mono_greater(ring.leading_monomial(a), ring.leading_monomial(b), ring.order());
  });
  return reduced;
}

}  // namespace trop
