#pragma once

/// Finitely generated submodules of R^n for a Euclidean PID backend (Z or
/// K[x]), in row-style Hermite normal form: pivots associate-normalized
/// (positive / monic), entries above each pivot reduced, zero rows dropped.
/// The HNF basis is the canonical form, so submodule equality is basis
/// equality.  These are the elements of fgMod(R^n).

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trop/ideal.hpp"
#include "trop/integers.hpp"
#include "trop/localized.hpp"
#include "trop/upoly.hpp"

namespace trop {

inline std::pair<Int, Int> pid_divmod(const IntegerRing&, const Int& a, const Int& b) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return {q, r};
}
template <class F>
std::pair<typename UPolyRing<F>::value_type, typename UPolyRing<F>::value_type> pid_divmod(
    const UPolyRing<F>& r, const typename UPolyRing<F>::value_type& a,
    const typename UPolyRing<F>::value_type& b) {
  return r.divmod(a, b);
}

/// Euclidean size used to pick pivots: |a| over Z, degree over K[x].
inline Int pid_size(const IntegerRing&, const Int& a) { return abs_int(a); }
template <class F>
long pid_size(const UPolyRing<F>& r, const typename UPolyRing<F>::value_type& a) {
  return r.deg(a);
}

template <class R>
struct Submodule {
  R ring;
  size_t ambient = 0;
  std::vector<std::vector<typename R::value_type>> basis;  // HNF rows

  bool is_zero() const { return basis.empty(); }
};

namespace detail {

template <class R>
void hnf_rows(const R& ring, std::vector<std::vector<typename R::value_type>>& rows) {
  if (rows.empty()) return;
  const size_t cols = rows[0].size();
  size_t top = 0;
  for (size_t col = 0; col < cols && top < rows.size(); ++col) {
    // reduce the column below `top` to a single nonzero entry by gcd steps
    while (true) {
      size_t best = rows.size();
      for (size_t r = top; r < rows.size(); ++r) {
        if (ring.is_zero(rows[r][col])) continue;
        if (best == rows.size() ||
            pid_size(ring, rows[r][col]) < pid_size(ring, rows[best][col]))
          best = r;
      }
      if (best == rows.size()) break;  // column empty below top
      std::swap(rows[top], rows[best]);
      bool cleared = true;
      for (size_t r = top + 1; r < rows.size(); ++r) {
        if (ring.is_zero(rows[r][col])) continue;
        auto [q, rem] = pid_divmod(ring, rows[r][col], rows[top][col]);
        for (size_t c = 0; c < cols; ++c)
          rows[r][c] = ring.sub(rows[r][c], ring.mul(q, rows[top][c]));
        if (!ring.is_zero(rows[r][col])) cleared = false;
      }
      if (cleared) break;
    }
    if (ring.is_zero(rows[top][col])) continue;
    // normalize the pivot to its associate-canonical form
    const auto pivot_assoc = pid_assoc(ring, rows[top][col]);
    if (!ring.eq(pivot_assoc, rows[top][col])) {
      if constexpr (std::is_same_v<R, IntegerRing>) {
        for (auto& x : rows[top]) x = ring.neg(x);
      } else {
        const auto u = ring.coeff().inv(ring.leading(rows[top][col]));
        for (auto& x : rows[top]) x = ring.scale(u, x);
      }
    }
    // reduce the entries above the pivot
    for (size_t r = 0; r < top; ++r) {
      if (ring.is_zero(rows[r][col])) continue;
      auto [q, rem] = pid_divmod(ring, rows[r][col], rows[top][col]);
      for (size_t c = 0; c < cols; ++c)
        rows[r][c] = ring.sub(rows[r][c], ring.mul(q, rows[top][c]));
    }
    ++top;
  }
  rows.resize(top);
}

}  // namespace detail

template <class R>
Submodule<R> make_submodule(const R& ring, size_t ambient,
                            std::vector<std::vector<typename R::value_type>> rows) {
  for (const auto& row : rows)
    if (row.size() != ambient) throw std::invalid_argument("generator has wrong length");
  detail::hnf_rows(ring, rows);
  return {ring, ambient, std::move(rows)};
}

template <class R>
Submodule<R> zero_submodule(const R& ring, size_t ambient) {
  return {ring, ambient, {}};
}

template <class R>
Submodule<R> full_module(const R& ring, size_t ambient) {
  std::vector<std::vector<typename R::value_type>> rows(
      ambient, std::vector<typename R::value_type>(ambient, ring.zero()));
  for (size_t i = 0; i < ambient; ++i) rows[i][i] = ring.one();
  return make_submodule(ring, ambient, std::move(rows));
}

/// u_M: the cyclic submodule R*m.
template <class R>
Submodule<R> cyclic_submodule(const R& ring, const std::vector<typename R::value_type>& m) {
  return make_submodule(ring, m.size(), {m});
}

template <class R>
bool submodule_eq(const Submodule<R>& a, const Submodule<R>& b) {
  if (a.ambient != b.ambient || a.basis.size() != b.basis.size()) return false;
  for (size_t i = 0; i < a.basis.size(); ++i)
    for (size_t j = 0; j < a.ambient; ++j)
      if (!a.ring.eq(a.basis[i][j], b.basis[i][j])) return false;
  return true;
}

template <class R>
Submodule<R> submodule_sum(const Submodule<R>& a, const Submodule<R>& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("ambient rank mismatch");
  auto rows = a.basis;
  rows.insert(rows.end(), b.basis.begin(), b.basis.end());
  return make_submodule(a.ring, a.ambient, std::move(rows));
}

template <class R>
bool submodule_member(const Submodule<R>& m, std::vector<typename R::value_type> v) {
  const R& ring = m.ring;
  if (v.size() != m.ambient) throw std::invalid_argument("vector has wrong length");
  for (const auto& row : m.basis) {
    size_t col = 0;
    while (col < m.ambient && ring.is_zero(row[col])) ++col;
    if (col == m.ambient) continue;
    if (ring.is_zero(v[col])) continue;
    auto [q, rem] = pid_divmod(ring, v[col], row[col]);
    if (!ring.is_zero(rem)) return false;
    for (size_t c = 0; c < m.ambient; ++c) v[c] = ring.sub(v[c], ring.mul(q, row[c]));
  }
  for (const auto& x : v)
    if (!ring.is_zero(x)) return false;
  return true;
}

template <class R>
bool submodule_contains(const Submodule<R>& big, const Submodule<R>& small) {
  for (const auto& row : small.basis)
    if (!submodule_member(big, row)) return false;
  return true;
}

/// The fgId(R)-action: rho * nu spanned by generator-wise products.
template <class R>
Submodule<R> module_action(const Ideal<R>& rho, const Submodule<R>& nu) {
  std::vector<std::vector<typename R::value_type>> rows;
  for (const auto& g : rho.canonical) {
    if (rho.ring.is_zero(g)) continue;
    for (const auto& w : nu.basis) {
      std::vector<typename R::value_type> row;
      for (const auto& x : w) row.push_back(rho.ring.mul(g, x));
      rows.push_back(std::move(row));
    }
  }
  return make_submodule(nu.ring, nu.ambient, std::move(rows));
}

template <class R>
std::string submodule_to_string(const Submodule<R>& m) {
  if (m.basis.empty()) return "0";
  std::string out = "[";
  for (size_t i = 0; i < m.basis.size(); ++i) {
    if (i) out += "; ";
    out += "(";
    for (size_t j = 0; j < m.ambient; ++j)
      out += (j ? ", " : "") + m.ring.to_string(m.basis[i][j]);
    out += ")";
  }
  return out + "]";
}

}  // namespace trop
