#pragma once

/// Table-based finite rings and modules, and their fgId / fgMod images as
/// finite semirings and monoids.  These are the section objects for the
/// presheaf fixtures; everything is exhaustively enumerable.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "trop/report.hpp"
#include "trop/semiring.hpp"

namespace trop {

class FiniteRing {
 public:
  using value_type = int;

  FiniteRing(std::vector<std::string> labels, std::vector<std::vector<int>> add,
             std::vector<std::vector<int>> mul, std::vector<int> neg, int zero, int one)
      : labels_(std::move(labels)),
        add_(std::move(add)),
        mul_(std::move(mul)),
        neg_(std::move(neg)),
        zero_(zero),
        one_(one) {}

  static FiniteRing zmod(int n) {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
    std::vector<int> neg(n);
    for (int i = 0; i < n; ++i) {
      labels.push_back(std::to_string(i));
      neg[i] = (n - i) % n;
      for (int j = 0; j < n; ++j) {
        add[i][j] = (i + j) % n;
        mul[i][j] = (i * j) % n;
      }
    }
    FiniteRing r(labels, add, mul, neg, 0, 1 % n);
    r.name_ = "Z/" + std::to_string(n);
    return r;
  }

  size_t size() const { return labels_.size(); }
  const std::string& label(int a) const { return labels_.at(a); }
  const std::string& name() const { return name_; }
  int zero() const { return zero_; }
  int one() const { return one_; }
  int add(int a, int b) const { return add_.at(a).at(b); }
  int mul(int a, int b) const { return mul_.at(a).at(b); }
  int neg(int a) const { return neg_.at(a); }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> add_, mul_;
  std::vector<int> neg_;
  int zero_, one_;
  std::string name_ = "ring";
};

/// Verifies an index map is a unital ring homomorphism.
inline Report check_ring_hom(const FiniteRing& a, const FiniteRing& b,
                             const std::vector<int>& f) {
  Report rep;
  rep.subject = "ring-hom";
  if (f.size() != a.size()) {
    rep.fail("map is total", std::to_string(f.size()));
    return rep;
  }
  if (f[a.zero()] != b.zero()) rep.fail("preserves 0", "");
  if (f[a.one()] != b.one()) rep.fail("preserves 1", "");
  for (int x = 0; x < static_cast<int>(a.size()); ++x)
    for (int y = 0; y < static_cast<int>(a.size()); ++y) {
      if (f[a.add(x, y)] != b.add(f[x], f[y])) rep.fail("additive", a.label(x) + "+" + a.label(y));
      if (f[a.mul(x, y)] != b.mul(f[x], f[y]))
        rep.fail("multiplicative", a.label(x) + "*" + a.label(y));
    }
  return rep;
}

using ElemMask = std::uint32_t;

/// Ideals of a finite ring: additive subgroups absorbing multiplication.
inline ElemMask ring_ideal_closure(const FiniteRing& r, ElemMask seed) {
  ElemMask m = seed | (ElemMask(1) << r.zero());
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < static_cast<int>(r.size()); ++a) {
      if (!((m >> a) & 1)) continue;
      ElemMask want = ElemMask(1) << r.neg(a);
      for (int b = 0; b < static_cast<int>(r.size()); ++b) {
        if ((m >> b) & 1) want |= ElemMask(1) << r.add(a, b);
        want |= ElemMask(1) << r.mul(a, b);
      }
      if ((m | want) != m) {
        m |= want;
        grew = true;
      }
    }
  }
  return m;
}

inline std::vector<ElemMask> enumerate_ring_ideals(const FiniteRing& r) {
  if (r.size() > 12) throw std::runtime_error("ring too large for ideal enumeration");
  std::vector<ElemMask> out;
  for (ElemMask seed = 0; seed < (ElemMask(1) << r.size()); ++seed) {
    ElemMask m = ring_ideal_closure(r, seed);
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// fgId of a finite ring as a finite semiring table, with the ideal list
/// mapping carrier indices to element masks.
struct FgIdFinite {
  FiniteSemiring table;
  std::vector<ElemMask> ideals;

  int index_of(ElemMask m) const {
    for (size_t i = 0; i < ideals.size(); ++i)
      if (ideals[i] == m) return static_cast<int>(i);
    throw std::logic_error("not an ideal of this ring");
  }
};

inline std::string elem_mask_str(const FiniteRing& r, ElemMask m) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < static_cast<int>(r.size()); ++i)
    if ((m >> i) & 1) {
      if (!first) s += ",";
      s += r.label(i);
      first = false;
    }
  return s + "}";
}

inline FgIdFinite fgid_finite(const FiniteRing& r) {
  const auto ideals = enumerate_ring_ideals(r);
  const int m = static_cast<int>(ideals.size());
  auto idx = [&](ElemMask x) {
    auto it = std::find(ideals.begin(), ideals.end(), x);
    if (it == ideals.end()) throw std::logic_error("closure left the ideal lattice");
    return static_cast<int>(it - ideals.begin());
  };
  std::vector<std::string> labels;
  for (ElemMask i : ideals) labels.push_back(elem_mask_str(r, i));
  std::vector<std::vector<int>> add(m, std::vector<int>(m)), mul(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      add[i][j] = idx(ring_ideal_closure(r, ideals[i] | ideals[j]));
      ElemMask prod = 0;
      for (int a = 0; a < static_cast<int>(r.size()); ++a)
        if ((ideals[i] >> a) & 1)
          for (int b = 0; b < static_cast<int>(r.size()); ++b)
            if ((ideals[j] >> b) & 1) prod |= ElemMask(1) << r.mul(a, b);
      mul[i][j] = idx(ring_ideal_closure(r, prod));
    }
  const ElemMask bottom = ElemMask(1) << r.zero();
  const ElemMask top = (ElemMask(1) << r.size()) - 1;
  FiniteSemiring table(labels, add, mul, idx(bottom), idx(top));
  table.set_name("fgId(" + r.name() + ")");
  return {std::move(table), ideals};
}

/// fgId of a ring hom: ideal -> closure of its image.
inline std::vector<int> fgid_map(const FiniteRing& a, const FgIdFinite& fa, const FiniteRing& b,
                                 const FgIdFinite& fb, const std::vector<int>& f) {
  std::vector<int> out(fa.ideals.size());
  for (size_t i = 0; i < fa.ideals.size(); ++i) {
    ElemMask img = 0;
    for (int x = 0; x < static_cast<int>(a.size()); ++x)
      if ((fa.ideals[i] >> x) & 1) img |= ElemMask(1) << f[x];
    out[i] = fb.index_of(ring_ideal_closure(b, img));
  }
  return out;
}

// ---- finite modules and fgMod ----

/// A finite module over a finite ring: an abelian group table plus the
/// scalar action act[r][m].
struct FiniteModule {
  const FiniteRing* ring;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> add;
  std::vector<std::vector<int>> act;  // act[ring elem][module elem]
  int zero;

  size_t size() const { return labels.size(); }

  /// The ring acting on itself.
  static FiniteModule regular(const FiniteRing& r) {
    FiniteModule m;
    m.ring = &r;
    m.zero = r.zero();
    for (int i = 0; i < static_cast<int>(r.size()); ++i) m.labels.push_back(r.label(i));
    m.add.assign(r.size(), std::vector<int>(r.size()));
    m.act.assign(r.size(), std::vector<int>(r.size()));
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
      for (int j = 0; j < static_cast<int>(r.size()); ++j) {
        m.add[i][j] = r.add(i, j);
        m.act[i][j] = r.mul(i, j);
      }
    return m;
  }
};

inline ElemMask submodule_closure(const FiniteModule& m, ElemMask seed) {
  ElemMask s = seed | (ElemMask(1) << m.zero);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < static_cast<int>(m.size()); ++a) {
      if (!((s >> a) & 1)) continue;
      ElemMask want = 0;
      for (int b = 0; b < static_cast<int>(m.size()); ++b)
        if ((s >> b) & 1) want |= ElemMask(1) << m.add[a][b];
      for (int r = 0; r < static_cast<int>(m.ring->size()); ++r)
        want |= ElemMask(1) << m.act[r][a];
      if ((s | want) != s) {
        s |= want;
        grew = true;
      }
    }
  }
  return s;
}

inline std::vector<ElemMask> enumerate_submodules(const FiniteModule& m) {
  if (m.size() > 12) throw std::runtime_error("module too large for submodule enumeration");
  std::vector<ElemMask> out;
  for (ElemMask seed = 0; seed < (ElemMask(1) << m.size()); ++seed) {
    ElemMask s = submodule_closure(m, seed);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// fgMod of a finite module: the idempotent monoid of submodules under sum,
/// with the fgId action.
struct FgModFinite {
  std::vector<ElemMask> submodules;
  std::vector<std::vector<int>> add;              // submodule sum
  std::vector<std::vector<int>> action;           // action[fgid ideal][submodule]
  int zero;                                        // index of {0}

  size_t size() const { return submodules.size(); }
  int index_of(ElemMask m) const {
    for (size_t i = 0; i < submodules.size(); ++i)
      if (submodules[i] == m) return static_cast<int>(i);
    throw std::logic_error("not a submodule");
  }
};

inline FgModFinite fgmod_finite(const FiniteModule& m, const FgIdFinite& fgid) {
  FgModFinite out;
  out.submodules = enumerate_submodules(m);
  const int k = static_cast<int>(out.submodules.size());
  out.add.assign(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      out.add[i][j] = out.index_of(submodule_closure(m, out.submodules[i] | out.submodules[j]));
  out.action.assign(fgid.ideals.size(), std::vector<int>(k));
  for (size_t ii = 0; ii < fgid.ideals.size(); ++ii)
    for (int j = 0; j < k; ++j) {
      ElemMask prod = 0;
      for (int r = 0; r < static_cast<int>(m.ring->size()); ++r)
        if ((fgid.ideals[ii] >> r) & 1)
          for (int x = 0; x < static_cast<int>(m.size()); ++x)
            if ((out.submodules[j] >> x) & 1) prod |= ElemMask(1) << m.act[r][x];
      out.action[ii][j] = out.index_of(submodule_closure(m, prod));
    }
  out.zero = out.index_of(ElemMask(1) << m.zero);
  return out;
}

}  // namespace trop
