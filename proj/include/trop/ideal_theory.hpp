#pragma once

/// Ideals, k-ideals and congruences of finite semirings, with complete
/// enumeration, quotients, poset topologies, and brute-force verification of
/// the retraction theorems.  Subsets of the carrier are bitmasks; partitions
/// are restricted-growth strings.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trop/report.hpp"
#include "trop/semiring.hpp"

namespace trop {

using Mask = std::uint32_t;

inline bool mask_has(Mask m, int i) { return (m >> i) & 1u; }
inline Mask mask_with(Mask m, int i) { return m | (Mask(1) << i); }
inline std::string mask_to_string(const FiniteSemiring& s, Mask m) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    if (mask_has(m, i)) {
      if (!first) out += ",";
      out += s.label(i);
      first = false;
    }
  return out + "}";
}

constexpr int kEnumerationBound = 8;  // carrier-size cap for exhaustive enumerations

inline void check_enumeration_bound(const FiniteSemiring& s) {
  if (s.size() > kEnumerationBound)
    throw std::runtime_error("carrier size " + std::to_string(s.size()) +
                             " exceeds the enumeration bound " +
                             std::to_string(kEnumerationBound));
}

// ---- ideals ----

inline bool is_ideal_mask(const FiniteSemiring& s, Mask m) {
  const int n = static_cast<int>(s.size());
  if (!mask_has(m, s.zero())) return false;
  for (int a = 0; a < n; ++a) {
    if (!mask_has(m, a)) continue;
    for (int b = 0; b < n; ++b) {
      if (mask_has(m, b) && !mask_has(m, s.add(a, b))) return false;
      if (!mask_has(m, s.mul(a, b))) return false;  // absorbs arbitrary multipliers
    }
  }
  return true;
}

inline Mask ideal_generated_mask(const FiniteSemiring& s, Mask seed) {
  const int n = static_cast<int>(s.size());
  Mask m = mask_with(seed, s.zero());
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < n; ++a) {
      if (!mask_has(m, a)) continue;
      for (int b = 0; b < n; ++b) {
        if (mask_has(m, b)) {
          const int c = s.add(a, b);
          if (!mask_has(m, c)) {
            m = mask_with(m, c);
            grew = true;
          }
        }
        const int d = s.mul(a, b);
        if (!mask_has(m, d)) {
          m = mask_with(m, d);
          grew = true;
        }
      }
    }
  }
  return m;
}

/// Subtractive: a + c = b with a, b inside implies c inside.
inline bool is_subtractive_mask(const FiniteSemiring& s, Mask m) {
  const int n = static_cast<int>(s.size());
  for (int a = 0; a < n; ++a) {
    if (!mask_has(m, a)) continue;
    for (int c = 0; c < n; ++c) {
      if (mask_has(m, c)) continue;
      if (mask_has(m, s.add(a, c))) return false;
    }
  }
  return true;
}

inline bool is_downward_closed_mask(const FiniteSemiring& s, Mask m) {
  const int n = static_cast<int>(s.size());
  for (int b = 0; b < n; ++b) {
    if (!mask_has(m, b)) continue;
    for (int a = 0; a < n; ++a)
      if (s.leq(a, b) && !mask_has(m, a)) return false;
  }
  return true;
}

/// Smallest k-ideal containing the seed: alternate ideal closure with the
/// subtractive rule until the joint fixpoint.
inline Mask subtractive_closure_mask(const FiniteSemiring& s, Mask seed) {
  const int n = static_cast<int>(s.size());
  Mask m = ideal_generated_mask(s, seed);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < n; ++a) {
      if (!mask_has(m, a)) continue;
      for (int c = 0; c < n; ++c) {
        if (mask_has(m, c)) continue;
        if (mask_has(m, s.add(a, c))) {
          m = mask_with(m, c);
          grew = true;
        }
      }
    }
    if (grew) m = ideal_generated_mask(s, m);
  }
  return m;
}

inline std::vector<Mask> enumerate_ideals(const FiniteSemiring& s) {
  check_enumeration_bound(s);
  const int n = static_cast<int>(s.size());
  std::vector<Mask> out;
  for (Mask seed = 0; seed < (Mask(1) << n); ++seed) {
    Mask m = ideal_generated_mask(s, seed);
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Mask> enumerate_k_ideals(const FiniteSemiring& s) {
  std::vector<Mask> out;
  for (Mask m : enumerate_ideals(s))
    if (is_subtractive_mask(s, m)) out.push_back(m);
  return out;
}

/// Prime ideal: proper, and the complement is multiplicatively closed.
inline bool is_prime_ideal_mask(const FiniteSemiring& s, Mask m) {
  const int n = static_cast<int>(s.size());
  if (m == (Mask(1) << n) - 1) return false;
  for (int a = 0; a < n; ++a) {
    if (mask_has(m, a)) continue;
    for (int b = 0; b < n; ++b) {
      if (mask_has(m, b)) continue;
      if (mask_has(m, s.mul(a, b))) return false;
    }
  }
  return true;
}

// ---- congruences ----

/// A partition of the carrier in restricted-growth labelling; cls[i] is the
/// class of element i, classes numbered by first appearance.
struct Congruence {
  std::vector<int> cls;

  int classes() const {
    int m = 0;
    for (int c : cls) m = std::max(m, c + 1);
    return m;
  }
  bool same(int a, int b) const { return cls[a] == cls[b]; }
  bool operator==(const Congruence& o) const { return cls == o.cls; }
};

inline Congruence canonical_partition(std::vector<int> raw) {
  std::vector<int> relabel(raw.size(), -1);
  int next = 0;
  for (int& c : raw) {
    if (relabel[c] == -1) relabel[c] = next++;
    c = relabel[c];
  }
  return {raw};
}

inline std::string congruence_to_string(const FiniteSemiring& s, const Congruence& y) {
  std::string out = "{";
  for (int c = 0; c < y.classes(); ++c) {
    if (c) out += ", ";
    out += "{";
    bool first = true;
    for (size_t i = 0; i < y.cls.size(); ++i)
      if (y.cls[i] == c) {
        if (!first) out += ",";
        out += s.label(static_cast<int>(i));
        first = false;
      }
    out += "}";
  }
  return out + "}";
}

inline bool is_congruence(const FiniteSemiring& s, const Congruence& y) {
  const int n = static_cast<int>(s.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!y.same(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (!y.same(s.add(a, c), s.add(b, c))) return false;
        if (!y.same(s.mul(a, c), s.mul(b, c))) return false;
      }
    }
  return true;
}

/// All congruence partitions, walked in restricted-growth-string order.
inline std::vector<Congruence> enumerate_congruences(const FiniteSemiring& s) {
  check_enumeration_bound(s);
  const int n = static_cast<int>(s.size());
  std::vector<Congruence> out;
  std::vector<int> rgs(n, 0);
  while (true) {
    Congruence y{rgs};
    if (is_congruence(s, y)) out.push_back(y);
    // next restricted growth string
    int i = n - 1;
    while (i > 0) {
      int maxv = 0;
      for (int j = 0; j < i; ++j) maxv = std::max(maxv, rgs[j]);
      if (rgs[i] <= maxv) break;
      --i;
    }
    if (i == 0) break;
    ++rgs[i];
    for (int j = i + 1; j < n; ++j) rgs[j] = 0;
  }
  return out;
}

inline Congruence congruence_generated(const FiniteSemiring& s,
                                       const std::vector<std::pair<int, int>>& pairs) {
  const int n = static_cast<int>(s.size());
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  };
  for (auto [a, b] : pairs) unite(a, b);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (find(a) != find(b)) continue;
        for (int c = 0; c < n; ++c) {
          if (unite(s.add(a, c), s.add(b, c))) grew = true;
          if (unite(s.mul(a, c), s.mul(b, c))) grew = true;
        }
      }
  }
  std::vector<int> raw(n);
  for (int i = 0; i < n; ++i) raw[i] = find(i);
  return canonical_partition(raw);
}

/// Congruences ordered as relations: y1 <= y2 iff y1 refines y2.
inline bool congruence_leq(const Congruence& y1, const Congruence& y2) {
  for (size_t a = 0; a < y1.cls.size(); ++a)
    for (size_t b = a + 1; b < y1.cls.size(); ++b)
      if (y1.cls[a] == y1.cls[b] && y2.cls[a] != y2.cls[b]) return false;
  return true;
}

// ---- the retraction maps ----

/// c: the congruence generated by {(a, 0) : a in I}.
inline Congruence map_c(const FiniteSemiring& s, Mask kideal) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < static_cast<int>(s.size()); ++a)
    if (mask_has(kideal, a)) pairs.push_back({a, s.zero()});
  return congruence_generated(s, pairs);
}

/// r: the class of zero.
inline Mask map_r(const FiniteSemiring& s, const Congruence& y) {
  Mask m = 0;
  for (int a = 0; a < static_cast<int>(s.size()); ++a)
    if (y.same(a, s.zero())) m = mask_with(m, a);
  return m;
}

/// j: subtractive closure of an ideal.
inline Mask map_j(const FiniteSemiring& s, Mask ideal) { return subtractive_closure_mask(s, ideal); }

// ---- quotients ----

inline FiniteSemiring quotient_semiring(const FiniteSemiring& s, const Congruence& y) {
  if (!is_congruence(s, y)) throw std::invalid_argument("partition is not a congruence");
  const int m = y.classes();
  std::vector<int> rep(m, -1);
  for (size_t i = 0; i < y.cls.size(); ++i)
    if (rep[y.cls[i]] == -1) rep[y.cls[i]] = static_cast<int>(i);
  std::vector<std::string> labels(m);
  for (int c = 0; c < m; ++c) labels[c] = "[" + s.label(rep[c]) + "]";
  std::vector<std::vector<int>> add(m, std::vector<int>(m)), mul(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      add[a][b] = y.cls[s.add(rep[a], rep[b])];
      mul[a][b] = y.cls[s.mul(rep[a], rep[b])];
    }
  FiniteSemiring q(labels, add, mul, y.cls[s.zero()], y.cls[s.one()]);
  q.set_name(s.name() + "/~");
  return q;
}

/// S/I is shorthand for S/c(I).
inline FiniteSemiring quotient_by_kideal(const FiniteSemiring& s, Mask kideal) {
  return quotient_semiring(s, map_c(s, kideal));
}

// ---- poset topologies ----

/// A finite poset with a coarse lower or coarse upper topology: the subbasis
/// of closed sets consists of principal up-sets (lower) or down-sets (upper).
class PosetSpace {
 public:
  enum class Topology { kCoarseLower, kCoarseUpper };

  PosetSpace(int n, std::function<bool(int, int)> leq, Topology t) : n_(n), topology_(t) {
    leq_.assign(n_, std::vector<bool>(n_, false));
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) leq_[a][b] = leq(a, b);
  }

  int size() const { return n_; }
  bool leq(int a, int b) const { return leq_[a][b]; }
  Topology topology() const { return topology_; }

  Report check_partial_order() const {
    Report rep;
    rep.subject = "partial-order";
    for (int a = 0; a < n_; ++a) {
      if (!leq_[a][a]) rep.fail("reflexive", std::to_string(a));
      for (int b = 0; b < n_; ++b) {
        if (a != b && leq_[a][b] && leq_[b][a]) rep.fail("antisymmetric", std::to_string(a) + "," + std::to_string(b));
        for (int c = 0; c < n_; ++c)
          if (leq_[a][b] && leq_[b][c] && !leq_[a][c])
            rep.fail("transitive", std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c));
      }
    }
    return rep;
  }

  /// Subbasic closed set anchored at x.
  std::vector<bool> subbasic_closed(int x) const {
    std::vector<bool> out(n_, false);
    for (int y = 0; y < n_; ++y)
      out[y] = topology_ == Topology::kCoarseLower ? leq_[x][y] : leq_[y][x];
    return out;
  }

  /// Closedness in the generated topology.  On a finite space a set C is
  /// closed iff C equals the intersection over x outside C of the union of
  /// all subbasic closed sets avoiding x.
  bool is_closed(const std::vector<bool>& c) const {
    bool all = true, none = true;
    for (bool b : c) (b ? none : all) = false;
    if (all || none) return true;
    for (int y = 0; y < n_; ++y) {
      if (c[y]) continue;
      // B_y := union of subbasic sets avoiding y must cover C
      std::vector<bool> by(n_, false);
      for (int x = 0; x < n_; ++x) {
        auto sb = subbasic_closed(x);
        if (sb[y]) continue;
        for (int t = 0; t < n_; ++t)
          if (sb[t]) by[t] = true;
      }
      for (int t = 0; t < n_; ++t)
        if (c[t] && !by[t]) return false;
    }
    return true;
  }

 private:
  int n_;
  std::vector<std::vector<bool>> leq_;
  Topology topology_;
};

/// Preimages of subbasic closed sets must be closed.  Sufficient for
/// continuity, since preimage commutes with unions and intersections.
inline Report check_continuity(const PosetSpace& dom, const PosetSpace& cod,
                               const std::function<int(int)>& f, const std::string& label) {
  Report rep;
  rep.subject = "continuity:" + label;
  for (int x = 0; x < cod.size(); ++x) {
    auto closed = cod.subbasic_closed(x);
    std::vector<bool> pre(dom.size(), false);
    for (int a = 0; a < dom.size(); ++a) pre[a] = closed[f(a)];
    if (!dom.is_closed(pre))
      rep.fail("preimage of subbasic closed set is closed", "anchor " + std::to_string(x));
  }
  return rep;
}

// ---- the retraction theorems, verified ----

inline Report verify_retraction_congruences(const FiniteSemiring& s) {
  Report rep;
  rep.subject = "retraction-congruences";
  rep.absorb(check_semiring_axioms(s));
  if (!rep.pass()) return rep;  // the theorem is about semirings
  const auto kideals = enumerate_k_ideals(s);
  const auto congs = enumerate_congruences(s);
  rep.note("k-ideals: " + std::to_string(kideals.size()));
  rep.note("congruences: " + std::to_string(congs.size()));

  auto kideal_index = [&](Mask m) {
    auto it = std::find(kideals.begin(), kideals.end(), m);
    if (it == kideals.end()) throw std::logic_error("map_r left the k-ideal lattice");
    return static_cast<int>(it - kideals.begin());
  };
  auto cong_index = [&](const Congruence& y) {
    auto it = std::find(congs.begin(), congs.end(), y);
    if (it == congs.end()) throw std::logic_error("map_c left the congruence lattice");
    return static_cast<int>(it - congs.begin());
  };

  // (a) r(c(I)) = I
  for (Mask i : kideals) {
    const Mask back = map_r(s, map_c(s, i));
    rep.require(back == i, "r after c is the identity on Id_k", mask_to_string(s, i));
  }
  // (b) c(r(Y)) <= Y
  for (const auto& y : congs) {
    const Congruence yc = map_c(s, map_r(s, y));
    rep.require(congruence_leq(yc, y), "c after r is deflationary", congruence_to_string(s, y));
  }
  // c is an order embedding
  for (Mask i : kideals)
    for (Mask j : kideals) {
      const bool sub = (i & j) == i;
      const bool csub = congruence_leq(map_c(s, i), map_c(s, j));
      rep.require(sub == csub, "c is an order embedding",
                  mask_to_string(s, i) + " vs " + mask_to_string(s, j));
    }
  // (c) continuity for the coarse lower topologies
  PosetSpace pid(static_cast<int>(kideals.size()),
                 [&](int a, int b) { return (kideals[a] & kideals[b]) == kideals[a]; },
                 PosetSpace::Topology::kCoarseLower);
  PosetSpace pcong(static_cast<int>(congs.size()),
                   [&](int a, int b) { return congruence_leq(congs[a], congs[b]); },
                   PosetSpace::Topology::kCoarseLower);
  rep.absorb(check_continuity(pcong, pid, [&](int y) { return kideal_index(map_r(s, congs[y])); },
                              "r"));
  rep.absorb(check_continuity(pid, pcong, [&](int i) { return cong_index(map_c(s, kideals[i])); },
                              "c"));
  return rep;
}

inline Report verify_retraction_ideals(const FiniteSemiring& s) {
  Report rep;
  rep.subject = "retraction-ideals";
  rep.absorb(check_semiring_axioms(s));
  if (!rep.pass()) return rep;
  const auto ideals = enumerate_ideals(s);
  const auto kideals = enumerate_k_ideals(s);
  rep.note("ideals: " + std::to_string(ideals.size()));
  rep.note("k-ideals: " + std::to_string(kideals.size()));

  auto ideal_index = [&](Mask m) {
    auto it = std::find(ideals.begin(), ideals.end(), m);
    if (it == ideals.end()) throw std::logic_error("inclusion left the ideal lattice");
    return static_cast<int>(it - ideals.begin());
  };
  auto kideal_index = [&](Mask m) {
    auto it = std::find(kideals.begin(), kideals.end(), m);
    if (it == kideals.end()) throw std::logic_error("map_j left the k-ideal lattice");
    return static_cast<int>(it - kideals.begin());
  };

  for (Mask i : kideals)
    rep.require(map_j(s, i) == i, "j after i is the identity on Id_k", mask_to_string(s, i));
  for (Mask i : ideals) {
    const Mask ji = map_j(s, i);
    rep.require((i & ji) == i, "j is inflationary", mask_to_string(s, i));
    rep.require(map_j(s, ji) == ji, "j is idempotent", mask_to_string(s, i));
    for (Mask j : ideals)
      if ((i & j) == i)
        rep.require((map_j(s, i) & map_j(s, j)) == map_j(s, i), "j is monotone",
                    mask_to_string(s, i) + " vs " + mask_to_string(s, j));
  }

  // continuity for the coarse upper topologies
  PosetSpace pall(static_cast<int>(ideals.size()),
                  [&](int a, int b) { return (ideals[a] & ideals[b]) == ideals[a]; },
                  PosetSpace::Topology::kCoarseUpper);
  PosetSpace pk(static_cast<int>(kideals.size()),
                [&](int a, int b) { return (kideals[a] & kideals[b]) == kideals[a]; },
                PosetSpace::Topology::kCoarseUpper);
  rep.absorb(check_continuity(pk, pall, [&](int i) { return ideal_index(kideals[i]); }, "i"));
  rep.absorb(check_continuity(pall, pk, [&](int i) { return kideal_index(map_j(s, ideals[i])); },
                              "j"));
  return rep;
}

/// k-ideals of S containing I correspond to k-ideals of S/I, primes to
/// primes, via the projection.
inline Report quotient_kideal_bijection_check(const FiniteSemiring& s, Mask kideal) {
  Report rep;
  rep.subject = "quotient-kideal-bijection";
  const Congruence y = map_c(s, kideal);
  const FiniteSemiring q = quotient_semiring(s, y);
  auto pi = [&](int a) { return y.cls[a]; };

  std::vector<Mask> above;
  for (Mask m : enumerate_k_ideals(s))
    if ((m & kideal) == kideal) above.push_back(m);
  const auto qk = enumerate_k_ideals(q);
  rep.note("k-ideals above I: " + std::to_string(above.size()));
  rep.note("k-ideals of quotient: " + std::to_string(qk.size()));
  rep.require(above.size() == qk.size(), "same number of k-ideals on both sides",
              std::to_string(above.size()) + " vs " + std::to_string(qk.size()));

  for (Mask m : above) {
    Mask img = 0;
    for (int a = 0; a < static_cast<int>(s.size()); ++a)
      if (mask_has(m, a)) img = mask_with(img, pi(a));
    rep.require(std::find(qk.begin(), qk.end(), img) != qk.end(),
                "projection sends k-ideals above I to k-ideals", mask_to_string(s, m));
    // round-trip through the preimage
    Mask back = 0;
    for (int a = 0; a < static_cast<int>(s.size()); ++a)
      if (mask_has(img, pi(a))) back = mask_with(back, a);
    rep.require(back == m, "preimage of the image recovers the k-ideal", mask_to_string(s, m));
    rep.require(is_prime_ideal_mask(s, m) == is_prime_ideal_mask(q, img),
                "primes correspond to primes", mask_to_string(s, m));
  }
  for (Mask m : qk) {
    Mask back = 0;
    for (int a = 0; a < static_cast<int>(s.size()); ++a)
      if (mask_has(m, pi(a))) back = mask_with(back, a);
    rep.require(std::find(above.begin(), above.end(), back) != above.end(),
                "preimages of quotient k-ideals contain I", mask_to_string(q, m));
  }
  return rep;
}

// ---- lattice-theoretic characterizations ----

/// Compactness scanned over every directed family: c <= sup D must be
/// witnessed by a single member of D.  In a finite semilattice this holds for
/// every element (each directed family contains its own supremum), so the
/// scan doubles as a consistency check between leq and join.
inline std::vector<int> compact_elements(const PosetSpace& p,
                                         const std::function<int(int, int)>& join) {
  const int n = p.size();
  if (n > 16) throw std::runtime_error("compactness scan capped at 16 points");
  std::vector<int> out;
  for (int c = 0; c < n; ++c) {
    bool compact = true;
    for (std::uint32_t sub = 1; sub < (1u << n) && compact; ++sub) {
      bool directed = true;
      int sup = -1;
      for (int i = 0; i < n && directed; ++i) {
        if (!((sub >> i) & 1)) continue;
        sup = sup < 0 ? i : join(sup, i);
        for (int j = 0; j < n && directed; ++j) {
          if (!((sub >> j) & 1)) continue;
          bool bounded = false;
          for (int z = 0; z < n; ++z)
            if (((sub >> z) & 1) && p.leq(i, z) && p.leq(j, z)) bounded = true;
          directed = bounded;
        }
      }
      if (!directed || !p.leq(c, sup)) continue;
      bool witnessed = false;
      for (int d = 0; d < n; ++d)
        if (((sub >> d) & 1) && p.leq(c, d)) witnessed = true;
      if (!witnessed) compact = false;
    }
    if (compact) out.push_back(c);
  }
  return out;
}

/// The semiring Id_k(S) of a finite semiring: addition is the k-closure of
/// the ideal sum, multiplication the k-closure of the ideal product.
inline FiniteSemiring kideal_semiring(const FiniteSemiring& s) {
  const auto ks = enumerate_k_ideals(s);
  const int m = static_cast<int>(ks.size());
  auto index_of = [&](Mask x) {
    auto it = std::find(ks.begin(), ks.end(), x);
    if (it == ks.end()) throw std::logic_error("operation left the k-ideal lattice");
    return static_cast<int>(it - ks.begin());
  };
  std::vector<std::string> labels;
  for (Mask x : ks) labels.push_back(mask_to_string(s, x));
  std::vector<std::vector<int>> add(m, std::vector<int>(m)), mul(m, std::vector<int>(m));
  const int n = static_cast<int>(s.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      add[i][j] = index_of(subtractive_closure_mask(s, ks[i] | ks[j]));
      Mask prod = 0;
      for (int a = 0; a < n; ++a)
        if (mask_has(ks[i], a))
          for (int b = 0; b < n; ++b)
            if (mask_has(ks[j], b)) prod = mask_with(prod, s.mul(a, b));
      mul[i][j] = index_of(subtractive_closure_mask(s, prod));
    }
  const Mask bottom = subtractive_closure_mask(s, Mask(1) << s.zero());
  const Mask top = (Mask(1) << n) - 1;
  FiniteSemiring out(labels, add, mul, index_of(bottom), index_of(top));
  out.set_name("Id_k(" + s.name() + ")");
  return out;
}

/// LO-semigroup: a LO-semiring that is a complete (finite: bounded) lattice,
/// algebraic, whose compact elements form a submonoid.
inline Report is_lo_semigroup(const FiniteSemiring& s) {
  Report rep;
  rep.subject = "lo-semigroup";
  rep.absorb(check_semiring_axioms(s));
  if (!is_simple(s))
    for (int a = 0; a < static_cast<int>(s.size()); ++a)
      if (s.add(a, s.one()) != s.one()) {
        rep.fail("simple", s.label(a) + " + 1 != 1");
        break;
      }
  const int n = static_cast<int>(s.size());
  for (int a = 0; a < n && rep.pass(); ++a)
    for (int b = 0; b < n; ++b)
      if (!natural_glb(s, a, b)) {
        rep.fail("meet exists", "(" + s.label(a) + ", " + s.label(b) + ")");
        break;
      }
  if (!rep.pass()) return rep;

  PosetSpace p(n, [&](int a, int b) { return s.leq(a, b); }, PosetSpace::Topology::kCoarseLower);
  auto joins = [&](int a, int b) { return s.add(a, b); };
  auto compacts = compact_elements(p, joins);
  rep.require(static_cast<int>(compacts.size()) == n,
              "every element of a finite lattice is compact",
              std::to_string(compacts.size()) + " of " + std::to_string(n));
  // compact elements form a submonoid of (S, *, 1) containing 0
  for (int a : compacts)
    for (int b : compacts) {
      const int ab = s.mul(a, b);
      if (std::find(compacts.begin(), compacts.end(), ab) == compacts.end())
        rep.fail("compact elements closed under product", s.label(a) + "*" + s.label(b));
    }
  // algebraic: every element is a join of compact elements (trivially itself)
  for (int a = 0; a < n; ++a) {
    bool ok = std::find(compacts.begin(), compacts.end(), a) != compacts.end();
    if (!ok) {
      int acc = -1;
      for (int c : compacts)
        if (p.leq(c, a)) acc = acc < 0 ? c : s.add(acc, c);
      ok = acc == a;
    }
    rep.require(ok, "algebraic lattice", s.label(a));
  }
  return rep;
}

}  // namespace trop
