#pragma once

/// Presheaves on finite sites with table-based sections, the functor Phi
/// (open-wise fgId / fgMod), stalks as explicit colimit classes, the stalk
/// commutation check, and sheafification with exhaustive sheaf-axiom
/// verification.

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trop/finite_ring.hpp"
#include "trop/report.hpp"
#include "trop/semiring.hpp"
#include "trop/site.hpp"

namespace trop {

inline size_t obj_size(const FiniteRing& r) { return r.size(); }
inline size_t obj_size(const FiniteSemiring& s) { return s.size(); }
inline size_t obj_size(const FgModFinite& m) { return m.size(); }

/// Sections indexed like site.opens(); res[(u,v)] is the element map for the
/// inclusion v <= u.
template <class Obj>
struct SitePresheaf {
  FiniteSite site;
  std::vector<Obj> sections;
  std::map<std::pair<size_t, size_t>, std::vector<int>> res;

  const Obj& at(OpenMask u) const { return sections.at(site.open_index(u)); }

  int restrict_elem(OpenMask u, OpenMask v, int a) const {
    if (u == v) return a;
    return res.at({site.open_index(u), site.open_index(v)}).at(a);
  }
};

template <class Obj>
Report check_presheaf_functorial(const SitePresheaf<Obj>& p) {
  Report rep;
  rep.subject = "presheaf-functoriality";
  const auto& opens = p.site.opens();
  for (size_t u = 0; u < opens.size(); ++u)
    for (size_t v = 0; v < opens.size(); ++v) {
      if ((opens[v] & ~opens[u]) != 0) continue;  // v not inside u
      if (u == v) continue;
      auto it = p.res.find({u, v});
      if (it == p.res.end()) {
        rep.fail("restriction map present", p.site.mask_str(opens[u]) + " -> " +
                                                p.site.mask_str(opens[v]));
        continue;
      }
      if (it->second.size() != obj_size(p.sections[u]))
        rep.fail("restriction map total", p.site.mask_str(opens[u]));
      for (size_t w = 0; w < opens.size(); ++w) {
        if ((opens[w] & ~opens[v]) != 0 || w == v) continue;
        for (int a = 0; a < static_cast<int>(obj_size(p.sections[u])); ++a) {
          const int via_v = p.restrict_elem(opens[v], opens[w], p.restrict_elem(opens[u], opens[v], a));
          const int direct = p.restrict_elem(opens[u], opens[w], a);
          if (via_v != direct)
            rep.fail("restrictions compose",
                     p.site.mask_str(opens[u]) + " -> " + p.site.mask_str(opens[v]) + " -> " +
                         p.site.mask_str(opens[w]));
        }
      }
    }
  return rep;
}

/// A presheaf of Z/n chains: open u gets Z/mods[u], restrictions are the
/// modular reductions (each smaller open's modulus must divide the larger's).
/// The empty open gets the zero ring Z/1.
inline SitePresheaf<FiniteRing> zmod_chain_presheaf(const FiniteSite& site,
                                                    const std::map<OpenMask, int>& mods) {
  SitePresheaf<FiniteRing> p{site, {}, {}};
  const auto& opens = site.opens();
  std::vector<int> n(opens.size());
  for (size_t u = 0; u < opens.size(); ++u) {
    auto it = mods.find(opens[u]);
    if (opens[u] == 0)
      n[u] = 1;
    else if (it != mods.end())
      n[u] = it->second;
    else
      throw std::invalid_argument("no ring assigned to open " + site.mask_str(opens[u]));
    p.sections.push_back(FiniteRing::zmod(n[u]));
  }
  for (size_t u = 0; u < opens.size(); ++u)
    for (size_t v = 0; v < opens.size(); ++v) {
      if (u == v || (opens[v] & ~opens[u]) != 0) continue;
      if (n[u] % n[v] != 0)
        throw std::invalid_argument("moduli do not form a divisibility chain");
      std::vector<int> f(n[u]);
      for (int a = 0; a < n[u]; ++a) f[a] = a % n[v];
      p.res[{u, v}] = std::move(f);
    }
  return p;
}

/// Phi on a presheaf of finite rings: fgId open-wise, fgId(rho) on
/// restrictions.  Functoriality of the result is re-checked by the caller.
inline SitePresheaf<FiniteSemiring> phi_presheaf(const SitePresheaf<FiniteRing>& p,
                                                 std::vector<FgIdFinite>* tables = nullptr) {
  SitePresheaf<FiniteSemiring> q{p.site, {}, {}};
  std::vector<FgIdFinite> fg;
  for (const auto& r : p.sections) fg.push_back(fgid_finite(r));
  for (const auto& t : fg) q.sections.push_back(t.table);
  for (const auto& [uv, f] : p.res)
    q.res[uv] = fgid_map(p.sections[uv.first], fg[uv.first], p.sections[uv.second], fg[uv.second], f);
  if (tables) *tables = std::move(fg);
  return q;
}

/// Phi on a presheaf of finite modules over a ring presheaf: fgMod open-wise.
inline SitePresheaf<FgModFinite> phi_presheaf_modules(const SitePresheaf<FiniteRing>& rings,
                                                      const SitePresheaf<FiniteModule>& mods) {
  SitePresheaf<FgModFinite> q{mods.site, {}, {}};
  std::vector<FgIdFinite> fg;
  for (const auto& r : rings.sections) fg.push_back(fgid_finite(r));
  for (size_t u = 0; u < mods.sections.size(); ++u)
    q.sections.push_back(fgmod_finite(mods.sections[u], fg[u]));
  for (const auto& [uv, f] : mods.res) {
    const auto& src = q.sections[uv.first];
    const auto& dst = q.sections[uv.second];
    std::vector<int> out(src.size());
    for (size_t i = 0; i < src.size(); ++i) {
      ElemMask img = 0;
      for (int x = 0; x < static_cast<int>(mods.sections[uv.first].size()); ++x)
        if ((src.submodules[i] >> x) & 1) img |= ElemMask(1) << f[x];
      out[i] = dst.index_of(submodule_closure(mods.sections[uv.second], img));
    }
    q.res[uv] = std::move(out);
  }
  return q;
}

/// The stalk of a presheaf at x: the section object over the minimal open.
template <class Obj>
const Obj& stalk(const SitePresheaf<Obj>& p, int x) {
  return p.at(p.site.min_open(x));
}

/// Builds the stalk as literal colimit classes of pairs (U, a) with U
/// containing x, then checks that the canonical map to the section over the
/// minimal open is a bijection.  This is the commutation check: for a
/// Phi-image presheaf the target equals Phi of the ring stalk.
template <class Obj>
Report stalk_commutation_check(const SitePresheaf<Obj>& q, int x) {
  Report rep;
  rep.subject = "stalk-commutation@p" + std::to_string(x);
  const auto opens = q.site.opens_containing(x);
  const OpenMask umin = q.site.min_open(x);

  struct Pair {
    OpenMask u;
    int a;
  };
  std::vector<Pair> pairs;
  for (OpenMask u : opens)
    for (int a = 0; a < static_cast<int>(obj_size(q.at(u))); ++a) pairs.push_back({u, a});

  // union-find under the literal colimit relation
  std::vector<int> parent(pairs.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int i) {
    return parent[i] == i ? i : parent[i] = find(parent[i]);
  };
  auto related = [&](const Pair& p1, const Pair& p2) {
    for (OpenMask w : opens) {
      if ((w & ~p1.u) != 0 || (w & ~p2.u) != 0) continue;  // w must sit inside both
      if (q.restrict_elem(p1.u, w, p1.a) == q.restrict_elem(p2.u, w, p2.a)) return true;
    }
    return false;
  };
  for (size_t i = 0; i < pairs.size(); ++i)
    for (size_t j = i + 1; j < pairs.size(); ++j)
      if (related(pairs[i], pairs[j])) {
        int a = find(static_cast<int>(i)), b = find(static_cast<int>(j));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }

  // the induced map [(U, a)] -> a|_{umin} must be well defined and bijective
  std::map<int, int> class_image;
  for (size_t i = 0; i < pairs.size(); ++i) {
    const int c = find(static_cast<int>(i));
    const int img = q.restrict_elem(pairs[i].u, umin, pairs[i].a);
    auto it = class_image.find(c);
    if (it == class_image.end())
      class_image[c] = img;
    else if (it->second != img)
      rep.fail("map is well defined on colimit classes",
               q.site.mask_str(pairs[i].u) + " elem " + std::to_string(pairs[i].a));
  }
  const size_t target = obj_size(q.at(umin));
  rep.require(class_image.size() == target, "bijective onto Phi of the stalk",
              std::to_string(class_image.size()) + " classes vs " + std::to_string(target));
  std::vector<bool> hit(target, false);
  for (const auto& [c, img] : class_image) {
    if (hit.at(img)) rep.fail("injective", "image " + std::to_string(img));
    hit[img] = true;
  }
  for (size_t t = 0; t < target; ++t)
    if (!hit[t]) rep.fail("surjective", "element " + std::to_string(t) + " not hit");
  rep.note("classes: " + std::to_string(class_image.size()));
  return rep;
}

// ---- sheafification ----

/// Sections of the sheafification over each open: stalkwise families locally
/// represented by honest sections.  Families are vectors indexed by the
/// points of the open in ascending order.
struct SheafifiedSections {
  FiniteSite site;
  std::vector<std::vector<int>> points_of_open;        // ascending point ids
  std::vector<std::vector<std::vector<int>>> families;  // [open][section][slot]

  int slot(size_t open_idx, int point) const {
    const auto& pts = points_of_open.at(open_idx);
    auto it = std::find(pts.begin(), pts.end(), point);
    if (it == pts.end()) throw std::invalid_argument("point not in open");
    return static_cast<int>(it - pts.begin());
  }
};

template <class Obj>
SheafifiedSections sheafify(const SitePresheaf<Obj>& q) {
  SheafifiedSections s{q.site, {}, {}};
  const auto& opens = q.site.opens();
  for (size_t ui = 0; ui < opens.size(); ++ui) {
    const OpenMask u = opens[ui];
    std::vector<int> pts;
    for (int x = 0; x < q.site.points(); ++x)
      if ((u >> x) & 1) pts.push_back(x);
    s.points_of_open.push_back(pts);

    // enumerate stalk families
    std::vector<size_t> sizes;
    size_t total = 1;
    for (int x : pts) {
      sizes.push_back(obj_size(q.at(q.site.min_open(x))));
      total *= sizes.back();
      if (total > 200000) throw std::runtime_error("sheafification fixture too large");
    }
    std::vector<std::vector<int>> fams;
    std::vector<int> fam(pts.size(), 0);
    while (true) {
      // condition: every point has a neighbourhood on which the family is
      // represented by an actual section
      bool ok = true;
      for (size_t xi = 0; xi < pts.size() && ok; ++xi) {
        bool represented = false;
        for (OpenMask v : q.site.opens_containing(pts[xi])) {
          if ((v & ~u) != 0) continue;
          for (int t = 0; t < static_cast<int>(obj_size(q.at(v))) && !represented; ++t) {
            bool matches = true;
            for (size_t yi = 0; yi < pts.size(); ++yi) {
              if (!((v >> pts[yi]) & 1)) continue;
              if (q.restrict_elem(v, q.site.min_open(pts[yi]), t) != fam[yi]) {
                matches = false;
                break;
              }
            }
            if (matches) represented = true;
          }
          if (represented) break;
        }
        ok = represented;
      }
      if (ok || pts.empty()) fams.push_back(fam);
      if (pts.empty()) break;
      size_t pos = 0;
      while (pos < fam.size() && fam[pos] + 1 == static_cast<int>(sizes[pos])) {
        fam[pos] = 0;
        ++pos;
      }
      if (pos == fam.size()) break;
      ++fam[pos];
    }
    if (pts.empty() && fams.empty()) fams.push_back({});
    s.families.push_back(std::move(fams));
  }
  return s;
}

/// Restriction in the sheafification: project the family.
inline std::vector<int> sheaf_restrict(const SheafifiedSections& s, size_t from_open,
                                       size_t to_open, const std::vector<int>& fam) {
  std::vector<int> out;
  for (int x : s.points_of_open.at(to_open)) out.push_back(fam.at(s.slot(from_open, x)));
  return out;
}

inline int sheaf_section_index(const SheafifiedSections& s, size_t open_idx,
                               const std::vector<int>& fam) {
  const auto& fams = s.families.at(open_idx);
  for (size_t i = 0; i < fams.size(); ++i)
    if (fams[i] == fam) return static_cast<int>(i);
  return -1;
}

/// Identity and gluing axioms, exhaustively over every cover of every open.
inline Report sheaf_axioms_check(const SheafifiedSections& s) {
  Report rep;
  rep.subject = "sheaf-axioms";
  const auto& opens = s.site.opens();
  for (size_t ui = 0; ui < opens.size(); ++ui) {
    for (const auto& cover : s.site.covers_of(opens[ui])) {
      // identity: sections agreeing on every cover member coincide
      for (const auto& f1 : s.families[ui])
        for (const auto& f2 : s.families[ui]) {
          if (f1 == f2) continue;
          bool agree = true;
          for (OpenMask v : cover)
            if (sheaf_restrict(s, ui, s.site.open_index(v), f1) !=
                sheaf_restrict(s, ui, s.site.open_index(v), f2))
              agree = false;
          if (agree && !cover.empty())
            rep.fail("identity axiom", s.site.mask_str(opens[ui]));
        }
      // gluing: compatible families on the cover glue to exactly one section
      if (cover.empty()) continue;
      std::vector<size_t> cov_idx;
      for (OpenMask v : cover) cov_idx.push_back(s.site.open_index(v));
      size_t combos = 1;
      bool too_big = false;
      for (size_t ci : cov_idx) {
        combos *= std::max<size_t>(1, s.families[ci].size());
        if (combos > 100000) too_big = true;
      }
      if (too_big) {
        rep.note("cover skipped (too many combinations)");
        continue;
      }
      std::vector<size_t> pick(cov_idx.size(), 0);
      while (true) {
        bool compatible = true;
        for (size_t a = 0; a < cov_idx.size() && compatible; ++a)
          for (size_t b = a + 1; b < cov_idx.size() && compatible; ++b) {
            const OpenMask inter = opens[cov_idx[a]] & opens[cov_idx[b]];
            const size_t ii = s.site.open_index(inter);
            if (sheaf_restrict(s, cov_idx[a], ii, s.families[cov_idx[a]][pick[a]]) !=
                sheaf_restrict(s, cov_idx[b], ii, s.families[cov_idx[b]][pick[b]]))
              compatible = false;
          }
        if (compatible) {
          // glue pointwise and count matching global sections
          std::vector<int> glued(s.points_of_open[ui].size(), -1);
          for (size_t a = 0; a < cov_idx.size(); ++a) {
            const auto& fam = s.families[cov_idx[a]][pick[a]];
            for (size_t slot = 0; slot < s.points_of_open[cov_idx[a]].size(); ++slot)
              glued[s.slot(ui, s.points_of_open[cov_idx[a]][slot])] = fam[slot];
          }
          const int idx = sheaf_section_index(s, ui, glued);
          if (idx < 0) rep.fail("gluing axiom: glued family is a section",
                                s.site.mask_str(opens[ui]));
        }
        size_t pos = 0;
        while (pos < pick.size() && pick[pos] + 1 == s.families[cov_idx[pos]].size()) {
          pick[pos] = 0;
          ++pos;
        }
        if (pos == pick.size()) break;
        ++pick[pos];
      }
    }
  }
  return rep;
}

/// Pointwise semiring structure on sheafified sections; restrictions must be
/// semiring morphisms.
template <class Obj>
Report sheaf_restrictions_are_morphisms(const SheafifiedSections& s, const SitePresheaf<Obj>& q) {
  Report rep;
  rep.subject = "sheaf-restriction-morphisms";
  const auto& opens = s.site.opens();
  auto stalk_of = [&](int x) -> const Obj& { return q.at(q.site.min_open(x)); };
  auto op_fam = [&](size_t ui, const std::vector<int>& f1, const std::vector<int>& f2, bool mul) {
    std::vector<int> out(f1.size());
    for (size_t slot = 0; slot < f1.size(); ++slot) {
      const auto& st = stalk_of(s.points_of_open[ui][slot]);
      out[slot] = mul ? st.mul(f1[slot], f2[slot]) : st.add(f1[slot], f2[slot]);
    }
    return out;
  };
  for (size_t ui = 0; ui < opens.size(); ++ui) {
    for (size_t vi = 0; vi < opens.size(); ++vi) {
      if (ui == vi || (opens[vi] & ~opens[ui]) != 0) continue;
      for (const auto& f1 : s.families[ui])
        for (const auto& f2 : s.families[ui]) {
          for (bool mul : {false, true}) {
            const auto combined = op_fam(ui, f1, f2, mul);
            // the combined family must itself be a section
            if (sheaf_section_index(s, ui, combined) < 0) {
              rep.fail("sections closed under the pointwise operations",
                       s.site.mask_str(opens[ui]));
              continue;
            }
            const auto lhs = sheaf_restrict(s, ui, vi, combined);
            const auto rhs =
                op_fam(vi, sheaf_restrict(s, ui, vi, f1), sheaf_restrict(s, ui, vi, f2), mul);
            if (lhs != rhs)
              rep.fail("restriction is a morphism",
                       s.site.mask_str(opens[ui]) + " -> " + s.site.mask_str(opens[vi]));
          }
        }
    }
  }
  return rep;
}

}  // namespace trop
