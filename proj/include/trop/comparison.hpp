#pragma once

/// The comparison morphism phi from the structure sheaf of Spec_k(T) to the
/// tropicalized sheaf Trop(O_X), computed pointwise through zeta on sampled
/// basic opens: a section a/f^n of T_f maps to the family of its zeta values
/// over the truncation points of D_k(f).  Naturality squares and the kernel
/// are checked sample-wise.

#include <string>
#include <vector>

#include "trop/basic_open.hpp"
#include "trop/localize.hpp"
#include "trop/spectrum.hpp"

namespace trop {

/// The phi-image of one section on D_k(f) over the truncation: zeta values
/// indexed by the D_k(f) point list.
template <class R>
std::vector<DvrIdeal> phi_section(const TruncatedSpectrum<R>& spec, const Ideal<R>& f_ideal,
                                  const IdealFractionSemiring<R>& tf,
                                  const typename IdealFractionSemiring<R>::value_type& s) {
  std::vector<DvrIdeal> out;
  for (size_t idx : dk(f_ideal, spec)) {
    const auto data = localize_at_prime(spec.ring, spec.points[idx].prime);
    out.push_back(data.zeta(data.t_local.make(s.num, s.den)));
  }
  return out;
}

inline bool dvr_family_eq(const std::vector<DvrIdeal>& a, const std::vector<DvrIdeal>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!dvr_eq(a[i], b[i])) return false;
  return true;
}

/// phi on D_k(f) and D_k(fg): semiring morphism on samples, naturality of
/// the restriction square, and the kernel probe on the computed sections.
template <class R>
Report comparison_phi_check(const R& ring, long bound, const typename R::value_type& f,
                            const typename R::value_type& g,
                            const std::vector<Ideal<R>>& numerator_samples) {
  Report rep;
  rep.subject = "comparison-phi";
  const auto spec = speck_truncated(ring, bound);
  const auto f_ideal = principal_ideal(ring, f);
  const auto fg_ideal = principal_ideal(ring, ring.mul(f, g));
  const auto tf = IdealFractionSemiring<R>::powers_of(ring, f);
  const auto tfg = IdealFractionSemiring<R>::powers_of(ring, ring.mul(f, g));

  std::vector<typename IdealFractionSemiring<R>::value_type> sections;
  sections.push_back(tf.one());
  for (const auto& a : numerator_samples) {
    if (ideal_is_zero(a)) continue;
    for (long n = 0; n <= 2; ++n) {
      auto fn = ring.one();
      for (long i = 0; i < n; ++i) fn = ring.mul(fn, f);
      sections.push_back(tf.make(a.canonical.at(0), fn));
    }
  }

  // phi is a semiring morphism on the sampled sections
  for (const auto& s1 : sections)
    for (const auto& s2 : sections) {
      auto sum_img = phi_section(spec, f_ideal, tf, tf.add(s1, s2));
      auto img_sum = phi_section(spec, f_ideal, tf, s1);
      auto img2 = phi_section(spec, f_ideal, tf, s2);
      for (size_t i = 0; i < img_sum.size(); ++i) img_sum[i] = dvr_add(img_sum[i], img2[i]);
      rep.require(dvr_family_eq(sum_img, img_sum), "phi preserves sums",
                  tf.to_string(s1) + " + " + tf.to_string(s2));
      auto mul_img = phi_section(spec, f_ideal, tf, tf.mul(s1, s2));
      auto img_mul = phi_section(spec, f_ideal, tf, s1);
      for (size_t i = 0; i < img_mul.size(); ++i) img_mul[i] = dvr_mul(img_mul[i], img2[i]);
      rep.require(dvr_family_eq(mul_img, img_mul), "phi preserves products",
                  tf.to_string(s1) + " * " + tf.to_string(s2));
    }

  // naturality: restrict then phi = phi then restrict, on the D_k(fg) points
  const auto dk_f = dk(f_ideal, spec);
  const auto dk_fg = dk(fg_ideal, spec);
  for (const auto& s : sections) {
    const auto restricted = restrict_between_basic_opens(tf, tfg, s);
    const auto phi_restricted = phi_section(spec, fg_ideal, tfg, restricted);
    // project phi(s) onto the smaller open
    const auto phi_full = phi_section(spec, f_ideal, tf, s);
    std::vector<DvrIdeal> projected;
    for (size_t k = 0; k < dk_fg.size(); ++k) {
      auto it = std::find(dk_f.begin(), dk_f.end(), dk_fg[k]);
      if (it == dk_f.end()) {
        rep.fail("D_k(fg) sits inside D_k(f)", ideal_to_string(spec.points[dk_fg[k]].prime));
        continue;
      }
      projected.push_back(phi_full[static_cast<size_t>(it - dk_f.begin())]);
    }
    rep.require(dvr_family_eq(phi_restricted, projected), "naturality square commutes",
                tf.to_string(s));
  }

  // kernel membership on the sampled sections: everything phi sends to the
  // image of 1
  const auto unit_img = phi_section(spec, f_ideal, tf, tf.one());
  size_t kernel_count = 0;
  for (const auto& s : sections) {
    if (tf.eq(s, tf.one())) continue;
    if (dvr_family_eq(phi_section(spec, f_ideal, tf, s), unit_img)) {
      ++kernel_count;
      rep.note("kernel witness: " + tf.to_string(s));
    }
  }
  rep.note("kernel witnesses among samples: " + std::to_string(kernel_count));
  return rep;
}

/// The generic-point kernel example: on the open {<0>} every nonzero section
/// collapses to 1 in B, so the kernel is large.
template <class R>
Report comparison_kernel_at_generic_point(const R& ring,
                                          const std::vector<Ideal<R>>& samples, size_t want) {
  Report rep;
  rep.subject = "comparison-kernel-generic";
  const auto data = localize_at_prime(ring, zero_ideal(ring));
  std::vector<typename LocalizedData<R>::frac> fracs;
  for (const auto& a : samples)
    for (const auto& b : samples) {
      if (ideal_is_zero(a) || ideal_is_zero(b)) continue;
      fracs.push_back(data.t_local.make(a.canonical.at(0), b.canonical.at(0)));
    }
  rep.absorb(zeta_kernel_probe(data, fracs, want));
  return rep;
}

}  // namespace trop
