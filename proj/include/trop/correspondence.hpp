#pragma once

/// The correspondence between ring-side objects and k-ideals / k-subsemimodules
/// of fgId(R) / fgMod(M).  A k-ideal of the infinite semiring fgId(R) is
/// carried by the ring ideal it corresponds to: beta lies in the handle
/// exactly when beta is contained in the stored ring ideal.  Same story for
/// submodules.  The k-ideal product transports to the ring-ideal product.

#include <string>
#include <utility>
#include <vector>

#include "trop/fgid.hpp"
#include "trop/report.hpp"
#include "trop/rng.hpp"
#include "trop/semiring.hpp"
#include "trop/submodule.hpp"
#include "trop/valuation.hpp"

namespace trop {

template <class R>
struct KIdealHandle {
  Ideal<R> image;  // the ring ideal L with handle = { beta : beta <= L }
};

template <class R>
KIdealHandle<R> correspondence_forward(const Ideal<R>& ring_ideal) {
  return {ring_ideal};
}

template <class R>
Ideal<R> correspondence_backward(const KIdealHandle<R>& h) {
  // u_R^{-1} of the handle: the elements a with <a> in the handle are exactly
  // the members of the stored ideal
  return h.image;
}

template <class R>
bool handle_member(const KIdealHandle<R>& h, const Ideal<R>& beta) {
  return ideal_contains(h.image, beta);
}

template <class R>
bool handle_eq(const KIdealHandle<R>& a, const KIdealHandle<R>& b) {
  return ideal_eq(a.image, b.image);
}

template <class R>
KIdealHandle<R> handle_sum(const KIdealHandle<R>& a, const KIdealHandle<R>& b) {
  return {ideal_sum(a.image, b.image)};
}

/// <I J>_k under the correspondence: the handle of the ring-ideal product.
template <class R>
KIdealHandle<R> kideal_product(const KIdealHandle<R>& a, const KIdealHandle<R>& b) {
  return {ideal_product(a.image, b.image)};
}

template <class R>
std::string handle_to_string(const KIdealHandle<R>& h) {
  return "handle" + ideal_to_string(h.image);
}

/// Direct-definition cross-check of the k-ideal product on sampled members:
/// every sum a1 b1 + ... + an bn with ai in h1, bi in h2 lies in the product
/// handle, and sampled members of the product handle sit below such sums.
template <class R>
Report kideal_product_crosscheck(const KIdealHandle<R>& h1, const KIdealHandle<R>& h2,
                                 const std::vector<Ideal<R>>& members1,
                                 const std::vector<Ideal<R>>& members2) {
  Report rep;
  rep.subject = "kideal-product-crosscheck";
  const auto prod = kideal_product(h1, h2);
  FgIdSemiring<R> t{h1.image.ring};
  for (const auto& a : members1) {
    if (!handle_member(h1, a)) {
      rep.fail("sample lies in the left handle", ideal_to_string(a));
      continue;
    }
    for (const auto& b : members2) {
      if (!handle_member(h2, b)) {
        rep.fail("sample lies in the right handle", ideal_to_string(b));
        continue;
      }
      rep.require(handle_member(prod, t.mul(a, b)), "products of members lie in the product",
                  ideal_to_string(a) + " * " + ideal_to_string(b));
    }
  }
  // sums of such products stay inside
  if (!members1.empty() && !members2.empty()) {
    auto acc = t.mul(members1.front(), members2.front());
    for (size_t i = 0; i < members1.size() && i < members2.size(); ++i)
      acc = t.add(acc, t.mul(members1[i], members2[i]));
    rep.require(handle_member(prod, acc), "sums of products lie in the product",
                ideal_to_string(acc));
  }
  // the generator of the product handle is itself such a sum: it is the
  // product of the two stored generators' ideals
  rep.require(handle_member(prod, ideal_product(h1.image, h2.image)),
              "the product generator is reachable", handle_to_string(prod));
  return rep;
}

// ---- submodule side ----

template <class R>
struct SubmoduleHandle {
  Submodule<R> image;
};

template <class R>
SubmoduleHandle<R> correspondence_forward(const Submodule<R>& l) {
  return {l};
}

template <class R>
Submodule<R> correspondence_backward(const SubmoduleHandle<R>& h) {
  return h.image;
}

template <class R>
bool handle_member(const SubmoduleHandle<R>& h, const Submodule<R>& nu) {
  return submodule_contains(h.image, nu);
}

template <class R>
bool handle_eq(const SubmoduleHandle<R>& a, const SubmoduleHandle<R>& b) {
  return submodule_eq(a.image, b.image);
}

// ---- realizability ----

/// Checks that v is a surjective valuation and that vhat is injective and
/// surjective on the given samples (complete carrier for finite targets).
/// `ring_samples` generate the sampled ideals; `target_samples` must be hit.
template <class R, class S>
Report is_realization(const Valuation<R, S>& v,
                      const std::vector<typename R::value_type>& ring_samples,
                      const std::vector<typename S::value_type>& target_samples) {
  Report rep;
  rep.subject = "realization:" + v.label;
  rep.absorb(check_seminorm(v, ring_samples));
  const S& t = v.target;

  std::vector<Ideal<R>> ideals;
  for (const auto& a : ring_samples) ideals.push_back(principal_ideal(v.ring, a));
  for (size_t i = 0; i + 1 < ring_samples.size(); i += 2)
    ideals.push_back(make_ideal(v.ring, {ring_samples[i], ring_samples[i + 1]}));

  // vhat is a semiring morphism on the samples
  for (size_t i = 0; i < ideals.size(); ++i)
    for (size_t j = i + 1; j < ideals.size(); ++j) {
      const auto vi = induced_vhat(v, ideals[i]), vj = induced_vhat(v, ideals[j]);
      rep.require(t.eq(induced_vhat(v, ideal_sum(ideals[i], ideals[j])), t.add(vi, vj)),
                  "vhat preserves sums",
                  ideal_to_string(ideals[i]) + " + " + ideal_to_string(ideals[j]));
      rep.require(t.eq(induced_vhat(v, ideal_product(ideals[i], ideals[j])), t.mul(vi, vj)),
                  "vhat preserves products",
                  ideal_to_string(ideals[i]) + " * " + ideal_to_string(ideals[j]));
      // injectivity
      if (t.eq(vi, vj) && !ideal_eq(ideals[i], ideals[j]))
        rep.fail("vhat is injective",
                 ideal_to_string(ideals[i]) + " and " + ideal_to_string(ideals[j]) +
                     " both map to " + t.to_string(vi));
    }
  // v = vhat o u_R
  for (const auto& a : ring_samples)
    rep.require(t.eq(induced_vhat(v, u_R(v.ring, a)), v.map(a)), "v factors through u_R",
                v.ring.to_string(a));
  // surjectivity onto the requested target samples
  for (const auto& y : target_samples) {
    bool hit = false;
    for (const auto& i : ideals)
      if (t.eq(induced_vhat(v, i), y)) {
        hit = true;
        break;
      }
    rep.require(hit, "vhat reaches the target sample", t.to_string(y));
  }
  return rep;
}

}  // namespace trop
