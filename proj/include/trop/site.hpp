#pragma once

/// Finite topological spaces as explicit open families.  Opens are bitmasks
/// over the point set; a finite topology always has minimal open
/// neighbourhoods, which serve as stalks.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "trop/report.hpp"

namespace trop {

using OpenMask = std::uint32_t;

class FiniteSite {
 public:
  FiniteSite(int points, std::vector<OpenMask> opens)
      : n_(points), opens_(std::move(opens)) {
    if (n_ < 1 || n_ > 16) throw std::invalid_argument("site must have 1..16 points");
    const OpenMask full = (OpenMask(1) << n_) - 1;
    for (OpenMask u : opens_)
      if (u & ~full) throw std::invalid_argument("open set mentions an unknown point");
    if (std::find(opens_.begin(), opens_.end(), OpenMask(0)) == opens_.end())
      opens_.push_back(0);
    if (std::find(opens_.begin(), opens_.end(), full) == opens_.end()) opens_.push_back(full);
    std::sort(opens_.begin(), opens_.end());
    opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  }

  int points() const { return n_; }
  const std::vector<OpenMask>& opens() const { return opens_; }
  OpenMask full() const { return (OpenMask(1) << n_) - 1; }

  size_t open_index(OpenMask u) const {
    auto it = std::find(opens_.begin(), opens_.end(), u);
    if (it == opens_.end()) throw std::invalid_argument("not an open set of this site");
    return static_cast<size_t>(it - opens_.begin());
  }

  bool is_open(OpenMask u) const {
    return std::find(opens_.begin(), opens_.end(), u) != opens_.end();
  }

  /// Opens must be closed under union and intersection.
  Report validate() const {
    Report rep;
    rep.subject = "finite-site";
    for (OpenMask a : opens_)
      for (OpenMask b : opens_) {
        if (!is_open(a | b)) rep.fail("closed under union", mask_str(a) + " u " + mask_str(b));
        if (!is_open(a & b))
          rep.fail("closed under intersection", mask_str(a) + " n " + mask_str(b));
      }
    return rep;
  }

  /// The smallest open containing x.
  OpenMask min_open(int x) const {
    OpenMask m = full();
    for (OpenMask u : opens_)
      if ((u >> x) & 1) m &= u;
    if (!is_open(m)) throw std::logic_error("minimal open missing; site not validated");
    return m;
  }

  std::vector<OpenMask> opens_containing(int x) const {
    std::vector<OpenMask> out;
    for (OpenMask u : opens_)
      if ((u >> x) & 1) out.push_back(u);
    return out;
  }

  /// All subfamilies of opens whose union is exactly u.
  std::vector<std::vector<OpenMask>> covers_of(OpenMask u) const {
    std::vector<OpenMask> inside;
    for (OpenMask v : opens_)
      if (v && (v & ~u) == 0) inside.push_back(v);
    std::vector<std::vector<OpenMask>> out;
    const size_t k = inside.size();
    if (k > 12) throw std::runtime_error("too many opens for exhaustive covers");
    for (std::uint32_t sub = 1; sub < (1u << k); ++sub) {
      OpenMask un = 0;
      std::vector<OpenMask> fam;
      for (size_t i = 0; i < k; ++i)
        if ((sub >> i) & 1) {
          un |= inside[i];
          fam.push_back(inside[i]);
        }
      if (un == u) out.push_back(fam);
    }
    if (u == 0) out.push_back({});  // the empty cover of the empty set
    return out;
  }

  std::string mask_str(OpenMask u) const {
    std::string s = "{";
    for (int i = 0; i < n_; ++i)
      if ((u >> i) & 1) s += (s.size() > 1 ? ",p" : "p") + std::to_string(i);
    return s + "}";
  }

  static FiniteSite one_point() { return FiniteSite(1, {1}); }
  /// Point 0 is open (generic), point 1 is closed.
  static FiniteSite sierpinski() { return FiniteSite(2, {1, 3}); }
  /// Chain of minimal opens {p0} < {p0,p1} < {p0,p1,p2}.
  static FiniteSite chain3() { return FiniteSite(3, {1, 3, 7}); }
  static FiniteSite discrete(int n) {
    std::vector<OpenMask> opens;
    for (OpenMask u = 0; u < (OpenMask(1) << n); ++u) opens.push_back(u);
    return FiniteSite(n, opens);
  }

  static FiniteSite from_json(const nlohmann::json& j) {
    const int n = j.at("points").get<int>();
    std::vector<OpenMask> opens;
    for (const auto& arr : j.at("opens")) {
      OpenMask u = 0;
      for (const auto& p : arr) u |= OpenMask(1) << p.get<int>();
      opens.push_back(u);
    }
    return FiniteSite(n, opens);
  }

 private:
  int n_;
  std::vector<OpenMask> opens_;
};

}  // namespace trop
