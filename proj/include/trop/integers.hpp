#pragma once

/// The ring of integers.

#include <string>

#include "trop/numeric.hpp"

namespace trop {

struct IntegerRing {
  using value_type = Int;

  std::string name() const { return "Z"; }
  bool is_field() const { return false; }
  bool is_domain() const { return true; }

  Int zero() const { return 0; }
  Int one() const { return 1; }
  Int add(const Int& a, const Int& b) const { return a + b; }
  Int sub(const Int& a, const Int& b) const { return a - b; }
  Int neg(const Int& a) const { return -a; }
  Int mul(const Int& a, const Int& b) const { return a * b; }
  bool eq(const Int& a, const Int& b) const { return a == b; }
  bool is_zero(const Int& a) const { return a == 0; }

  std::string to_string(const Int& a) const { return a.get_str(); }
  Int parse(const std::string& s) const { return int_from_string(s); }
};

}  // namespace trop
