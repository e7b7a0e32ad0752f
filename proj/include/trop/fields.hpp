#pragma once

/// Coefficient fields and residue rings: Q and Z/n (a prime field when n is
/// prime).  Ring types are small value objects; elements are plain values
/// interpreted through the ring, so one residue type serves every modulus.

#include <stdexcept>
#include <string>

#include "trop/numeric.hpp"

namespace trop {

struct RationalField {
  using value_type = Rat;

  std::string name() const { return "Q"; }
  bool is_field() const { return true; }
  bool is_domain() const { return true; }

  Rat zero() const { return Rat(0); }
  Rat one() const { return Rat(1); }
  Rat add(const Rat& a, const Rat& b) const { return a + b; }
  Rat sub(const Rat& a, const Rat& b) const { return a - b; }
  Rat neg(const Rat& a) const { return -a; }
  Rat mul(const Rat& a, const Rat& b) const { return a * b; }
  Rat inv(const Rat& a) const {
    if (a == 0) throw std::invalid_argument("inverse of 0 in Q");
    return 1 / a;
  }
  bool eq(const Rat& a, const Rat& b) const { return a == b; }
  bool is_zero(const Rat& a) const { return a == 0; }

  std::string to_string(const Rat& a) const { return rat_to_string(a); }
  Rat parse(const std::string& s) const { return rat_from_string(s); }
};

/// Z/n with residues in [0, n).
class ModularRing {
 public:
  using value_type = Int;

  explicit ModularRing(Int n) : n_(std::move(n)) {
    if (n_ < 2) throw std::invalid_argument("modulus must be >= 2");
  }

  const Int& modulus() const { return n_; }
  std::string name() const { return "Z/" + n_.get_str(); }
  bool is_field() const { return is_prime(n_); }
  bool is_domain() const { return is_field(); }

  Int reduce(const Int& a) const { return mod_floor(a, n_); }

  Int zero() const { return 0; }
  Int one() const { return reduce(1); }
  Int add(const Int& a, const Int& b) const { return reduce(a + b); }
  Int sub(const Int& a, const Int& b) const { return reduce(a - b); }
  Int neg(const Int& a) const { return reduce(-a); }
  Int mul(const Int& a, const Int& b) const { return reduce(a * b); }

  Int inv(const Int& a) const {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), n_.get_mpz_t()) == 0)
      throw std::invalid_argument(to_string(a) + " is not a unit in " + name());
    return r;
  }

  bool eq(const Int& a, const Int& b) const { return reduce(a) == reduce(b); }
  bool is_zero(const Int& a) const { return reduce(a) == 0; }

  std::string to_string(const Int& a) const { return reduce(a).get_str(); }
  Int parse(const std::string& s) const { return reduce(int_from_string(s)); }

 private:
  Int n_;
};

}  // namespace trop
