// Exact coefficient rings: the integers and the integers modulo m.
//
// A Ring is a small runtime handle; elements are plain Ints kept in canonical
// form (any integer for Z, a representative in [0, m) for Z/m).  All
// operations reduce their result, so two equal ring elements always compare
// equal as Ints.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "horolamp/errors.hpp"
#include "horolamp/numeric.hpp"

namespace horolamp {

class Ring {
public:
  static Ring integers() { return Ring(0); }
  static Ring residues(const Int& modulus);  // Z/modulus, modulus >= 1
  // Accepts "Z" or "Z/<m>" with m >= 1.
  static Ring parse(const std::string& name);

  bool modular() const { return modulus_ != 0; }
  // 0 denotes the integers.
  const Int& modulus() const { return modulus_; }
  std::string name() const;

  Int reduce(const Int& v) const;
  Int reduce(long long v) const { return reduce(Int(v)); }

  Int zero() const { return 0; }
  Int one() const { return reduce(1); }
  Int add(const Int& a, const Int& b) const { return reduce(a + b); }
  Int sub(const Int& a, const Int& b) const { return reduce(a - b); }
  Int neg(const Int& a) const { return reduce(-a); }
  Int mul(const Int& a, const Int& b) const { return reduce(a * b); }

  bool is_unit(const Int& a) const;
  // Throws NotInvertible when a has no inverse.
  Int inv(const Int& a) const;

  // The elements available for enumeration-style constructions.  For Z/m this
  // is 0, 1, ..., m-1 and the bound is ignored; for Z a bound is required and
  // the order is 0, 1, -1, 2, -2, ..., bound, -bound.
  std::vector<Int> elements(std::optional<long long> bound) const;

  bool operator==(const Ring&) const = default;

private:
  explicit Ring(Int modulus) : modulus_(std::move(modulus)) {}
  Int modulus_;
};

}  // namespace horolamp
