// The generalized lamplighter group: pairs (f, h) where f lies in the
// localized Laurent ring and h in Z^rank, with
//
//   (f, h) * (g, k) = (f + g * x^{h_0} (1+x)^{h_1} ..., h + k)
//   (f, h)^{-1}     = (-f * x^{-h_0} (1+x)^{-h_1} ..., -h)
//
// For rank 1 this is the classical lamplighter group R wr Z.
#pragma once

#include <string>
#include <vector>

#include "horolamp/poly.hpp"

namespace horolamp {

struct GroupElem {
  Poly f;
  std::vector<long long> h;
  bool operator==(const GroupElem&) const = default;
};

class Group {
public:
  // Same unit requirement as PolyRing: {2, ..., rank-1} invertible.
  Group(Ring ring, int rank) : poly_(std::move(ring), rank) {}

  const Ring& ring() const { return poly_.ring(); }
  int rank() const { return poly_.rank(); }
  const PolyRing& poly() const { return poly_; }

  GroupElem identity() const { return {poly_.zero(), std::vector<long long>(rank(), 0)}; }
  bool is_identity(const GroupElem& g) const { return g == identity(); }

  GroupElem mul(const GroupElem& a, const GroupElem& b) const;
  GroupElem inv(const GroupElem& a) const;

  // The standard generator (r, e_j): lamp value r deposited while stepping in
  // direction j.
  GroupElem pair_gen(const Int& r, int j) const;
  // The difference generator (r, e_j)(r, e_k)^{-1}, j < k.
  GroupElem diff_gen(const Int& r, int j, int k) const;

  GroupElem pow(const GroupElem& g, const Int& e) const;

private:
  PolyRing poly_;
};

}  // namespace horolamp
