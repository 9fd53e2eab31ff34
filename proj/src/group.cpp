#include "horolamp/group.hpp"

namespace horolamp {

GroupElem Group::mul(const GroupElem& a, const GroupElem& b) const {
  GroupElem out;
  out.f = poly_.add(a.f, poly_.mul_shift(b.f, a.h));
  out.h.resize(rank());
  for (int i = 0; i < rank(); ++i) out.h[i] = a.h[i] + b.h[i];
  return out;
}

GroupElem Group::inv(const GroupElem& a) const {
  GroupElem out;
  out.h.resize(rank());
  for (int i = 0; i < rank(); ++i) out.h[i] = -a.h[i];
  out.f = poly_.neg(poly_.mul_shift(a.f, out.h));
  return out;
}

GroupElem Group::pair_gen(const Int& r, int j) const {
  if (j < 0 || j >= rank()) throw NotSupported("generator direction out of range");
  GroupElem g = identity();
  g.f = poly_.constant(r);
  g.h[j] = 1;
  return g;
}

GroupElem Group::diff_gen(const Int& r, int j, int k) const {
  if (!(0 <= j && j < k && k < rank()))
    throw NotSupported("difference generator needs 0 <= j < k < rank");
  return mul(pair_gen(r, j), inv(pair_gen(r, k)));
}

GroupElem Group::pow(const GroupElem& g, const Int& e) const {
  GroupElem base = e >= 0 ? g : inv(g);
  Int n = e >= 0 ? e : Int(-e);
  GroupElem acc = identity();
  while (n > 0) {
    if ((n & 1) != 0) acc = mul(acc, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return acc;
}

}  // namespace horolamp
