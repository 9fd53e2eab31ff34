// The coefficient module of the lamplighter construction: Laurent polynomials
// over R in one variable x, localized so that 1/(i+x) exists for
// i = 1, ..., rank-1.
//
// Every element is kept in partial-fraction normal form with respect to the
// R-basis  { x^j : j in Z }  u  { (i+x)^{-j} : 1 <= i < rank, j >= 1 }.
// `laurent` stores the x^j coordinates (negative j covers the poles at x
// itself) and `poles[i]` stores the (i+x)^{-j} coordinates.  Both maps are
// zero-free, so structural equality is semantic equality.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "horolamp/ring.hpp"

namespace horolamp {

struct Poly {
  std::map<long long, Int> laurent;                      // j -> coeff of x^j
  std::map<int, std::map<long long, Int>> poles;         // i -> { j >= 1 -> coeff of (i+x)^{-j} }

  bool operator==(const Poly&) const = default;
  bool is_zero() const { return laurent.empty() && poles.empty(); }
};

class PolyRing {
public:
  // Requires every i in {2, ..., rank-1} to be a unit of the coefficient
  // ring; otherwise the reduction rules below would need inverses that do
  // not exist.  Throws NotInvertible naming the first offender.
  PolyRing(Ring ring, int rank);

  const Ring& ring() const { return ring_; }
  int rank() const { return rank_; }

  Poly zero() const { return {}; }
  Poly constant(const Int& r) const;
  // r * x^j
  Poly monomial(long long j, const Int& r) const;
  // r * (i+x)^{-j}, 1 <= i < rank, j >= 1
  Poly pole_term(int i, long long j, const Int& r) const;

  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly neg(const Poly& a) const;
  Poly scale(const Int& r, const Poly& a) const;

  // Multiplication by the unit (i+x)^sign, 0 <= i < rank, sign = +1 or -1.
  // (i = 0 means multiplication by x^sign.)
  Poly mul_unit(const Poly& f, int i, int sign) const;
  // Multiplication by x^{h[0]} (1+x)^{h[1]} ... (rank-1+x)^{h[rank-1]}.
  Poly mul_shift(const Poly& f, const std::vector<long long>& h) const;

  // Basis coordinates.  coeff_pole with i = 0 reads the x^{-j} coordinate.
  Int coeff_x(const Poly& f, long long j) const;
  Int coeff_pole(const Poly& f, int i, long long j) const;

  // The coordinate sequences attached to a group element (f, h).  star = -1
  // asks for the coefficients of x^0, x^1, ... of x^{h_inf} f where
  // h_inf = -sum(h); star = s in [0, rank) asks for the coefficients of
  // (s+x)^{-1}, (s+x)^{-2}, ... of (s+x)^{-h_s} f.  Trailing zeros trimmed.
  std::vector<Int> seq_a(const Poly& f, const std::vector<long long>& h, int star) const;

  // Rebuilds the element whose basis coordinates are exactly the given
  // sequences: b[0] fills x^0, x^1, ...; b[1] fills x^{-1}, x^{-2}, ...;
  // b[1+i] (i >= 1) fills (i+x)^{-1}, (i+x)^{-2}, ...
  Poly from_sequences(const std::vector<std::vector<Int>>& b) const;

  // Test-only hook: when set, one reduction rule of mul_unit is applied with
  // a wrong coefficient, so downstream consistency checks must start failing.
  static inline bool skew_reduction_for_tests = false;

private:
  void add_laurent(Poly& acc, long long j, const Int& c) const;
  void add_pole(Poly& acc, int i, long long j, const Int& c) const;
  Ring ring_;
  int rank_;
};

// -sum(h): the height of the distinguished coordinate.
long long height_inf(const std::vector<long long>& h);

}  // namespace horolamp
