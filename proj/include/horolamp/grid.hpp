// The rank-2 board model: elements of the coefficient ring at rank 2 drawn as
// finitely supported integer-grid configurations, where the cell (i,j) holds
// the coefficient of x^i (1+x)^j.  This representation is redundant; the
// triangle move
//     r at (i,j+1)  ->  r at (i,j) and r at (i+1,j)
// rewrites a configuration without changing the ring element, and two
// configurations describe the same element exactly when triangle moves
// connect them.
//
// Propagation pushes a configuration into a half-plane so that all of its
// mass inside sits on one line, and reads the resulting coefficient sequence.
// With the half-planes
//     infinity: p+q >= m      zero: p <= m      one: q <= m
// and level 0, the three readings reproduce PolyRing::seq_a exactly; the
// Pascal conversions below are the closed forms of the same rewriting.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "horolamp/group.hpp"

namespace horolamp {

using Cell = std::pair<long long, long long>;  // (i, j) -> coeff of x^i (1+x)^j
using Entries = std::map<Cell, Int>;           // zero-free

struct HalfPlane {
  enum class Kind { Infinity, Zero, One };
  Kind kind = Kind::Infinity;
  long long m = 0;
};

// A configuration together with the walker position (h_0, h_1).
struct Board {
  Entries entries;
  long long k = 0;
  long long l = 0;
};

// Basis placement: laurent coefficient of x^i at (i, 0), (1+x)^{-j}
// coefficient at (0, -j).  Requires rank 2 (NotSupported otherwise).
Entries config_from_poly(const PolyRing& P, const Poly& f);
Poly poly_from_config(const PolyRing& P, const Entries& e);

// Adds the null pattern: +r at (i,j) and (i+1,j), -r at (i,j+1).
void triangle_move(const Ring& R, Entries& e, long long i, long long j, const Int& r);

// The coefficient sequence read along the level line inside the half-plane
// after pushing all mass onto it.  Reading order (t = 0, 1, ...):
//   infinity, level l: cells (m-l+t, l)
//   zero,     level l: cells (m-t, l)
//   one,      level l: cells (l, m-t)
// Trailing zeros trimmed.
std::vector<Int> propagate(const Ring& R, const Entries& e, HalfPlane hp, long long level);

// Inverse of the reading step: puts a sequence onto the level line of hp.
Entries place_on_level(const Ring& R, const std::vector<Int>& seq, HalfPlane hp, long long level);

// The unique equivalent configuration supported on
//   L_{k,l} = { (i, l) : i in Z } u { (k, l-1), (k, l-2), ... },
// assembled from the three propagations to level l in infinity_{k+l} and
// zero_{k-1} and to level k in one_{l-1}.
Entries canonical_on_L(const Ring& R, const Entries& e, long long k, long long l);

// Closed-form sequence conversions between the coordinates of f (the b
// sequences, read at h = 0) and of the shifted element f * x^{h_0}(1+x)^{h_1}
// (the a sequences).  star is -1 (infinity), 0 or 1; m is h_1 for stars
// infinity/zero and h_0 for star one.  Validated convention:
//   star infinity/zero:  a_p = sum_i b_{p+i} C(m,i)            (m >= 0)
//                        a_p = sum_i (-1)^i b_{p+i} C(i-1-m,i) (m < 0)
//   star one:            the same shapes with the extra sign (-1)^{i+|m|}
//                        (m >= 0) resp. (-1)^{|m|} (m < 0).
// The b->a direction only looks forward, so outputs are finite.
std::vector<Int> pascal_b_to_a(const Ring& R, int star, long long m, const std::vector<Int>& b);
std::vector<Int> pascal_a_to_b(const Ring& R, int star, long long m, const std::vector<Int>& a);

// The board of a rank-2 group element: raw basis placement of f plus the
// walker at (h_0, h_1).
Board board_of(const Group& G, const GroupElem& g);

// Sparse listing "(i,j): v" per line in (i,j) order, then "pos: (k,l)".
std::string board_lines(const Board& b);
// Aligned matrix over the bounding box, walker cell bracketed.
std::string board_matrix(const Board& b);

}  // namespace horolamp
