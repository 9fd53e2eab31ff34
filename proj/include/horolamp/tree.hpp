// Vertices of the horocyclic product of rank+1 branching trees, and the
// bijection between them and group elements.
//
// A tree vertex is addressed by the label sequence of its descending path
// (nearest step first, trailing zeros trimmed) together with its height.
// Moving down drops the first label and lowers the height; moving up along
// the edge labeled r prepends r and raises the height.
//
// A product vertex carries rank+1 addresses, one per tree, in the coordinate
// order (infinity, 0, 1, ..., rank-1); their heights sum to zero.
#pragma once

#include <optional>
#include <vector>

#include "horolamp/group.hpp"

namespace horolamp {

struct TreeAddress {
  std::vector<Int> labels;
  long long height = 0;
  bool operator==(const TreeAddress&) const = default;
};

TreeAddress down(const TreeAddress& a);
TreeAddress up(const TreeAddress& a, const Int& label);

struct HoroVertex {
  std::vector<TreeAddress> coords;
  bool operator==(const HoroVertex&) const = default;
};

// A single product move: one coordinate steps down, another steps up along
// the edge labeled `label`.  Indices refer to the coordinate order above.
struct Move {
  int down;
  int up;
  Int label;
};

// (f, h) -> ((a_inf, h_inf), (a_0, h_0), ..., (a_{rank-1}, h_{rank-1})) with
// the sequences of PolyRing::seq_a as labels.
HoroVertex phi(const Group& G, const GroupElem& g);

// Inverse of phi.  Throws InvalidVertex when the payload is not a vertex
// (wrong coordinate count, heights not summing to zero).
GroupElem phi_inv(const Group& G, const HoroVertex& v);

HoroVertex apply_move(const HoroVertex& v, int down_coord, int up_coord, const Int& label);

// Some(move) when w is reachable from v by a single product move.
std::optional<Move> adjacent(const HoroVertex& v, const HoroVertex& w);

// All moves with labels drawn from `labels`, in deterministic order:
// ordered coordinate pairs (down, up), then label order.
std::vector<std::pair<Move, HoroVertex>> neighbors(const HoroVertex& v,
                                                   const std::vector<Int>& labels);

}  // namespace horolamp
