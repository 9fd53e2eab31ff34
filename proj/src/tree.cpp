#include "horolamp/tree.hpp"

namespace horolamp {

namespace {
void trim(std::vector<Int>& labels) {
  while (!labels.empty() && labels.back() == 0) labels.pop_back();
}
}  // namespace

TreeAddress down(const TreeAddress& a) {
  TreeAddress out;
  out.height = a.height - 1;
  if (!a.labels.empty())
    out.labels.assign(a.labels.begin() + 1, a.labels.end());
  return out;
}

TreeAddress up(const TreeAddress& a, const Int& label) {
  TreeAddress out;
  out.height = a.height + 1;
  out.labels.reserve(a.labels.size() + 1);
  out.labels.push_back(label);
  out.labels.insert(out.labels.end(), a.labels.begin(), a.labels.end());
  trim(out.labels);
  return out;
}

HoroVertex phi(const Group& G, const GroupElem& g) {
  HoroVertex v;
  v.coords.resize(G.rank() + 1);
  v.coords[0] = {G.poly().seq_a(g.f, g.h, -1), height_inf(g.h)};
  for (int s = 0; s < G.rank(); ++s)
    v.coords[1 + s] = {G.poly().seq_a(g.f, g.h, s), g.h[s]};
  return v;
}

GroupElem phi_inv(const Group& G, const HoroVertex& v) {
  const int rank = G.rank();
  const PolyRing& P = G.poly();
  if (static_cast<int>(v.coords.size()) != rank + 1)
    throw InvalidVertex("expected " + std::to_string(rank + 1) + " coordinates, got " +
                        std::to_string(v.coords.size()));
  std::vector<long long> h(rank);
  for (int s = 0; s < rank; ++s) h[s] = v.coords[1 + s].height;
  if (v.coords[0].height != height_inf(h))
    throw InvalidVertex("coordinate heights do not sum to zero");

  const std::vector<long long> zero_shift(rank, 0);
  std::vector<std::vector<Int>> b(rank + 1);

  // Transport the infinity sequence: the x^{>=0} coordinates of a balanced
  // shift of p depend only on those of p, so shifting a carrier that agrees
  // with x^{h_inf} f in that window lands on the window of
  // x^{-h_0} (1+x)^{-h_1} ... f.
  {
    std::vector<std::vector<Int>> carrier_seqs(rank + 1);
    carrier_seqs[0] = v.coords[0].labels;
    const Poly carrier = P.from_sequences(carrier_seqs);
    std::vector<long long> q(rank);
    q[0] = -v.coords[0].height - h[0];
    for (int s = 1; s < rank; ++s) q[s] = -h[s];
    b[0] = P.seq_a(P.mul_shift(carrier, q), zero_shift, -1);
  }
  // Transport each pole sequence: shifts avoiding the pole at s preserve the
  // dependence of the (s+x)-pole coordinates on themselves.
  for (int s = 0; s < rank; ++s) {
    std::vector<std::vector<Int>> carrier_seqs(rank + 1);
    carrier_seqs[1 + s] = v.coords[1 + s].labels;
    const Poly carrier = P.from_sequences(carrier_seqs);
    std::vector<long long> q(rank);
    for (int i = 0; i < rank; ++i) q[i] = i == s ? 0 : -h[i];
    b[1 + s] = P.seq_a(P.mul_shift(carrier, q), zero_shift, s);
  }

  GroupElem g;
  g.h = h;
  g.f = P.mul_shift(P.from_sequences(b), h);
  return g;
}

HoroVertex apply_move(const HoroVertex& v, int down_coord, int up_coord, const Int& label) {
  HoroVertex out = v;
  out.coords[down_coord] = down(v.coords[down_coord]);
  out.coords[up_coord] = up(v.coords[up_coord], label);
  return out;
}

std::optional<Move> adjacent(const HoroVertex& v, const HoroVertex& w) {
  if (v.coords.size() != w.coords.size()) return std::nullopt;
  int down_coord = -1, up_coord = -1;
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (v.coords[i] == w.coords[i]) continue;
    if (w.coords[i].height == v.coords[i].height - 1) {
      if (down_coord >= 0) return std::nullopt;
      down_coord = static_cast<int>(i);
    } else if (w.coords[i].height == v.coords[i].height + 1) {
      if (up_coord >= 0) return std::nullopt;
      up_coord = static_cast<int>(i);
    } else {
      return std::nullopt;
    }
  }
  if (down_coord < 0 || up_coord < 0) return std::nullopt;
  if (down(v.coords[down_coord]) != w.coords[down_coord]) return std::nullopt;
  const Int label = w.coords[up_coord].labels.empty() ? Int(0) : w.coords[up_coord].labels[0];
  if (up(v.coords[up_coord], label) != w.coords[up_coord]) return std::nullopt;
  return Move{down_coord, up_coord, label};
}

std::vector<std::pair<Move, HoroVertex>> neighbors(const HoroVertex& v,
                                                   const std::vector<Int>& labels) {
  std::vector<std::pair<Move, HoroVertex>> out;
  const int n = static_cast<int>(v.coords.size());
  for (int d = 0; d < n; ++d)
    for (int u = 0; u < n; ++u) {
      if (d == u) continue;
      for (const Int& r : labels)
        out.emplace_back(Move{d, u, r}, apply_move(v, d, u, r));
    }
  return out;
}

}  // namespace horolamp
