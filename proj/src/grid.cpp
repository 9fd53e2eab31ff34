#include "horolamp/grid.hpp"

#include <algorithm>

#include "horolamp/errors.hpp"

namespace horolamp {

namespace {

void add_cell(const Ring& R, Entries& e, long long i, long long j, const Int& v) {
  if (v == 0) return;
  auto it = e.find({i, j});
  if (it == e.end()) {
    e.emplace(Cell{i, j}, v);
    return;
  }
  it->second = R.add(it->second, v);
  if (it->second == 0) e.erase(it);
}

using Line = std::map<long long, Int>;        // position -> value along one row/column
using Lines = std::map<long long, Line>;      // row index q -> row (or column index -> column)

void add_at(const Ring& R, Line& line, long long p, const Int& v) {
  if (v == 0) return;
  auto it = line.find(p);
  if (it == line.end()) {
    line.emplace(p, v);
    return;
  }
  it->second = R.add(it->second, v);
  if (it->second == 0) line.erase(it);
}

std::vector<Int> read_line(const Line& line, long long start, int dir) {
  // Collect line[start], line[start + dir], ... out to the support edge.
  std::vector<Int> out;
  if (!line.empty()) {
    long long edge = dir > 0 ? line.rbegin()->first : line.begin()->first;
    for (long long p = start; dir > 0 ? p <= edge : p >= edge; p += dir) {
      auto it = line.find(p);
      out.push_back(it == line.end() ? Int(0) : it->second);
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace

Entries config_from_poly(const PolyRing& P, const Poly& f) {
  if (P.rank() != 2)
    throw NotSupported("grid configurations exist at rank 2, not rank " +
                       std::to_string(P.rank()));
  Entries e;
  for (const auto& [j, c] : f.laurent) e[{j, 0}] = c;
  for (const auto& [i, m] : f.poles)
    for (const auto& [j, c] : m) {
      if (i != 1) throw NotSupported("rank-2 elements only carry poles at 1+x");
      e[{0, -j}] = c;
    }
  return e;
}

Poly poly_from_config(const PolyRing& P, const Entries& e) {
  if (P.rank() != 2)
    throw NotSupported("grid configurations exist at rank 2, not rank " +
                       std::to_string(P.rank()));
  Poly f = P.zero();
  for (const auto& [cell, v] : e)
    f = P.add(f, P.mul_shift(P.constant(v), {cell.first, cell.second}));
  return f;
}

void triangle_move(const Ring& R, Entries& e, long long i, long long j, const Int& r) {
  const Int v = R.reduce(r);
  add_cell(R, e, i, j, v);
  add_cell(R, e, i + 1, j, v);
  add_cell(R, e, i, j + 1, R.neg(v));
}

std::vector<Int> propagate(const Ring& R, const Entries& e, HalfPlane hp, long long level) {
  using Kind = HalfPlane::Kind;
  const long long m = hp.m;
  Lines lines;  // rows for infinity/zero, columns for one
  for (const auto& [cell, v] : e) {
    if (hp.kind == Kind::One)
      add_at(R, lines[cell.first], cell.second, v);
    else
      add_at(R, lines[cell.second], cell.first, v);
  }

  if (hp.kind == Kind::Infinity || hp.kind == Kind::Zero) {
    const bool inf = hp.kind == Kind::Infinity;
    // Rows above the level fold down: x^p (1+x)^q = x^p (1+x)^{q-1} + x^{p+1} (1+x)^{q-1}.
    // Mass can only keep or lower p+q and keep or raise p, so anything already
    // outside the half-plane stays outside and is dropped.
    while (!lines.empty() && lines.rbegin()->first > level) {
      const long long q = lines.rbegin()->first;
      Line row = std::move(lines.rbegin()->second);
      lines.erase(q);
      Line& below = lines[q - 1];
      for (const auto& [p, v] : row) {
        if (inf ? (p + q - 1 >= m) : (p <= m)) add_at(R, below, p, v);
        if (inf ? (p + q >= m) : (p + 1 <= m)) add_at(R, below, p + 1, v);
      }
      if (below.empty()) lines.erase(q - 1);
    }
    // Rows below the level fold up via the residue chain of
    // x^p (1+x)^q = x^{p-1} (1+x)^{q+1} - x^{p-1} (1+x)^q   (infinity: rightmost first)
    // x^p (1+x)^q = x^p (1+x)^{q+1} - x^{p+1} (1+x)^q       (zero: leftmost first)
    // cut off where the emitted cell would leave the half-plane.
    while (!lines.empty() && lines.begin()->first < level) {
      const long long q = lines.begin()->first;
      Line row = std::move(lines.begin()->second);
      lines.erase(q);
      if (row.empty()) continue;
      Line& above = lines[q + 1];
      Int w = R.zero();
      if (inf) {
        for (long long p = row.rbegin()->first; p >= m - q; --p) {
          auto it = row.find(p);
          w = R.sub(it == row.end() ? Int(0) : it->second, w);
          add_at(R, above, p - 1, w);
        }
      } else {
        for (long long p = row.begin()->first; p <= m; ++p) {
          auto it = row.find(p);
          w = R.sub(it == row.end() ? Int(0) : it->second, w);
          add_at(R, above, p, w);
        }
      }
      if (above.empty()) lines.erase(q + 1);
    }
    auto it = lines.find(level);
    if (it == lines.end()) return {};
    return inf ? read_line(it->second, m - level, +1) : read_line(it->second, m, -1);
  }

  // Kind::One: columns, pushing toward column `level`; q never decreases under
  // either rule, so cells above q = m are dropped as they appear.
  while (!lines.empty() && lines.rbegin()->first > level) {
    const long long t = lines.rbegin()->first;
    Line col = std::move(lines.rbegin()->second);
    lines.erase(t);
    Line& left = lines[t - 1];
    // x^t (1+x)^s = x^{t-1} (1+x)^{s+1} - x^{t-1} (1+x)^s
    for (const auto& [s, v] : col) {
      if (s > m) continue;
      if (s + 1 <= m) add_at(R, left, s + 1, v);
      add_at(R, left, s, R.neg(v));
    }
    if (left.empty()) lines.erase(t - 1);
  }
  while (!lines.empty() && lines.begin()->first < level) {
    const long long t = lines.begin()->first;
    Line col = std::move(lines.begin()->second);
    lines.erase(t);
    if (col.empty()) continue;
    Line& right = lines[t + 1];
    // x^t (1+x)^s = x^t (1+x)^{s+1} - x^{t+1} (1+x)^s, ascending residue chain.
    Int w = R.zero();
    for (long long s = col.begin()->first; s <= m; ++s) {
      auto it = col.find(s);
      w = R.add(it == col.end() ? Int(0) : it->second, w);
      add_at(R, right, s, R.neg(w));
    }
    if (right.empty()) lines.erase(t + 1);
  }
  auto it = lines.find(level);
  if (it == lines.end()) return {};
  return read_line(it->second, m, -1);
}

Entries place_on_level(const Ring& R, const std::vector<Int>& seq, HalfPlane hp, long long level) {
  Entries e;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    const long long tt = static_cast<long long>(t);
    switch (hp.kind) {
      case HalfPlane::Kind::Infinity: add_cell(R, e, hp.m - level + tt, level, seq[t]); break;
      case HalfPlane::Kind::Zero: add_cell(R, e, hp.m - tt, level, seq[t]); break;
      case HalfPlane::Kind::One: add_cell(R, e, level, hp.m - tt, seq[t]); break;
    }
  }
  return e;
}

Entries canonical_on_L(const Ring& R, const Entries& e, long long k, long long l) {
  const auto right = propagate(R, e, {HalfPlane::Kind::Infinity, k + l}, l);
  const auto left = propagate(R, e, {HalfPlane::Kind::Zero, k - 1}, l);
  const auto down = propagate(R, e, {HalfPlane::Kind::One, l - 1}, k);
  Entries out;
  for (std::size_t t = 0; t < right.size(); ++t)
    add_cell(R, out, k + static_cast<long long>(t), l, right[t]);
  for (std::size_t t = 0; t < left.size(); ++t)
    add_cell(R, out, k - 1 - static_cast<long long>(t), l, left[t]);
  for (std::size_t t = 0; t < down.size(); ++t)
    add_cell(R, out, k, l - 1 - static_cast<long long>(t), down[t]);
  return out;
}

std::vector<Int> pascal_b_to_a(const Ring& R, int star, long long m, const std::vector<Int>& b) {
  const bool one = star == 1;
  const long long absm = m < 0 ? -m : m;
  const long long len = static_cast<long long>(b.size());
  std::vector<Int> a;
  a.reserve(b.size());
  for (long long p = 0; p < len; ++p) {
    Int acc = R.zero();
    if (m >= 0) {
      const long long top = std::min(m, len - 1 - p);
      for (long long i = 0; i <= top; ++i) {
        const Int term = R.mul(R.reduce(binomial(m, i)), b[p + i]);
        const bool neg = one && ((i + absm) % 2 != 0);
        acc = neg ? R.sub(acc, term) : R.add(acc, term);
      }
    } else {
      for (long long i = 0; i < len - p; ++i) {
        const Int term = R.mul(R.reduce(binomial(i - 1 - m, i)), b[p + i]);
        const bool neg = one ? (absm % 2 != 0) : (i % 2 != 0);
        acc = neg ? R.sub(acc, term) : R.add(acc, term);
      }
    }
    a.push_back(acc);
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<Int> pascal_a_to_b(const Ring& R, int star, long long m, const std::vector<Int>& a) {
  const bool one = star == 1;
  const long long absm = m < 0 ? -m : m;
  const long long len = static_cast<long long>(a.size());
  std::vector<Int> b;
  b.reserve(a.size());
  for (long long p = 0; p < len; ++p) {
    Int acc = R.zero();
    if (m <= 0) {
      const long long top = std::min(-m, len - 1 - p);
      for (long long i = 0; i <= top; ++i) {
        const Int term = R.mul(R.reduce(binomial(-m, i)), a[p + i]);
        const bool neg = one && ((i + absm) % 2 != 0);
        acc = neg ? R.sub(acc, term) : R.add(acc, term);
      }
    } else {
      for (long long i = 0; i < len - p; ++i) {
        const Int term = R.mul(R.reduce(binomial(i - 1 + m, i)), a[p + i]);
        const bool neg = one ? (absm % 2 != 0) : (i % 2 != 0);
        acc = neg ? R.sub(acc, term) : R.add(acc, term);
      }
    }
    b.push_back(acc);
  }
  while (!b.empty() && b.back() == 0) b.pop_back();
  return b;
}

Board board_of(const Group& G, const GroupElem& g) {
  Board b;
  b.entries = config_from_poly(G.poly(), g.f);
  b.k = g.h[0];
  b.l = g.h[1];
  return b;
}

std::string board_lines(const Board& b) {
  std::string out;
  for (const auto& [cell, v] : b.entries) {
    out += '(' + std::to_string(cell.first) + ',' + std::to_string(cell.second) +
           "): " + to_string(v) + '\n';
  }
  out += "pos: (" + std::to_string(b.k) + ',' + std::to_string(b.l) + ")\n";
  return out;
}

std::string board_matrix(const Board& b) {
  long long i0 = b.k, i1 = b.k, j0 = b.l, j1 = b.l;
  for (const auto& [cell, v] : b.entries) {
    (void)v;
    i0 = std::min(i0, cell.first);
    i1 = std::max(i1, cell.first);
    j0 = std::min(j0, cell.second);
    j1 = std::max(j1, cell.second);
  }
  auto cell_text = [&](long long i, long long j) {
    auto it = b.entries.find({i, j});
    std::string s = it == b.entries.end() ? "." : to_string(it->second);
    if (i == b.k && j == b.l) s = "[" + s + "]";
    return s;
  };
  std::size_t w = 1;
  for (long long j = j0; j <= j1; ++j)
    for (long long i = i0; i <= i1; ++i) w = std::max(w, cell_text(i, j).size());
  std::string out = "i in [" + std::to_string(i0) + "," + std::to_string(i1) + "], j in [" +
                    std::to_string(j0) + "," + std::to_string(j1) + "], pos (" +
                    std::to_string(b.k) + "," + std::to_string(b.l) + ")\n";
  for (long long j = j1; j >= j0; --j) {
    out += "j=" + std::to_string(j) + ":";
    for (long long i = i0; i <= i1; ++i) {
      std::string s = cell_text(i, j);
      out += ' ';
      out.append(w - s.size(), ' ');
      out += s;
    }
    out += '\n';
  }
  return out;
}

}  // namespace horolamp
