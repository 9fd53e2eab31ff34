#include "horolamp/poly.hpp"

#include <stdexcept>

namespace horolamp {

long long height_inf(const std::vector<long long>& h) {
  long long sum = 0;
  for (long long v : h) sum += v;
  return -sum;
}

PolyRing::PolyRing(Ring ring, int rank) : ring_(std::move(ring)), rank_(rank) {
  if (rank < 1) throw NotSupported("rank must be >= 1");
  for (int u = 2; u < rank; ++u) {
    if (!ring_.is_unit(ring_.reduce(u)))
      throw NotInvertible(std::to_string(u), ring_.name());
  }
}

void PolyRing::add_laurent(Poly& acc, long long j, const Int& c) const {
  if (c == 0) return;
  auto it = acc.laurent.find(j);
  if (it == acc.laurent.end()) {
    acc.laurent.emplace(j, c);
    return;
  }
  it->second = ring_.add(it->second, c);
  if (it->second == 0) acc.laurent.erase(it);
}

void PolyRing::add_pole(Poly& acc, int i, long long j, const Int& c) const {
  if (j < 0) throw std::logic_error("pole order went negative");
  if (j == 0) {
    add_laurent(acc, 0, c);
    return;
  }
  if (c == 0) return;
  auto& m = acc.poles[i];
  auto it = m.find(j);
  if (it == m.end()) {
    m.emplace(j, c);
  } else {
    it->second = ring_.add(it->second, c);
    if (it->second == 0) m.erase(it);
  }
  if (m.empty()) acc.poles.erase(i);
}

Poly PolyRing::constant(const Int& r) const { return monomial(0, r); }

Poly PolyRing::monomial(long long j, const Int& r) const {
  Poly f;
  add_laurent(f, j, ring_.reduce(r));
  return f;
}

Poly PolyRing::pole_term(int i, long long j, const Int& r) const {
  if (i < 1 || i >= rank_) throw NotSupported("pole index out of range");
  if (j < 1) throw NotSupported("pole order must be >= 1");
  Poly f;
  add_pole(f, i, j, ring_.reduce(r));
  return f;
}

Poly PolyRing::add(const Poly& a, const Poly& b) const {
  Poly out = a;
  for (const auto& [j, c] : b.laurent) add_laurent(out, j, c);
  for (const auto& [i, m] : b.poles)
    for (const auto& [j, c] : m) add_pole(out, i, j, c);
  return out;
}

Poly PolyRing::neg(const Poly& a) const { return scale(ring_.reduce(-1), a); }

Poly PolyRing::sub(const Poly& a, const Poly& b) const { return add(a, neg(b)); }

Poly PolyRing::scale(const Int& r, const Poly& a) const {
  const Int rr = ring_.reduce(r);
  Poly out;
  for (const auto& [j, c] : a.laurent) add_laurent(out, j, ring_.mul(rr, c));
  for (const auto& [i, m] : a.poles)
    for (const auto& [j, c] : m) add_pole(out, i, j, ring_.mul(rr, c));
  return out;
}

// The reduction rules below rewrite the product of a unit (i+x)^{+-1} with a
// basis element back into basis coordinates:
//
//   (i+x) x^j           = i x^j + x^{j+1}
//   (i+x) (i+x)^{-j}    = (i+x)^{-(j-1)}
//   (i+x) (l+x)^{-j}    = (l+x)^{-(j-1)} + (i-l) (l+x)^{-j}            (l != i)
//   x^{-1} x^j          = x^{j-1}
//   x^{-1} (l+x)^{-j}   = l^{-j} x^{-1} - sum_{k=1}^{j} l^{-(j-k+1)} (l+x)^{-k}
//   (i+x)^{-1} x^j      = sum_{t=0}^{j-1} (-i)^t x^{j-1-t} + (-i)^j (i+x)^{-1}   (j >= 0)
//   (i+x)^{-1} x^{-m}   = sum_{t=1}^{m} (-1)^{t-1} i^{-t} x^{-(m-t+1)}
//                         + (-1)^m i^{-m} (i+x)^{-1}                    (m >= 1)
//   (i+x)^{-1} (i+x)^{-j} = (i+x)^{-(j+1)}
//   (i+x)^{-1} (l+x)^{-j} = sum_{t=0}^{j-1} (i-l)^{-1} (-(i-l)^{-1})^t (l+x)^{-(j-t)}
//                         + (-(i-l)^{-1})^j (i+x)^{-1}                  (l != i)
//
// The unrolled sums come from iterating the corresponding one-step identity.
Poly PolyRing::mul_unit(const Poly& f, int i, int sign) const {
  if (i < 0 || i >= rank_) throw NotSupported("shift direction out of range");
  if (sign != 1 && sign != -1) throw NotSupported("sign must be +1 or -1");
  Poly out;
  const Int ie = ring_.reduce(i);

  if (sign == 1) {
    for (const auto& [j, c] : f.laurent) {
      if (i != 0) add_laurent(out, j, ring_.mul(ie, c));
      add_laurent(out, j + 1, c);
    }
    for (const auto& [l, m] : f.poles) {
      const Int diff = ring_.reduce(skew_reduction_for_tests ? (i + l) : (i - l));
      for (const auto& [j, c] : m) {
        add_pole(out, l, j - 1, c);
        if (i != l) add_pole(out, l, j, ring_.mul(diff, c));
      }
    }
    return out;
  }

  if (i == 0) {
    for (const auto& [j, c] : f.laurent) add_laurent(out, j - 1, c);
    for (const auto& [l, m] : f.poles) {
      const Int linv = ring_.inv(ring_.reduce(l));
      for (const auto& [j, c] : m) {
        Int pw = ring_.one();
        for (long long k = j; k >= 1; --k) {
          pw = ring_.mul(pw, linv);
          add_pole(out, l, k, ring_.neg(ring_.mul(c, pw)));
        }
        add_laurent(out, -1, ring_.mul(c, pw));
      }
    }
    return out;
  }

  const Int iinv = ring_.inv(ie);
  const Int ineg = ring_.neg(ie);
  for (const auto& [j, c] : f.laurent) {
    if (j >= 0) {
      Int pw = c;
      for (long long t = 0; t < j; ++t) {
        add_laurent(out, j - 1 - t, pw);
        pw = ring_.mul(pw, ineg);
      }
      add_pole(out, i, 1, pw);
    } else {
      Int cur = c;
      for (long long t = 1; t <= -j; ++t) {
        cur = ring_.mul(cur, iinv);
        add_laurent(out, j + t - 1, cur);
        cur = ring_.neg(cur);
      }
      add_pole(out, i, 1, cur);
    }
  }
  for (const auto& [l, m] : f.poles) {
    if (l == i) {
      for (const auto& [j, c] : m) add_pole(out, i, j + 1, c);
      continue;
    }
    const Int u = ring_.inv(ring_.reduce(i - l));
    const Int uneg = ring_.neg(u);
    for (const auto& [j, c] : m) {
      Int pw = c;
      for (long long t = 0; t < j; ++t) {
        add_pole(out, l, j - t, ring_.mul(u, pw));
        pw = ring_.mul(pw, uneg);
      }
      add_pole(out, i, 1, pw);
    }
  }
  return out;
}

Poly PolyRing::mul_shift(const Poly& f, const std::vector<long long>& h) const {
  if (static_cast<int>(h.size()) != rank_)
    throw NotSupported("shift vector has wrong length");
  Poly out = f;
  for (int i = 0; i < rank_; ++i) {
    const int sign = h[i] >= 0 ? 1 : -1;
    for (long long t = 0; t < (h[i] >= 0 ? h[i] : -h[i]); ++t)
      out = mul_unit(out, i, sign);
  }
  return out;
}

Int PolyRing::coeff_x(const Poly& f, long long j) const {
  auto it = f.laurent.find(j);
  return it == f.laurent.end() ? Int(0) : it->second;
}

Int PolyRing::coeff_pole(const Poly& f, int i, long long j) const {
  if (j < 1) throw NotSupported("pole order must be >= 1");
  if (i == 0) return coeff_x(f, -j);
  auto pit = f.poles.find(i);
  if (pit == f.poles.end()) return 0;
  auto it = pit->second.find(j);
  return it == pit->second.end() ? Int(0) : it->second;
}

namespace {
void trim(std::vector<Int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}
}  // namespace

std::vector<Int> PolyRing::seq_a(const Poly& f, const std::vector<long long>& h,
                                 int star) const {
  if (static_cast<int>(h.size()) != rank_)
    throw NotSupported("height vector has wrong length");
  if (star < -1 || star >= rank_) throw NotSupported("star out of range");
  std::vector<long long> q(rank_, 0);
  std::vector<Int> seq;
  if (star == -1) {
    q[0] = height_inf(h);
    const Poly g = mul_shift(f, q);
    if (!g.laurent.empty()) {
      const long long top = g.laurent.rbegin()->first;
      for (long long j = 0; j <= top; ++j) seq.push_back(coeff_x(g, j));
    }
  } else {
    q[star] = -h[star];
    const Poly g = mul_shift(f, q);
    long long top = 0;
    if (star == 0) {
      if (!g.laurent.empty()) top = -g.laurent.begin()->first;
    } else if (auto it = g.poles.find(star); it != g.poles.end()) {
      top = it->second.rbegin()->first;
    }
    for (long long j = 1; j <= top; ++j) seq.push_back(coeff_pole(g, star, j));
  }
  trim(seq);
  return seq;
}

Poly PolyRing::from_sequences(const std::vector<std::vector<Int>>& b) const {
  if (static_cast<int>(b.size()) != rank_ + 1)
    throw NotSupported("expected one sequence per coordinate");
  Poly f;
  for (std::size_t p = 0; p < b[0].size(); ++p)
    add_laurent(f, static_cast<long long>(p), ring_.reduce(b[0][p]));
  for (int s = 0; s < rank_; ++s) {
    for (std::size_t p = 0; p < b[1 + s].size(); ++p) {
      const long long j = static_cast<long long>(p) + 1;
      if (s == 0)
        add_laurent(f, -j, ring_.reduce(b[1][p]));
      else
        add_pole(f, s, j, ring_.reduce(b[1 + s][p]));
    }
  }
  return f;
}

}  // namespace horolamp
