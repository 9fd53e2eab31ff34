#include "doctest.h"

#include "horolamp/grid.hpp"
#include "horolamp/words.hpp"
#include "oracle.hpp"

using namespace horolamp;
using namespace horolamp::oracle;

namespace {

using Kind = HalfPlane::Kind;

Entries rand_config(const Ring& R, std::mt19937_64& rng) {
  Entries e;
  const long long cells = pick(rng, 0, 6);
  for (long long t = 0; t < cells; ++t) {
    const Int v = rand_coeff(R, rng, 5);
    if (v == 0) continue;
    const Cell c{pick(rng, -4, 4), pick(rng, -4, 4)};
    auto it = e.find(c);
    if (it == e.end())
      e.emplace(c, v);
    else if ((it->second = R.add(it->second, v)) == 0)
      e.erase(it);
  }
  return e;
}

std::vector<Int> rand_seq(const Ring& R, std::mt19937_64& rng, long long max_len = 6) {
  std::vector<Int> v(pick(rng, 1, max_len));
  for (auto& x : v) x = rand_coeff(R, rng, 5);
  if (v.back() == 0) v.back() = R.one();
  return v;
}

}  // namespace

TEST_CASE("configurations and elements translate both ways") {
  const PolyRing P(Ring::integers(), 2);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    const Poly f = rand_poly(P, rng);
    CHECK(poly_from_config(P, config_from_poly(P, f)) == f);
  }
  const PolyRing P1(Ring::integers(), 1);
  CHECK_THROWS_AS(config_from_poly(P1, P1.zero()), NotSupported);
}

TEST_CASE("triangle moves never change the element") {
  const PolyRing P(Ring::residues(6), 2);
  const Ring& R = P.ring();
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const Poly f = rand_poly(P, rng);
    Entries e = config_from_poly(P, f);
    for (int mv = 0, n = static_cast<int>(pick(rng, 1, 8)); mv < n; ++mv)
      triangle_move(R, e, pick(rng, -4, 4), pick(rng, -4, 4), rand_coeff(R, rng, 5));
    CHECK(poly_from_config(P, e) == f);
  }
}

TEST_CASE("propagation goldens") {
  const Ring Z = Ring::integers();
  // (1+x) at walker height sum 1 reads off a single 1
  CHECK(propagate(Z, {{{0, 1}, 1}}, {Kind::Infinity, 1}, 0) == std::vector<Int>{1});
  // (1+x)^{-1}: nothing at or beyond the line p+q >= 0 survives
  CHECK(propagate(Z, {{{0, -1}, 1}}, {Kind::Infinity, 0}, 0).empty());
  // x (1+x)^{-1} = 1 - (1+x)^{-1} has x^0 coefficient 1
  CHECK(propagate(Z, {{{0, -1}, 1}}, {Kind::Infinity, -1}, 0) == std::vector<Int>{1});
  // x^2 (1+x)^{-2} = 1 - 2(1+x)^{-1} + (1+x)^{-2}
  CHECK(propagate(Z, {{{0, -2}, 1}}, {Kind::Infinity, -2}, 0) == std::vector<Int>{1});
  // x^{-4} x^2 = x^{-2}: reading x^{-1}, x^{-2}, ...
  CHECK(propagate(Z, {{{2, 0}, 1}}, {Kind::Zero, 3}, 0) == std::vector<Int>{0, 1});
  // x^2 (1+x)^{-1} = x - 1 + (1+x)^{-1}: pole part (1)
  CHECK(propagate(Z, {{{2, 0}, 1}}, {Kind::One, 0}, 0) == std::vector<Int>{1});
}

TEST_CASE("propagation at level zero equals the polynomial sequences") {
  std::mt19937_64 rng(17);
  for (const Ring& R : {Ring::integers(), Ring::residues(3)}) {
    const PolyRing P(R, 2);
    for (int t = 0; t < 120; ++t) {
      const Poly f = rand_poly(P, rng);
      const std::vector<long long> h = rand_heights(2, rng);
      const Entries cfg = config_from_poly(P, f);
      CHECK(propagate(R, cfg, {Kind::Infinity, h[0] + h[1]}, 0) == P.seq_a(f, h, -1));
      CHECK(propagate(R, cfg, {Kind::Zero, h[0] - 1}, 0) == P.seq_a(f, h, 0));
      CHECK(propagate(R, cfg, {Kind::One, h[1] - 1}, 0) == P.seq_a(f, h, 1));
    }
  }
}

TEST_CASE("canonical tripod of a single monomial") {
  const Ring Z = Ring::integers();
  const PolyRing P(Z, 2);
  const Entries e = config_from_poly(P, P.monomial(2, 1));  // x^2
  const Entries tripod = canonical_on_L(Z, e, 0, 1);
  const Entries expect{{{0, 1}, -1}, {{1, 1}, 1}, {{0, 0}, 1}};
  CHECK(tripod == expect);  // -(1+x) + x(1+x) + 1 = x^2
}

TEST_CASE("canonical form is exact, idempotent and move-invariant") {
  std::mt19937_64 rng(19);
  for (const Ring& R : {Ring::integers(), Ring::residues(4)}) {
    const PolyRing P(R, 2);
    for (int t = 0; t < 80; ++t) {
      Entries e = rand_config(R, rng);
      const long long k = pick(rng, -3, 3);
      const long long l = pick(rng, -3, 3);
      const Entries canon = canonical_on_L(R, e, k, l);
      // supported on the tripod L_{k,l}
      for (const auto& [cell, v] : canon) {
        (void)v;
        CHECK((cell.second == l || (cell.first == k && cell.second < l)));
      }
      // same ring element
      CHECK(poly_from_config(P, canon) == poly_from_config(P, e));
      // canonical of canonical is itself
      CHECK(canonical_on_L(R, canon, k, l) == canon);
      // triangle moves do not change the canonical form
      Entries moved = e;
      for (int mv = 0; mv < 5; ++mv)
        triangle_move(R, moved, pick(rng, -3, 3), pick(rng, -3, 3), rand_coeff(R, rng, 5));
      CHECK(canonical_on_L(R, moved, k, l) == canon);
    }
  }
}

TEST_CASE("a placed sequence reads back and transports between levels") {
  std::mt19937_64 rng(23);
  for (const Ring& R : {Ring::integers(), Ring::residues(2)}) {
    for (Kind kind : {Kind::Infinity, Kind::Zero, Kind::One}) {
      for (int t = 0; t < 60; ++t) {
        const HalfPlane hp{kind, pick(rng, -3, 3)};
        const std::vector<Int> v = rand_seq(R, rng);
        const long long l1 = pick(rng, -2, 2);
        const long long l0 = pick(rng, -2, 2);
        CHECK(propagate(R, place_on_level(R, v, hp, l1), hp, l1) == v);
        // push to another level and back: nothing is lost inside a half-plane
        const auto at_l0 = propagate(R, place_on_level(R, v, hp, l1), hp, l0);
        CHECK(propagate(R, place_on_level(R, at_l0, hp, l0), hp, l1) == v);
      }
    }
  }
}

TEST_CASE("worked sequence conversions") {
  const Ring Z = Ring::integers();
  // single-step fold at the distinguished star
  CHECK(pascal_b_to_a(Z, -1, 1, {3, 1, 0, 2}) == std::vector<Int>{4, 1, 2, 2});
  // the worked rank-2 element: b sequences at rest, a sequences after (1,2)
  CHECK(pascal_b_to_a(Z, -1, 2, {3, 1, 0, 2}) == std::vector<Int>{5, 3, 4, 2});
  CHECK(pascal_b_to_a(Z, 0, 2, {11, 3, 1}) == std::vector<Int>{18, 5, 1});
  CHECK(pascal_b_to_a(Z, 1, 1, {-6, -4, -1, -1}) == std::vector<Int>{2, 3, 0, 1});
  CHECK(pascal_a_to_b(Z, -1, 2, {5, 3, 4, 2}) == std::vector<Int>{3, 1, 0, 2});
  CHECK(pascal_a_to_b(Z, 0, 2, {18, 5, 1}) == std::vector<Int>{11, 3, 1});
  CHECK(pascal_a_to_b(Z, 1, 1, {2, 3, 0, 1}) == std::vector<Int>{-6, -4, -1, -1});
  // negative walker coordinate at star one, checked against the raw product
  //   x^{-2} ((1+x)^{-1} + (1+x)^{-2}) = 2x^{-2} - 3x^{-1} + 3(1+x)^{-1} + (1+x)^{-2}
  const PolyRing P(Z, 2);
  const Poly fhat = P.add(P.pole_term(1, 1, 1), P.pole_term(1, 2, 1));
  const Poly f = P.mul_shift(fhat, {-2, 0});
  Poly expect = P.monomial(-2, 2);
  expect = P.add(expect, P.monomial(-1, -3));
  expect = P.add(expect, P.pole_term(1, 1, 3));
  expect = P.add(expect, P.pole_term(1, 2, 1));
  CHECK(f == expect);
  CHECK(pascal_b_to_a(Z, 1, -2, {1, 1}) == P.seq_a(f, {-2, 0}, 1));
  CHECK(pascal_a_to_b(Z, 1, -2, P.seq_a(f, {-2, 0}, 1)) == std::vector<Int>{1, 1});
}

TEST_CASE("sequence conversions match the polynomial route") {
  std::mt19937_64 rng(29);
  for (const Ring& R : {Ring::integers(), Ring::residues(4)}) {
    const PolyRing P(R, 2);
    const std::vector<long long> rest{0, 0};
    for (int t = 0; t < 120; ++t) {
      const Poly fhat = rand_poly(P, rng);
      const std::vector<long long> h = rand_heights(2, rng);
      const Poly f = P.mul_shift(fhat, h);
      for (int star : {-1, 0, 1}) {
        const long long m = star == 1 ? h[0] : h[1];
        const std::vector<Int> b = P.seq_a(fhat, rest, star);
        const std::vector<Int> a = P.seq_a(f, h, star);
        CHECK(pascal_b_to_a(R, star, m, b) == a);
        CHECK(pascal_a_to_b(R, star, m, a) == b);
      }
    }
  }
}

TEST_CASE("boards") {
  const Group G(Ring::integers(), 2);
  auto val = [&](const std::string& text) { return eval_word(G, parse_word(G, text)); };
  const Board c = board_of(G, val("c"));
  CHECK(c.entries == Entries{{{0, 0}, 1}});
  CHECK(c.k == 1);
  CHECK(c.l == 0);
  CHECK(board_lines(c) == "(0,0): 1\npos: (1,0)\n");
  const Board pole = board_of(G, val("s^-1 a s"));
  CHECK(board_lines(pole) == "(0,-1): 1\npos: (0,0)\n");
  const std::string matrix = board_matrix(pole);
  CHECK(matrix ==
        "i in [0,0], j in [-1,0], pos (0,0)\n"
        "j=0: [.]\n"
        "j=-1:   1\n");
}
