#include "doctest.h"

#include "horolamp/group.hpp"
#include "oracle.hpp"

using namespace horolamp;
using namespace horolamp::oracle;

TEST_CASE("identity and generators") {
  const Group G(Ring::residues(3), 2);
  const GroupElem e = G.identity();
  CHECK(G.is_identity(e));
  CHECK(e.h == std::vector<long long>{0, 0});
  CHECK(e.f.is_zero());

  const GroupElem g = G.pair_gen(2, 1);
  CHECK(g.h == std::vector<long long>{0, 1});
  CHECK(G.poly().coeff_x(g.f, 0) == 2);
  CHECK(G.is_identity(G.mul(g, G.inv(g))));
  CHECK(G.is_identity(G.mul(G.inv(g), g)));

  // The difference generator is literally the product it names.
  const GroupElem d = G.diff_gen(2, 0, 1);
  CHECK(d == G.mul(G.pair_gen(2, 0), G.inv(G.pair_gen(2, 1))));
  CHECK(d.h == std::vector<long long>{1, -1});
}

TEST_CASE("group law against the rational-function model") {
  struct Config {
    Ring ring;
    int rank;
  };
  const Config configs[] = {{Ring::integers(), 1},
                            {Ring::integers(), 2},
                            {Ring::residues(2), 2},
                            {Ring::residues(6), 2},
                            {Ring::residues(5), 3}};
  std::mt19937_64 rng(17);
  for (const auto& cfg : configs) {
    const Group G(cfg.ring, cfg.rank);
    const Ring& R = G.ring();
    for (int t = 0; t < 120; ++t) {
      const GroupElem a = rand_elem(G, rng);
      const GroupElem b = rand_elem(G, rng);
      const GroupElem c = rand_elem(G, rng);
      CHECK(matches(R, G.mul(a, b), o_mul(R, o_from(R, a), o_from(R, b))));
      CHECK(matches(R, G.inv(a), o_inv(R, o_from(R, a))));
      CHECK(G.mul(a, G.mul(b, c)) == G.mul(G.mul(a, b), c));
      CHECK(G.mul(a, G.identity()) == a);
      CHECK(G.mul(G.identity(), a) == a);
      CHECK(G.is_identity(G.mul(a, G.inv(a))));
      CHECK(G.inv(G.inv(a)) == a);
    }
  }
}

TEST_CASE("powers") {
  const Group G(Ring::integers(), 2);
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    const GroupElem g = rand_elem(G, rng);
    GroupElem acc = G.identity();
    for (int e = 0; e <= 5; ++e) {
      CHECK(G.pow(g, e) == acc);
      CHECK(G.pow(g, -e) == G.inv(acc));
      acc = G.mul(acc, g);
    }
  }
}

TEST_CASE("lamps commute, walkers do not") {
  const Group G(Ring::integers(), 2);
  // Pure lamp elements (h = 0) form an abelian subgroup.
  std::mt19937_64 rng(31);
  for (int t = 0; t < 50; ++t) {
    const GroupElem a{rand_poly(G.poly(), rng), {0, 0}};
    const GroupElem b{rand_poly(G.poly(), rng), {0, 0}};
    CHECK(G.mul(a, b) == G.mul(b, a));
  }
  // A lamp and a step do not commute in general: t a t^{-1} != a.
  const GroupElem a = G.pair_gen(1, 0);  // deposits 1, steps e_0
  const GroupElem t{G.poly().zero(), {1, 0}};
  CHECK(G.mul(t, G.mul(a, G.inv(t))) != a);
}
