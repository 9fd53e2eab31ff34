#include "doctest.h"

#include "horolamp/tree.hpp"
#include "oracle.hpp"

using namespace horolamp;
using namespace horolamp::oracle;

namespace {

HoroVertex root_vertex(int rank) {
  HoroVertex v;
  v.coords.resize(rank + 1);
  return v;
}

}  // namespace

TEST_CASE("tree steps") {
  TreeAddress a;  // root branch: empty labels, height 0
  const TreeAddress u3 = up(a, 3);
  CHECK(u3.labels == std::vector<Int>{3});
  CHECK(u3.height == 1);
  const TreeAddress u03 = up(u3, 0);
  CHECK(u03.labels == std::vector<Int>{0, 3});
  CHECK(u03.height == 2);
  CHECK(down(u03) == u3);
  CHECK(down(u3) == a);
  // moving up along 0 keeps the label list trimmed
  const TreeAddress z = up(a, 0);
  CHECK(z.labels.empty());
  CHECK(z.height == 1);
  CHECK(down(z) == a);
  // down from the root branch keeps descending
  const TreeAddress below = down(a);
  CHECK(below.labels.empty());
  CHECK(below.height == -1);
  CHECK(up(below, 0) == a);
}

TEST_CASE("the worked rank-1 element maps to its vertex") {
  const Group G(Ring::residues(2), 1);
  const PolyRing& P = G.poly();
  Poly f = P.monomial(-4, 1);
  f = P.add(f, P.constant(1));
  f = P.add(f, P.monomial(1, 1));
  f = P.add(f, P.monomial(3, 1));
  const GroupElem g{f, {5}};
  const HoroVertex v = phi(G, g);
  REQUIRE(v.coords.size() == 2);
  CHECK(v.coords[0].labels.empty());
  CHECK(v.coords[0].height == -5);
  CHECK(v.coords[1].labels == std::vector<Int>{0, 1, 0, 1, 1, 0, 0, 0, 1});
  CHECK(v.coords[1].height == 5);
  CHECK(phi_inv(G, v) == g);
}

TEST_CASE("phi and phi_inv invert each other on random elements") {
  struct Config {
    Ring ring;
    int rank;
  };
  const Config configs[] = {{Ring::residues(2), 1},
                            {Ring::residues(3), 2},
                            {Ring::integers(), 2},
                            {Ring::residues(5), 3}};
  std::mt19937_64 rng(71);
  for (const auto& cfg : configs) {
    const Group G(cfg.ring, cfg.rank);
    for (int t = 0; t < 250; ++t) {
      const GroupElem g = rand_elem(G, rng);
      const HoroVertex v = phi(G, g);
      // heights are determined by the walker part and sum to zero
      long long sum = 0;
      for (const auto& c : v.coords) sum += c.height;
      CHECK(sum == 0);
      CHECK(phi_inv(G, v) == g);
    }
  }
}

TEST_CASE("phi after phi_inv is the identity on vertices") {
  const Group G(Ring::residues(3), 2);
  const auto labels = G.ring().elements(std::nullopt);
  std::mt19937_64 rng(73);
  for (int t = 0; t < 120; ++t) {
    // a random walk through product moves always stays on genuine vertices
    HoroVertex v = root_vertex(2);
    const long long steps = pick(rng, 0, 12);
    for (long long i = 0; i < steps; ++i) {
      const auto nb = neighbors(v, labels);
      v = nb[static_cast<std::size_t>(pick(rng, 0, static_cast<long long>(nb.size()) - 1))]
              .second;
    }
    CHECK(phi(G, phi_inv(G, v)) == v);
  }
}

TEST_CASE("phi_inv rejects payloads that are not vertices") {
  const Group G(Ring::residues(2), 2);
  HoroVertex wrong_count = root_vertex(1);
  CHECK_THROWS_AS(phi_inv(G, wrong_count), InvalidVertex);
  HoroVertex bad_heights = root_vertex(2);
  bad_heights.coords[1].height = 1;  // heights now sum to 1
  CHECK_THROWS_AS(phi_inv(G, bad_heights), InvalidVertex);
  try {
    phi_inv(G, bad_heights);
    FAIL("expected InvalidVertex");
  } catch (const InvalidVertex& e) {
    CHECK(std::string(e.what()) == "coordinate heights do not sum to zero");
  }
}

TEST_CASE("adjacency recognizes exactly the product moves") {
  const Ring R = Ring::residues(3);
  const auto labels = R.elements(std::nullopt);
  std::mt19937_64 rng(79);
  for (int t = 0; t < 60; ++t) {
    HoroVertex v = root_vertex(2);
    for (long long i = 0, steps = pick(rng, 0, 8); i < steps; ++i) {
      const auto nb = neighbors(v, labels);
      v = nb[static_cast<std::size_t>(pick(rng, 0, static_cast<long long>(nb.size()) - 1))]
              .second;
    }
    for (const auto& [mv, w] : neighbors(v, labels)) {
      const auto found = adjacent(v, w);
      REQUIRE(found.has_value());
      CHECK(found->down == mv.down);
      CHECK(found->up == mv.up);
      CHECK(found->label == mv.label);
      CHECK(apply_move(v, mv.down, mv.up, mv.label) == w);
    }
    CHECK(!adjacent(v, v).has_value());
    // two up-steps in a row are never adjacent to the start
    const HoroVertex twice = apply_move(apply_move(v, 0, 1, 1), 0, 1, 1);
    CHECK(!adjacent(v, twice).has_value());
  }
}

TEST_CASE("neighbor count matches the advertised degree") {
  // (rank+1) * rank ordered coordinate pairs x |R| labels
  const auto l2 = Ring::residues(2).elements(std::nullopt);
  CHECK(neighbors(root_vertex(1), l2).size() == 2 * 1 * 2);
  CHECK(neighbors(root_vertex(2), l2).size() == 3 * 2 * 2);
  const auto l5 = Ring::residues(5).elements(std::nullopt);
  CHECK(neighbors(root_vertex(3), l5).size() == 4 * 3 * 5);
}

TEST_CASE("generator edges land on the advertised coordinate pattern") {
  const Group G(Ring::residues(3), 3);
  std::mt19937_64 rng(83);
  for (int t = 0; t < 80; ++t) {
    const GroupElem g = rand_elem(G, rng);
    const HoroVertex v = phi(G, g);
    for (int j = 0; j < 3; ++j)
      for (const Int& r : G.ring().elements(std::nullopt)) {
        // (r, e_j): the distinguished tree descends, tree j ascends
        const auto mv = adjacent(v, phi(G, G.mul(g, G.pair_gen(r, j))));
        REQUIRE(mv.has_value());
        CHECK(mv->down == 0);
        CHECK(mv->up == 1 + j);
      }
    for (int j = 0; j < 3; ++j)
      for (int k = j + 1; k < 3; ++k)
        for (const Int& r : G.ring().elements(std::nullopt)) {
          // (r, e_j)(r, e_k)^{-1}: tree k descends, tree j ascends
          const auto mv = adjacent(v, phi(G, G.mul(g, G.diff_gen(r, j, k))));
          REQUIRE(mv.has_value());
          CHECK(mv->down == 1 + k);
          CHECK(mv->up == 1 + j);
        }
  }
}
