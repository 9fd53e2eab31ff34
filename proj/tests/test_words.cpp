#include "doctest.h"

#include "horolamp/jsonio.hpp"
#include "horolamp/words.hpp"
#include "oracle.hpp"

#include <map>
#include <set>

using namespace horolamp;
using namespace horolamp::oracle;

namespace {

Word rand_word(const Group& G, std::mt19937_64& rng, long long max_len = 12) {
  static const Token::Kind pool[] = {Token::Kind::A, Token::Kind::T, Token::Kind::S};
  const long long len = pick(rng, 0, max_len);
  Word w;
  for (long long i = 0; i < len; ++i) {
    Token t;
    t.kind = pool[pick(rng, 0, G.rank() >= 2 ? 2 : 1)];
    t.exp = pick(rng, 0, 1) ? 1 : -1;
    w.push_back(t);
  }
  return w;
}

}  // namespace

TEST_CASE("parse and format round trip") {
  const Group G(Ring::integers(), 2);
  const std::string canonical = "a t^-1 s^2 l[3] m[-1] n[0] g[1,0] g[2,0,1] mu nu c d";
  CHECK(format_word(parse_word(G, canonical)) == canonical);
  CHECK(format_word(parse_word(G, "   a \n\t t  ")) == "a t");
  CHECK(parse_word(G, "").empty());
  CHECK(format_word(parse_word(G, "a^1")) == "a");  // exponent 1 is implicit
}

TEST_CASE("parse rejects malformed words") {
  const Group G2(Ring::integers(), 2);
  const Group G1(Ring::integers(), 1);
  CHECK_THROWS_AS(parse_word(G1, "s"), ParseError);       // rank-2 letter at rank 1
  CHECK_THROWS_AS(parse_word(G1, "mu"), ParseError);
  CHECK_THROWS_AS(parse_word(G1, "m[1]"), ParseError);
  CHECK_THROWS_AS(parse_word(G2, "g[1,2]"), ParseError);  // direction out of range
  CHECK_THROWS_AS(parse_word(G2, "g[1,1,0]"), ParseError);  // needs j < k
  CHECK_THROWS_AS(parse_word(G2, "g[1]"), ParseError);
  CHECK_THROWS_AS(parse_word(G2, "x"), ParseError);
  CHECK_THROWS_AS(parse_word(G2, "3"), ParseError);
  CHECK_THROWS_AS(parse_word(G2, "a^"), ParseError);
  CHECK_THROWS_AS(parse_word(G2, "l[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_word(G2, "l[1"), ParseError);
  try {
    parse_word(G2, "a t qq");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);  // points at the offending letter
  }
}

TEST_CASE("letter identities") {
  const Group G(Ring::integers(), 2);
  auto val = [&](const std::string& text) { return eval_word(G, parse_word(G, text)); };
  CHECK(val("c") == val("a t"));
  CHECK(val("d") == val("t^-1 a"));
  CHECK(val("mu") == val("s"));
  CHECK(val("nu") == val("t^-1 s"));
  CHECK(val("l[4]") == val("a^4 t"));
  CHECK(val("m[-2]") == val("a^-2 s"));
  CHECK(val("n[3]") == val("l[3] m[3]^-1"));
  CHECK(val("g[5,0]") == val("a^5 t"));
  CHECK(val("g[2,0,1]") == val("g[2,0] g[2,1]^-1"));
  CHECK(val("s a s^-1") == val("a t a t^-1"));  // the rank-2 pivot identity
}

TEST_CASE("the two worked rank-1 words agree") {
  const Group G(Ring::residues(2), 1);
  const GroupElem g1 = eval_word(G, parse_word(G, "t^-4 a t^4 a t a t^2 a t^2"));
  const GroupElem g2 = eval_word(G, parse_word(G, "a t^-1 a t^4 a t^-7 a t^3 a t^2 a t^4"));
  CHECK(g1 == g2);
  CHECK(g1.h == std::vector<long long>{5});
  const PolyRing& P = G.poly();
  Poly expect = P.monomial(-4, 1);
  expect = P.add(expect, P.constant(1));
  expect = P.add(expect, P.monomial(1, 1));
  expect = P.add(expect, P.monomial(3, 1));
  CHECK(g1.f == expect);
}

TEST_CASE("word inverse and power act like the group operations") {
  const Group G(Ring::residues(3), 2);
  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    const Word w = rand_word(G, rng, 8);
    const GroupElem g = eval_word(G, w);
    CHECK(eval_word(G, word_inv(w)) == G.inv(g));
    const long long k = pick(rng, -3, 3);
    CHECK(eval_word(G, word_pow(w, k)) == G.pow(g, k));
  }
}

TEST_CASE("relator families exist exactly where they apply") {
  const Group G1z(Ring::integers(), 1);
  const Group G1m(Ring::residues(4), 1);
  const Group G2(Ring::integers(), 2);
  CHECK(presentation_ids(G1z) ==
        std::vector<std::string>{"commutators", "lambda-mu", "lambda-family"});
  CHECK(presentation_ids(G1m) ==
        std::vector<std::string>{"commutators", "lambda-mu", "lambda-family", "lambda-torsion",
                                 "pair-torsion"});
  CHECK(presentation_ids(G2) == std::vector<std::string>{"ast", "mu-nu-c-d", "lambda-mu-nu"});
  CHECK_THROWS_AS(relators(G1z, "lambda-torsion", 1), NotSupported);
  CHECK_THROWS_AS(relators(G1z, "ast", 1), NotSupported);
  CHECK_THROWS_AS(relators(G2, "commutators", 1), NotSupported);
  CHECK_THROWS_AS(relators(G2, "no-such-family", 1), NotSupported);
}

TEST_CASE("relator counts at small bounds") {
  const Group G2(Ring::integers(), 2);
  CHECK(relators(G2, "lambda-mu-nu", 1).size() == 3 + 9);
  CHECK(relators(G2, "ast", 1).size() == 3);
  CHECK(relators(G2, "mu-nu-c-d", 7).size() == 3);  // bound-independent
  const Group G1(Ring::integers(), 1);
  CHECK(relators(G1, "commutators", 2).size() == 5);
  CHECK(relators(G1, "lambda-family", 1).size() == 27);
  const Group G1m(Ring::residues(3), 1);
  CHECK(relators(G1m, "lambda-torsion", 1).size() == 3 * 3 * 3);
  CHECK(relators(G1m, "pair-torsion", 2).size() == 5);
}

TEST_CASE("every relator evaluates to the identity") {
  const Group configs[] = {Group(Ring::integers(), 1), Group(Ring::residues(4), 1),
                           Group(Ring::integers(), 2), Group(Ring::residues(3), 2)};
  for (const Group& G : configs)
    for (const std::string& id : presentation_ids(G))
      for (const Word& w : relators(G, id, 2)) {
        CAPTURE(id);
        CAPTURE(format_word(w));
        CHECK(G.is_identity(eval_word(G, w)));
      }
}

TEST_CASE("normal form canonical words") {
  const Group G(Ring::integers(), 2);
  auto val = [&](const std::string& text) { return eval_word(G, parse_word(G, text)); };
  CHECK(format_word(normal_form(G, G.identity())).empty());
  CHECK(format_word(normal_form(G, val("s^-1 a s"))) == "s^-1 a s");
  CHECK(format_word(normal_form(G, val("a^3"))) == "a^3");
  CHECK(format_word(normal_form(G, val("t^2 a t^-2 t^5 s"))) == "t^2 a t^-2 s t^5");
}

TEST_CASE("normal form separates elements and preserves value") {
  for (const Group& G : {Group(Ring::integers(), 2), Group(Ring::residues(3), 2),
                         Group(Ring::residues(2), 1)}) {
    std::mt19937_64 rng(59);
    std::map<std::string, std::string> nf_by_elem;
    std::set<std::string> nf_seen;
    for (int t = 0; t < 250; ++t) {
      const Word w = rand_word(G, rng);
      const GroupElem g = eval_word(G, w);
      const Word nf = normal_form(G, g);
      CHECK(eval_word(G, nf) == g);
      const std::string key = elem_body_json(g);
      const std::string nf_text = format_word(nf);
      auto it = nf_by_elem.find(key);
      if (it == nf_by_elem.end()) {
        // a fresh element must get a normal form no other element produced
        CHECK(!nf_seen.count(nf_text));
        nf_by_elem.emplace(key, nf_text);
        nf_seen.insert(nf_text);
      } else {
        CHECK(it->second == nf_text);
      }
    }
  }
  const Group G3(Ring::residues(5), 3);
  CHECK_THROWS_AS(normal_form(G3, G3.identity()), NotSupported);
}
