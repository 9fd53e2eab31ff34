// Generator tokens, words, evaluation, relator families and normal forms.
//
// Token text forms (whitespace separated, optional ^<int> exponent):
//   a t s mu nu c d         named letters
//   l[i] m[i] n[i]          the indexed families lambda_i, mu_i, nu_i
//   g[r,j] g[r,j,k]         (r, e_j) and (r, e_j)(r, e_k)^{-1} with j < k
//
// Letter meanings (rank 2 shown; a, t, c, d, l[i] also make sense for rank 1):
//   a = (1, 0)        t = (0, e_0)      s = (0, e_1)
//   c = a t           d = t^{-1} a      mu = s            nu = t^{-1} s
//   l[i] = a^i t      m[i] = a^i s      n[i] = l[i] m[i]^{-1}
#pragma once

#include <string>
#include <vector>

#include "horolamp/group.hpp"

namespace horolamp {

struct Token {
  enum class Kind { A, T, S, Mu, Nu, C, D, Lam, MuFam, NuFam, Pair, Diff };
  Kind kind;
  Int index = 0;  // i for Lam/MuFam/NuFam
  Int r = 0;      // coefficient for Pair/Diff
  int j = 0;      // direction for Pair/Diff
  int k = 0;      // second direction for Diff
  Int exp = 1;

  bool operator==(const Token&) const = default;
};

using Word = std::vector<Token>;

std::string format_token(const Token& t);
std::string format_word(const Word& w);

// Throws ParseError (with character position) on malformed input or letters
// that do not exist at the group's rank.
Word parse_word(const Group& G, const std::string& text);

GroupElem eval_token(const Group& G, const Token& t);
GroupElem eval_word(const Group& G, const Word& w);

Word word_inv(const Word& w);
Word word_pow(const Word& w, long long k);

// Relator families, identified by name:
//   rank 1:             commutators, lambda-mu, lambda-family
//   rank 1, Z/m only:   lambda-torsion, pair-torsion
//   rank 2:             ast, mu-nu-c-d, lambda-mu-nu
// Index parameters run over [-bound, bound] (torsion family indices i, j over
// Z/m).  Every returned word must evaluate to the identity.
std::vector<std::string> presentation_ids(const Group& G);
std::vector<Word> relators(const Group& G, const std::string& id, long long bound);

// The canonical word for g: conjugates t^k a^m t^{-k} in increasing k (the
// Laurent coordinates of f), then s^l a^n s^{-l} in increasing l < 0 (the
// (1+x)-pole coordinates), then the tail s^{h_1} t^{h_0}.  Rank <= 2 only.
Word normal_form(const Group& G, const GroupElem& g);

}  // namespace horolamp
