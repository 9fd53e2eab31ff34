#include "horolamp/words.hpp"

#include <algorithm>
#include <cctype>

namespace horolamp {

namespace {

const char* base_name(Token::Kind k) {
  switch (k) {
    case Token::Kind::A: return "a";
    case Token::Kind::T: return "t";
    case Token::Kind::S: return "s";
    case Token::Kind::Mu: return "mu";
    case Token::Kind::Nu: return "nu";
    case Token::Kind::C: return "c";
    case Token::Kind::D: return "d";
    case Token::Kind::Lam: return "l";
    case Token::Kind::MuFam: return "m";
    case Token::Kind::NuFam: return "n";
    case Token::Kind::Pair: return "g";
    case Token::Kind::Diff: return "g";
  }
  return "?";
}

}  // namespace

std::string format_token(const Token& t) {
  std::string out = base_name(t.kind);
  switch (t.kind) {
    case Token::Kind::Lam:
    case Token::Kind::MuFam:
    case Token::Kind::NuFam:
      out += "[" + to_string(t.index) + "]";
      break;
    case Token::Kind::Pair:
      out += "[" + to_string(t.r) + "," + std::to_string(t.j) + "]";
      break;
    case Token::Kind::Diff:
      out += "[" + to_string(t.r) + "," + std::to_string(t.j) + "," + std::to_string(t.k) + "]";
      break;
    default:
      break;
  }
  if (t.exp != 1) out += "^" + to_string(t.exp);
  return out;
}

std::string format_word(const Word& w) {
  std::string out;
  for (const Token& t : w) {
    if (!out.empty()) out += ' ';
    out += format_token(t);
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;
  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
};

void skip_ws(Cursor& c) {
  while (!c.done() && std::isspace(static_cast<unsigned char>(c.peek()))) ++c.pos;
}

Int parse_int(Cursor& c) {
  const std::size_t start = c.pos;
  std::string digits;
  if (!c.done() && (c.peek() == '-' || c.peek() == '+')) digits += c.s[c.pos++];
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) digits += c.s[c.pos++];
  if (digits.empty() || digits == "-" || digits == "+")
    throw ParseError("expected an integer", start);
  return Int(digits);
}

std::vector<Int> parse_args(Cursor& c) {
  const std::size_t start = c.pos;
  if (c.done() || c.peek() != '[') throw ParseError("expected '['", start);
  ++c.pos;
  std::vector<Int> args;
  while (true) {
    args.push_back(parse_int(c));
    if (c.done()) throw ParseError("unterminated '['", start);
    if (c.peek() == ',') { ++c.pos; continue; }
    if (c.peek() == ']') { ++c.pos; break; }
    throw ParseError("expected ',' or ']'", c.pos);
  }
  return args;
}

int small_direction(const Int& v, int rank, std::size_t pos) {
  if (v < 0 || v >= rank)
    throw ParseError("direction " + to_string(v) + " out of range for rank " +
                     std::to_string(rank), pos);
  return static_cast<int>(v);
}

}  // namespace

Word parse_word(const Group& G, const std::string& text) {
  Cursor c{text};
  Word out;
  const int rank = G.rank();
  while (true) {
    skip_ws(c);
    if (c.done()) break;
    const std::size_t start = c.pos;
    std::string name;
    while (!c.done() && std::isalpha(static_cast<unsigned char>(c.peek())))
      name += c.s[c.pos++];
    if (name.empty()) throw ParseError("unexpected character '" + std::string(1, c.peek()) + "'", c.pos);

    Token tok;
    if (name == "a") tok.kind = Token::Kind::A;
    else if (name == "t") tok.kind = Token::Kind::T;
    else if (name == "s") tok.kind = Token::Kind::S;
    else if (name == "mu") tok.kind = Token::Kind::Mu;
    else if (name == "nu") tok.kind = Token::Kind::Nu;
    else if (name == "c") tok.kind = Token::Kind::C;
    else if (name == "d") tok.kind = Token::Kind::D;
    else if (name == "l") tok.kind = Token::Kind::Lam;
    else if (name == "m") tok.kind = Token::Kind::MuFam;
    else if (name == "n") tok.kind = Token::Kind::NuFam;
    else if (name == "g") tok.kind = Token::Kind::Pair;  // refined below
    else throw ParseError("unknown letter '" + name + "'", start);

    switch (tok.kind) {
      case Token::Kind::Lam:
      case Token::Kind::MuFam:
      case Token::Kind::NuFam: {
        auto args = parse_args(c);
        if (args.size() != 1)
          throw ParseError("'" + name + "' takes one index", start);
        tok.index = args[0];
        break;
      }
      case Token::Kind::Pair: {
        auto args = parse_args(c);
        if (args.size() == 2) {
          tok.r = args[0];
          tok.j = small_direction(args[1], rank, start);
        } else if (args.size() == 3) {
          tok.kind = Token::Kind::Diff;
          tok.r = args[0];
          tok.j = small_direction(args[1], rank, start);
          tok.k = small_direction(args[2], rank, start);
          if (tok.j >= tok.k)
            throw ParseError("'g[r,j,k]' needs j < k", start);
        } else {
          throw ParseError("'g' takes two or three arguments", start);
        }
        break;
      }
      default:
        break;
    }

    const bool needs_rank2 =
        tok.kind == Token::Kind::S || tok.kind == Token::Kind::Mu ||
        tok.kind == Token::Kind::Nu || tok.kind == Token::Kind::MuFam ||
        tok.kind == Token::Kind::NuFam;
    if (needs_rank2 && rank < 2)
      throw ParseError("letter '" + name + "' needs rank >= 2", start);

    if (!c.done() && c.peek() == '^') {
      ++c.pos;
      tok.exp = parse_int(c);
    }
    out.push_back(std::move(tok));
  }
  return out;
}

GroupElem eval_token(const Group& G, const Token& t) {
  GroupElem base;
  switch (t.kind) {
    case Token::Kind::A:
      base = G.identity();
      base.f = G.poly().constant(1);
      break;
    case Token::Kind::T:
      base = G.pair_gen(0, 0);
      break;
    case Token::Kind::S:
    case Token::Kind::Mu:
      if (G.rank() < 2) throw NotSupported("letter needs rank >= 2");
      base = G.pair_gen(0, 1);
      break;
    case Token::Kind::Nu:
      if (G.rank() < 2) throw NotSupported("letter needs rank >= 2");
      base = G.mul(G.inv(G.pair_gen(0, 0)), G.pair_gen(0, 1));
      break;
    case Token::Kind::C:
      base = G.pair_gen(1, 0);
      break;
    case Token::Kind::D: {
      GroupElem a = G.identity();
      a.f = G.poly().constant(1);
      base = G.mul(G.inv(G.pair_gen(0, 0)), a);
      break;
    }
    case Token::Kind::Lam:
      base = G.pair_gen(t.index, 0);
      break;
    case Token::Kind::MuFam:
      if (G.rank() < 2) throw NotSupported("letter needs rank >= 2");
      base = G.pair_gen(t.index, 1);
      break;
    case Token::Kind::NuFam:
      if (G.rank() < 2) throw NotSupported("letter needs rank >= 2");
      base = G.mul(G.pair_gen(t.index, 0), G.inv(G.pair_gen(t.index, 1)));
      break;
    case Token::Kind::Pair:
      base = G.pair_gen(t.r, t.j);
      break;
    case Token::Kind::Diff:
      base = G.diff_gen(t.r, t.j, t.k);
      break;
  }
  if (t.exp == 1) return base;
  return G.pow(base, t.exp);
}

GroupElem eval_word(const Group& G, const Word& w) {
  GroupElem acc = G.identity();
  for (const Token& t : w) acc = G.mul(acc, eval_token(G, t));
  return acc;
}

Word word_inv(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    Token t = *it;
    t.exp = -t.exp;
    out.push_back(std::move(t));
  }
  return out;
}

Word word_pow(const Word& w, long long k) {
  const Word base = k >= 0 ? w : word_inv(w);
  const long long n = k >= 0 ? k : -k;
  Word out;
  for (long long i = 0; i < n; ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

namespace {

Token letter(Token::Kind kind, Int exp = 1) {
  Token t;
  t.kind = kind;
  t.exp = std::move(exp);
  return t;
}

Token lam(Int i, Int exp = 1) {
  Token t;
  t.kind = Token::Kind::Lam;
  t.index = std::move(i);
  t.exp = std::move(exp);
  return t;
}

Token mufam(Int i, Int exp = 1) {
  Token t;
  t.kind = Token::Kind::MuFam;
  t.index = std::move(i);
  t.exp = std::move(exp);
  return t;
}

Token nufam(Int i, Int exp = 1) {
  Token t;
  t.kind = Token::Kind::NuFam;
  t.index = std::move(i);
  t.exp = std::move(exp);
  return t;
}

void push(Word& w, Token t) {
  if (t.exp != 0) w.push_back(std::move(t));
}

long long small_modulus(const Ring& ring) {
  if (!ring.modular()) throw NotSupported("family needs a finite coefficient ring");
  if (ring.modulus() > 1000000) throw NotSupported("modulus too large for relator expansion");
  return ring.modulus().convert_to<long long>();
}

}  // namespace

std::vector<std::string> presentation_ids(const Group& G) {
  std::vector<std::string> ids;
  if (G.rank() == 1) {
    ids = {"commutators", "lambda-mu", "lambda-family"};
    if (G.ring().modular()) {
      ids.push_back("lambda-torsion");
      ids.push_back("pair-torsion");
    }
  } else if (G.rank() == 2) {
    ids = {"ast", "mu-nu-c-d", "lambda-mu-nu"};
  }
  return ids;
}

std::vector<Word> relators(const Group& G, const std::string& id, long long bound) {
  const auto ids = presentation_ids(G);
  if (std::find(ids.begin(), ids.end(), id) == ids.end())
    throw NotSupported("presentation '" + id + "' does not apply to " +
                       G.ring().name() + " at rank " + std::to_string(G.rank()));
  std::vector<Word> out;
  using K = Token::Kind;

  if (id == "commutators") {
    // [a, t^k a t^-k] = 1
    for (long long k = -bound; k <= bound; ++k) {
      Word w;
      push(w, letter(K::A, -1));
      push(w, letter(K::T, k));
      push(w, letter(K::A, -1));
      push(w, letter(K::T, -k));
      push(w, letter(K::A));
      push(w, letter(K::T, k));
      push(w, letter(K::A));
      push(w, letter(K::T, -k));
      out.push_back(std::move(w));
    }
  } else if (id == "lambda-mu") {
    // lambda^k (lambda^-1 mu lambda^-1)^k = mu^k lambda^-k, lambda = l[0], mu = l[1]
    for (long long k = -bound; k <= bound; ++k) {
      Word w;
      push(w, lam(0, k));
      const Word mid = word_pow({lam(0, -1), lam(1), lam(0, -1)}, k);
      w.insert(w.end(), mid.begin(), mid.end());
      push(w, lam(0, k));
      push(w, lam(1, -k));
      out.push_back(std::move(w));
    }
  } else if (id == "lambda-family") {
    // l[i]^k l[j]^-k = l[-j]^k l[-i]^-k
    for (long long i = -bound; i <= bound; ++i)
      for (long long j = -bound; j <= bound; ++j)
        for (long long k = -bound; k <= bound; ++k) {
          Word w;
          push(w, lam(i, k));
          push(w, lam(j, -k));
          push(w, lam(-i, k));
          push(w, lam(-j, -k));
          out.push_back(std::move(w));
        }
  } else if (id == "lambda-torsion") {
    // (l[i]^k l[j]^-k)^m = 1 over Z/m
    const long long m = small_modulus(G.ring());
    for (long long i = 0; i < m; ++i)
      for (long long j = 0; j < m; ++j)
        for (long long k = -bound; k <= bound; ++k) {
          Word base;
          push(base, lam(i, k));
          push(base, lam(j, -k));
          out.push_back(word_pow(base, m));
        }
  } else if (id == "pair-torsion") {
    // (lambda^k mu^-k)^m = 1 over Z/m
    const long long m = small_modulus(G.ring());
    for (long long k = -bound; k <= bound; ++k) {
      Word base;
      push(base, lam(0, k));
      push(base, lam(1, -k));
      out.push_back(word_pow(base, m));
    }
  } else if (id == "ast") {
    // [a, t a t^-1] = 1, [s, t] = 1, s a s^-1 = a t a t^-1
    Word r1;
    push(r1, letter(K::A, -1));
    push(r1, letter(K::T));
    push(r1, letter(K::A, -1));
    push(r1, letter(K::T, -1));
    push(r1, letter(K::A));
    push(r1, letter(K::T));
    push(r1, letter(K::A));
    push(r1, letter(K::T, -1));
    out.push_back(std::move(r1));
    Word r2;
    push(r2, letter(K::S, -1));
    push(r2, letter(K::T, -1));
    push(r2, letter(K::S));
    push(r2, letter(K::T));
    out.push_back(std::move(r2));
    Word r3;
    push(r3, letter(K::S));
    push(r3, letter(K::A));
    push(r3, letter(K::S, -1));
    push(r3, letter(K::T));
    push(r3, letter(K::A, -1));
    push(r3, letter(K::T, -1));
    push(r3, letter(K::A, -1));
    out.push_back(std::move(r3));
  } else if (id == "mu-nu-c-d") {
    // [mu, nu] = 1, mu^-1 c^2 nu = c, nu^-1 d^2 mu = d
    Word r1;
    push(r1, letter(K::Mu, -1));
    push(r1, letter(K::Nu, -1));
    push(r1, letter(K::Mu));
    push(r1, letter(K::Nu));
    out.push_back(std::move(r1));
    Word r2;
    push(r2, letter(K::Mu, -1));
    push(r2, letter(K::C, 2));
    push(r2, letter(K::Nu));
    push(r2, letter(K::C, -1));
    out.push_back(std::move(r2));
    Word r3;
    push(r3, letter(K::Nu, -1));
    push(r3, letter(K::D, 2));
    push(r3, letter(K::Mu));
    push(r3, letter(K::D, -1));
    out.push_back(std::move(r3));
  } else if (id == "lambda-mu-nu") {
    // l[i] = n[i] m[i]  and  l[i+j] = m[i] n[j]
    for (long long i = -bound; i <= bound; ++i) {
      Word w;
      push(w, lam(i));
      push(w, mufam(i, -1));
      push(w, nufam(i, -1));
      out.push_back(std::move(w));
    }
    for (long long i = -bound; i <= bound; ++i)
      for (long long j = -bound; j <= bound; ++j) {
        Word w;
        push(w, lam(i + j));
        push(w, nufam(j, -1));
        push(w, mufam(i, -1));
        out.push_back(std::move(w));
      }
  }
  return out;
}

Word normal_form(const Group& G, const GroupElem& g) {
  if (G.rank() > 2)
    throw NotSupported("normal form is only defined for rank 1 and 2");
  Word w;
  for (const auto& [k, m] : g.f.laurent) {
    push(w, letter(Token::Kind::T, k));
    push(w, letter(Token::Kind::A, m));
    push(w, letter(Token::Kind::T, -k));
  }
  if (G.rank() == 2) {
    if (auto it = g.f.poles.find(1); it != g.f.poles.end()) {
      for (auto jt = it->second.rbegin(); jt != it->second.rend(); ++jt) {
        const long long l = -jt->first;
        push(w, letter(Token::Kind::S, l));
        push(w, letter(Token::Kind::A, jt->second));
        push(w, letter(Token::Kind::S, -l));
      }
    }
    push(w, letter(Token::Kind::S, g.h[1]));
  }
  push(w, letter(Token::Kind::T, g.h[0]));
  return w;
}

}  // namespace horolamp
