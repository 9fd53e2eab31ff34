#include "horolamp/graph.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "horolamp/errors.hpp"
#include "horolamp/grid.hpp"
#include "horolamp/jsonio.hpp"

namespace horolamp {

namespace {

constexpr std::size_t kReportCap = 20;

void push_capped(std::vector<std::string>& list, long long& count, std::string msg) {
  ++count;
  if (list.size() < kReportCap) list.push_back(std::move(msg));
}

// Layered BFS with deterministic ids: each new layer is the key-sorted set of
// unseen neighbors of the previous layer.  Thread count changes the schedule
// of the expansion only; the merged frontier is a sorted map either way.
template <class Elem>
struct Enumeration {
  std::vector<Elem> items;
  std::vector<std::string> keys;
  std::vector<long long> layer;
  std::map<std::string, int> index;
};

template <class Elem, class KeyFn, class ExpandFn>
Enumeration<Elem> bfs(Elem root, long long radius, int threads, KeyFn key_of, ExpandFn expand) {
  Enumeration<Elem> out;
  out.items.push_back(std::move(root));
  out.keys.push_back(key_of(out.items[0]));
  out.layer.push_back(0);
  out.index.emplace(out.keys[0], 0);
  std::vector<int> frontier{0};
  for (long long depth = 1; depth <= radius && !frontier.empty(); ++depth) {
    std::map<std::string, Elem> fresh;
    auto expand_range = [&](std::size_t lo, std::size_t hi, std::map<std::string, Elem>& sink) {
      for (std::size_t i = lo; i < hi; ++i)
        for (Elem& nb : expand(out.items[frontier[i]])) {
          std::string k = key_of(nb);
          if (!out.index.count(k) && !sink.count(k)) sink.emplace(std::move(k), std::move(nb));
        }
    };
    if (threads <= 1 || frontier.size() < 2 * static_cast<std::size_t>(threads)) {
      expand_range(0, frontier.size(), fresh);
    } else {
      const std::size_t nt = static_cast<std::size_t>(threads);
      const std::size_t chunk = (frontier.size() + nt - 1) / nt;
      std::vector<std::map<std::string, Elem>> sinks(nt);
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < nt; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(frontier.size(), lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(expand_range, lo, hi, std::ref(sinks[t]));
      }
      for (auto& th : pool) th.join();
      for (auto& sink : sinks)
        for (auto& [k, e] : sink)
          if (!fresh.count(k)) fresh.emplace(k, std::move(e));
    }
    frontier.clear();
    for (auto& [k, e] : fresh) {
      const int id = static_cast<int>(out.items.size());
      out.index.emplace(k, id);
      out.items.push_back(std::move(e));
      out.keys.push_back(k);
      out.layer.push_back(depth);
      frontier.push_back(id);
    }
  }
  return out;
}

void check_edge_invariants(const LabeledGraph& g) {
  std::set<std::pair<int, int>> seen;
  for (const auto& [s, t, label] : g.edges) {
    (void)label;
    if (s == t) throw std::logic_error("graph invariant broken: self-loop");
    if (!seen.emplace(std::min(s, t), std::max(s, t)).second)
      throw std::logic_error("graph invariant broken: duplicate edge");
  }
}

Token make_token(Token::Kind kind, const Int& value) {
  Token t;
  t.kind = kind;
  if (kind == Token::Kind::Pair || kind == Token::Kind::Diff)
    t.r = value;
  else
    t.index = value;
  return t;
}

std::string move_label(const Move& m) {
  return "e[" + std::to_string(m.down) + "," + std::to_string(m.up) + "," + to_string(m.label) +
         "]";
}

long long pick(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

std::string seq_text(const std::vector<Int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += to_string(v[i]);
  }
  out += ')';
  return out;
}

}  // namespace

std::vector<long long> LabeledGraph::degrees() const {
  std::vector<long long> deg(verts.size(), 0);
  for (const auto& [s, t, label] : edges) {
    (void)label;
    ++deg[s];
    ++deg[t];
  }
  return deg;
}

std::vector<Token> standard_generators(const Group& G, std::optional<long long> coeff_bound) {
  const auto labels = G.ring().elements(coeff_bound);
  std::vector<Token> gens;
  for (int j = 0; j < G.rank(); ++j)
    for (const Int& r : labels) {
      Token t = make_token(Token::Kind::Pair, r);
      t.j = j;
      gens.push_back(t);
    }
  for (int j = 0; j < G.rank(); ++j)
    for (int k = j + 1; k < G.rank(); ++k)
      for (const Int& r : labels) {
        Token t = make_token(Token::Kind::Diff, r);
        t.j = j;
        t.k = k;
        gens.push_back(t);
      }
  return gens;
}

CayleyBall alphabet_ball(const Group& G, long long radius, const std::vector<Token>& alphabet,
                         std::optional<long long> coeff_bound, int threads) {
  std::vector<GroupElem> step;
  step.reserve(2 * alphabet.size());
  for (const Token& t : alphabet) {
    GroupElem g = eval_token(G, t);
    step.push_back(g);
    step.push_back(G.inv(g));
  }
  auto enumerated = bfs(
      G.identity(), radius, threads, [](const GroupElem& g) { return elem_body_json(g); },
      [&](const GroupElem& g) {
        std::vector<GroupElem> out;
        out.reserve(step.size());
        for (const GroupElem& s : step) out.push_back(G.mul(g, s));
        return out;
      });

  CayleyBall ball;
  ball.alphabet = alphabet;
  ball.elems = std::move(enumerated.items);
  ball.graph.kind = "cayley";
  ball.graph.ring = G.ring().name();
  ball.graph.rank = G.rank();
  ball.graph.radius = radius;
  if (!G.ring().modular()) ball.graph.coeff_bound = coeff_bound;
  ball.graph.verts = std::move(enumerated.keys);
  ball.graph.layer = std::move(enumerated.layer);
  ball.graph.index = std::move(enumerated.index);
  for (std::size_t u = 0; u < ball.elems.size(); ++u)
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      const GroupElem target = G.mul(ball.elems[u], step[2 * a]);
      auto it = ball.graph.index.find(elem_body_json(target));
      if (it == ball.graph.index.end()) continue;
      ball.graph.edges.emplace_back(static_cast<int>(u), it->second,
                                    format_token(alphabet[a]));
    }
  std::sort(ball.graph.edges.begin(), ball.graph.edges.end());
  check_edge_invariants(ball.graph);
  return ball;
}

CayleyBall cayley_ball(const Group& G, long long radius, std::optional<long long> coeff_bound,
                       int threads) {
  return alphabet_ball(G, radius, standard_generators(G, coeff_bound), coeff_bound, threads);
}

HoroBall horo_ball(const Group& G, long long radius, std::optional<long long> coeff_bound,
                   int threads) {
  HoroBall ball;
  ball.labels = G.ring().elements(coeff_bound);
  HoroVertex root;
  root.coords.resize(G.rank() + 1);
  auto enumerated = bfs(
      std::move(root), radius, threads, [](const HoroVertex& v) { return vertex_json(v); },
      [&](const HoroVertex& v) {
        std::vector<HoroVertex> out;
        for (auto& [mv, nb] : neighbors(v, ball.labels)) {
          (void)mv;
          out.push_back(std::move(nb));
        }
        return out;
      });
  ball.verts = std::move(enumerated.items);
  ball.graph.kind = "horocyclic";
  ball.graph.ring = G.ring().name();
  ball.graph.rank = G.rank();
  ball.graph.radius = radius;
  if (!G.ring().modular()) ball.graph.coeff_bound = coeff_bound;
  ball.graph.verts = std::move(enumerated.keys);
  ball.graph.layer = std::move(enumerated.layer);
  ball.graph.index = std::move(enumerated.index);
  for (std::size_t u = 0; u < ball.verts.size(); ++u)
    for (const auto& [mv, nb] : neighbors(ball.verts[u], ball.labels)) {
      auto it = ball.graph.index.find(vertex_json(nb));
      if (it == ball.graph.index.end()) continue;
      if (static_cast<int>(u) < it->second)
        ball.graph.edges.emplace_back(static_cast<int>(u), it->second, move_label(mv));
    }
  std::sort(ball.graph.edges.begin(), ball.graph.edges.end());
  check_edge_invariants(ball.graph);
  return ball;
}

IsoReport verify_iso(const Group& G, long long radius, std::optional<long long> coeff_bound,
                     int threads) {
  IsoReport rep;
  const CayleyBall cay = cayley_ball(G, radius, coeff_bound, threads);
  rep.cayley_vertices = static_cast<long long>(cay.graph.verts.size());
  rep.cayley_edges = static_cast<long long>(cay.graph.edges.size());

  const int n = static_cast<int>(cay.elems.size());
  std::vector<HoroVertex> image(n);
  std::vector<std::string> image_key(n);
  std::map<std::string, int> image_index;
  for (int i = 0; i < n; ++i) {
    image[i] = phi(G, cay.elems[i]);
    image_key[i] = vertex_json(image[i]);
    auto [it, fresh] = image_index.emplace(image_key[i], i);
    if (!fresh)
      push_capped(rep.violations, rep.violation_count,
                  "phi not injective: " + cay.graph.verts[it->second] + " and " +
                      cay.graph.verts[i] + " share " + image_key[i]);
  }

  // Each generator edge must map to a horocyclic edge whose (down, up)
  // coordinate pair matches the generator: (r, e_j) moves down in the
  // distinguished tree and up in tree j; (r, e_j)(r, e_k)^{-1} with j < k
  // moves down in tree k and up in tree j.
  std::map<std::string, Token> tok_by_label;
  for (const Token& t : cay.alphabet) tok_by_label.emplace(format_token(t), t);
  for (const auto& [u, v, label] : cay.graph.edges) {
    const auto mv = adjacent(image[u], image[v]);
    if (!mv) {
      push_capped(rep.violations, rep.violation_count,
                  "edge " + label + " at " + cay.graph.verts[u] +
                      " maps to a non-adjacent vertex pair");
      continue;
    }
    const Token& tk = tok_by_label.at(label);
    const int want_down = tk.kind == Token::Kind::Pair ? 0 : 1 + tk.k;
    const int want_up = 1 + tk.j;
    if (mv->down != want_down || mv->up != want_up)
      push_capped(rep.violations, rep.violation_count,
                  "edge " + label + " at " + cay.graph.verts[u] + " moves (down " +
                      std::to_string(mv->down) + ", up " + std::to_string(mv->up) +
                      "), expected (down " + std::to_string(want_down) + ", up " +
                      std::to_string(want_up) + ")");
  }

  if (G.ring().modular()) {
    rep.exact = true;
    const HoroBall horo = horo_ball(G, radius, coeff_bound, threads);
    rep.horo_vertices = static_cast<long long>(horo.graph.verts.size());
    rep.horo_edges = static_cast<long long>(horo.graph.edges.size());
    for (int i = 0; i < n; ++i)
      if (!horo.graph.index.count(image_key[i]))
        push_capped(rep.violations, rep.violation_count,
                    "image of " + cay.graph.verts[i] + " is outside the ball: " + image_key[i]);
    for (const auto& [key, id] : horo.graph.index) {
      (void)id;
      if (!image_index.count(key))
        push_capped(rep.violations, rep.violation_count, "vertex not reached by phi: " + key);
    }

    std::set<std::pair<int, int>> horo_pairs;
    for (const auto& [s, t, label] : horo.graph.edges) {
      (void)label;
      horo_pairs.emplace(std::min(s, t), std::max(s, t));
    }
    std::set<std::pair<int, int>> mapped;
    for (const auto& [u, v, label] : cay.graph.edges) {
      auto iu = horo.graph.index.find(image_key[u]);
      auto iv = horo.graph.index.find(image_key[v]);
      if (iu == horo.graph.index.end() || iv == horo.graph.index.end()) continue;
      const auto pr = std::minmax(iu->second, iv->second);
      mapped.emplace(pr.first, pr.second);
      if (!horo_pairs.count({pr.first, pr.second}))
        push_capped(rep.violations, rep.violation_count,
                    "mapped edge " + label + " at " + cay.graph.verts[u] +
                        " is not an edge of the ball");
    }
    for (const auto& pr : horo_pairs)
      if (!mapped.count(pr))
        push_capped(rep.violations, rep.violation_count,
                    "edge of the ball not covered by phi: " + horo.graph.verts[pr.first] +
                        " -- " + horo.graph.verts[pr.second]);

    const auto dc = cay.graph.degrees();
    const auto dh = horo.graph.degrees();
    for (int i = 0; i < n; ++i) {
      auto it = horo.graph.index.find(image_key[i]);
      if (it == horo.graph.index.end()) continue;
      if (dc[i] != dh[it->second])
        push_capped(rep.violations, rep.violation_count,
                    "degree mismatch at " + cay.graph.verts[i] + ": " + std::to_string(dc[i]) +
                        " vs " + std::to_string(dh[it->second]));
    }
  } else {
    rep.note =
        "infinite coefficient ring: one-sided check over the generator labels |r| <= bound; "
        "the full theorem quantifies over all of R";
  }
  rep.ok = rep.violation_count == 0;
  return rep;
}

RelatorReport check_relators(const Group& G, const std::string& presentation, long long bound) {
  const auto all = presentation_ids(G);
  std::vector<std::string> ids;
  if (presentation.empty() || presentation == "all") {
    ids = all;
  } else {
    std::string name = presentation;
    if (name == "i" || name == "ii" || name == "iii") {
      if (G.rank() == 1)
        name = name == "i" ? "commutators" : name == "ii" ? "lambda-mu" : "lambda-family";
      else if (G.rank() == 2)
        name = name == "i" ? "ast" : name == "ii" ? "mu-nu-c-d" : "lambda-mu-nu";
    }
    if (std::find(all.begin(), all.end(), name) == all.end())
      throw NotSupported("presentation '" + presentation + "' does not apply to " +
                         G.ring().name() + " at rank " + std::to_string(G.rank()));
    ids.push_back(name);
  }
  RelatorReport rep;
  for (const std::string& id : ids) {
    ++rep.families;
    for (const Word& w : relators(G, id, bound)) {
      ++rep.words;
      if (!G.is_identity(eval_word(G, w)))
        push_capped(rep.failures, rep.failure_count, id + ": " + format_word(w));
    }
  }
  rep.ok = rep.failure_count == 0;
  return rep;
}

TwoCellReport check_two_cells(const Group& G, long long radius,
                              std::optional<long long> coeff_bound, int threads) {
  if (G.rank() != 2)
    throw NotSupported("the two-cell check lives at rank 2, not rank " +
                       std::to_string(G.rank()));
  const Ring& R = G.ring();
  const auto labels = R.elements(coeff_bound);
  std::vector<Token> alpha;
  for (auto kind : {Token::Kind::Lam, Token::Kind::MuFam, Token::Kind::NuFam})
    for (const Int& r : labels) alpha.push_back(make_token(kind, r));

  const CayleyBall ball = alphabet_ball(G, radius, alpha, coeff_bound, threads);
  const int n = static_cast<int>(ball.elems.size());
  TwoCellReport rep;
  rep.vertices = n;

  std::vector<GroupElem> alpha_elems;
  alpha_elems.reserve(alpha.size());
  for (const Token& t : alpha) alpha_elems.push_back(eval_token(G, t));

  std::map<std::pair<int, int>, int> etok;  // directed edge -> alphabet index
  std::vector<std::vector<std::pair<int, int>>> out(n);
  for (int u = 0; u < n; ++u)
    for (std::size_t a = 0; a < alpha.size(); ++a) {
      auto it = ball.graph.index.find(elem_body_json(G.mul(ball.elems[u], alpha_elems[a])));
      if (it == ball.graph.index.end()) continue;
      etok.emplace(std::pair<int, int>{u, it->second}, static_cast<int>(a));
      out[u].emplace_back(it->second, static_cast<int>(a));
    }

  // Between any two vertices at most one directed alphabet edge exists, so a
  // triangle is a 3-vertex tournament: either transitive (source, middle,
  // sink) or a directed 3-cycle.  The latter cannot occur (the height sums of
  // lambda/mu/nu letters are 1, 1, 0 and three of them never cancel).
  for (int x = 0; x < n; ++x)
    for (const auto& [y, a1] : out[x])
      for (const auto& [z, a2] : out[y]) {
        auto chord = etok.find({x, z});
        if (chord == etok.end()) continue;
        ++rep.triangles;
        const Token& t1 = alpha[a1];
        const Token& t2 = alpha[a2];
        const Token& t3 = alpha[chord->second];
        const bool type1 = t1.kind == Token::Kind::MuFam && t2.kind == Token::Kind::NuFam &&
                           t3.kind == Token::Kind::Lam &&
                           R.reduce(t1.index + t2.index) == t3.index;
        const bool type2 = t1.kind == Token::Kind::NuFam && t2.kind == Token::Kind::MuFam &&
                           t2.index == t1.index && t3.kind == Token::Kind::Lam &&
                           t3.index == t1.index;
        if (type1)
          ++rep.type1;
        else if (type2)
          ++rep.type2;
        else
          push_capped(rep.anomalies, rep.anomaly_count,
                      "unclassified triangle at " + ball.graph.verts[x] + ": " +
                          format_token(t1) + " " + format_token(t2) + " vs " + format_token(t3));
      }
  for (int x = 0; x < n; ++x)
    for (const auto& [y, a1] : out[x]) {
      (void)a1;
      for (const auto& [z, a2] : out[y]) {
        (void)a2;
        if (x < y && x < z && etok.count({z, x}))
          push_capped(rep.anomalies, rep.anomaly_count,
                      "directed 3-cycle at " + ball.graph.verts[x]);
      }
    }

  // Converse: every relator instance whose triangle lies in the ball appears,
  // with exactly the predicted edge labels.
  std::set<Int> label_set(labels.begin(), labels.end());
  auto expect_edge = [&](int u, int v, const Token& want) {
    auto it = etok.find({u, v});
    return it != etok.end() && alpha[it->second] == want;
  };
  auto vertex_id = [&](const GroupElem& g) -> int {
    auto it = ball.graph.index.find(elem_body_json(g));
    return it == ball.graph.index.end() ? -1 : it->second;
  };
  long long inst1 = 0, inst2 = 0;
  for (int x = 0; x < n; ++x) {
    for (const Int& i : labels) {
      for (const Int& j : labels) {
        const Int sum = R.reduce(i + j);
        if (!label_set.count(sum)) continue;
        const GroupElem ye = G.mul(ball.elems[x], eval_token(G, make_token(Token::Kind::MuFam, i)));
        const GroupElem ze = G.mul(ye, eval_token(G, make_token(Token::Kind::NuFam, j)));
        const int y = vertex_id(ye);
        const int z = vertex_id(ze);
        if (y < 0 || z < 0) continue;
        ++inst1;
        if (!expect_edge(x, y, make_token(Token::Kind::MuFam, i)) ||
            !expect_edge(y, z, make_token(Token::Kind::NuFam, j)) ||
            !expect_edge(x, z, make_token(Token::Kind::Lam, sum)))
          push_capped(rep.anomalies, rep.anomaly_count,
                      "missing triangle for lambda[" + to_string(sum) + "] = mu[" + to_string(i) +
                          "] nu[" + to_string(j) + "] at " + ball.graph.verts[x]);
      }
    }
    for (const Int& i : labels) {
      const GroupElem ye = G.mul(ball.elems[x], eval_token(G, make_token(Token::Kind::NuFam, i)));
      const GroupElem ze = G.mul(ye, eval_token(G, make_token(Token::Kind::MuFam, i)));
      const int y = vertex_id(ye);
      const int z = vertex_id(ze);
      if (y < 0 || z < 0) continue;
      ++inst2;
      if (!expect_edge(x, y, make_token(Token::Kind::NuFam, i)) ||
          !expect_edge(y, z, make_token(Token::Kind::MuFam, i)) ||
          !expect_edge(x, z, make_token(Token::Kind::Lam, i)))
        push_capped(rep.anomalies, rep.anomaly_count,
                    "missing triangle for lambda[" + to_string(i) + "] = nu[" + to_string(i) +
                        "] mu[" + to_string(i) + "] at " + ball.graph.verts[x]);
    }
  }
  rep.instances = inst1 + inst2;
  if (inst1 != rep.type1 || inst2 != rep.type2)
    push_capped(rep.anomalies, rep.anomaly_count,
                "triangle census mismatch: classified " + std::to_string(rep.type1) + "+" +
                    std::to_string(rep.type2) + ", instantiated " + std::to_string(inst1) + "+" +
                    std::to_string(inst2));
  rep.ok = rep.anomaly_count == 0;
  return rep;
}

PropagationReport check_propagation(const Ring& R, long long samples, std::uint64_t seed) {
  const Group G(R, 2);
  const PolyRing& P = G.poly();
  std::mt19937_64 rng(seed);
  auto rand_coeff = [&]() {
    return R.modular() ? R.reduce(Int(pick(rng, 0, 1'000'000))) : Int(pick(rng, -9, 9));
  };
  PropagationReport rep;
  rep.samples = samples;
  for (long long s = 0; s < samples; ++s) {
    Poly f = P.zero();
    const long long laurent_terms = pick(rng, 0, 4);
    for (long long t = 0; t < laurent_terms; ++t)
      f = P.add(f, P.monomial(pick(rng, -6, 6), rand_coeff()));
    const long long pole_terms = pick(rng, 0, 3);
    for (long long t = 0; t < pole_terms; ++t)
      f = P.add(f, P.pole_term(1, pick(rng, 1, 5), rand_coeff()));
    const std::vector<long long> h{pick(rng, -6, 6), pick(rng, -6, 6)};
    const std::vector<long long> none{0, 0};
    const Poly fhat = P.mul_shift(f, {-h[0], -h[1]});
    const Entries cfg = config_from_poly(P, f);

    for (int star : {-1, 0, 1}) {
      const std::vector<Int> via_poly = P.seq_a(f, h, star);
      HalfPlane hp;
      switch (star) {
        case -1: hp = {HalfPlane::Kind::Infinity, h[0] + h[1]}; break;
        case 0: hp = {HalfPlane::Kind::Zero, h[0] - 1}; break;
        default: hp = {HalfPlane::Kind::One, h[1] - 1}; break;
      }
      const std::vector<Int> via_grid = propagate(R, cfg, hp, 0);
      const long long m = star == 1 ? h[0] : h[1];
      const std::vector<Int> b = P.seq_a(fhat, none, star);
      const std::vector<Int> via_pascal = pascal_b_to_a(R, star, m, b);
      const std::vector<Int> back = pascal_a_to_b(R, star, m, via_poly);
      if (via_grid != via_poly || via_pascal != via_poly || back != b)
        push_capped(rep.failures, rep.failure_count,
                    "sample " + std::to_string(s) + ", star " + std::to_string(star) + ", f = " +
                        poly_json(f) + ", h = (" + std::to_string(h[0]) + "," +
                        std::to_string(h[1]) + "): poly " + seq_text(via_poly) + ", grid " +
                        seq_text(via_grid) + ", pascal " + seq_text(via_pascal) + ", back " +
                        seq_text(back) + " from b " + seq_text(b));
    }
  }
  rep.ok = rep.failure_count == 0;
  return rep;
}

std::string to_json(const LabeledGraph& g) {
  std::string out = "{\"kind\":\"";
  out += json_escape(g.kind);
  out += "\",\"ring\":\"";
  out += json_escape(g.ring);
  out += "\",\"n\":";
  out += std::to_string(g.rank);
  out += ",\"radius\":";
  out += std::to_string(g.radius);
  out += ",\"coeff_bound\":";
  out += g.coeff_bound ? std::to_string(*g.coeff_bound) : "null";
  out += ",\"root\":";
  out += std::to_string(g.root);
  out += ",\"layers\":[";
  for (std::size_t i = 0; i < g.layer.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(g.layer[i]);
  }
  out += "],\"vertices\":[";
  for (std::size_t i = 0; i < g.verts.size(); ++i) {
    if (i) out += ',';
    out += g.verts[i];
  }
  out += "],\"edges\":[";
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i) out += ',';
    const auto& [s, t, label] = g.edges[i];
    out += '[';
    out += std::to_string(s);
    out += ',';
    out += std::to_string(t);
    out += ",\"";
    out += json_escape(label);
    out += "\"]";
  }
  out += "]}";
  return out;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_dot(const LabeledGraph& g) {
  std::string out = "digraph " + g.kind + " {\n";
  for (std::size_t i = 0; i < g.verts.size(); ++i) {
    out += "  \"" + dot_escape(g.verts[i]) + "\" [layer=\"" + std::to_string(g.layer[i]) +
           "\"];\n";
  }
  for (const auto& [s, t, label] : g.edges) {
    out += "  \"" + dot_escape(g.verts[s]) + "\" -> \"" + dot_escape(g.verts[t]) +
           "\" [label=\"" + dot_escape(label) + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::string to_graphml(const LabeledGraph& g) {
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      "  <key id=\"label\" for=\"all\" attr.name=\"label\" attr.type=\"string\"/>\n"
      "  <key id=\"layer\" for=\"node\" attr.name=\"layer\" attr.type=\"string\"/>\n"
      "  <graph id=\"";
  out += xml_escape(g.kind);
  out += "\" edgedefault=\"directed\">\n";
  for (std::size_t i = 0; i < g.verts.size(); ++i) {
    out += "    <node id=\"n" + std::to_string(i) + "\"><data key=\"label\">" +
           xml_escape(g.verts[i]) + "</data><data key=\"layer\">" + std::to_string(g.layer[i]) +
           "</data></node>\n";
  }
  for (const auto& [s, t, label] : g.edges) {
    out += "    <edge source=\"n" + std::to_string(s) + "\" target=\"n" + std::to_string(t) +
           "\"><data key=\"label\">" + xml_escape(label) + "</data></edge>\n";
  }
  out += "  </graph>\n</graphml>\n";
  return out;
}

std::string to_csv(const LabeledGraph& g) {
  std::string out = "source,target,label\n";
  for (const auto& [s, t, label] : g.edges)
    out += csv_field(g.verts[s]) + "," + csv_field(g.verts[t]) + "," + csv_field(label) + "\n";
  return out;
}

LabeledGraph import_graph(const std::string& json_text) {
  nlohmann::json v;
  try {
    v = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid graph JSON: ") + e.what());
  }
  if (!v.is_object()) throw ParseError("graph JSON must be an object");
  for (const char* field : {"kind", "ring", "n", "radius", "root", "layers", "vertices", "edges"})
    if (!v.contains(field)) throw ParseError(std::string("graph JSON needs '") + field + "'");

  LabeledGraph g;
  g.kind = v.at("kind").get<std::string>();
  g.ring = v.at("ring").get<std::string>();
  g.rank = v.at("n").get<int>();
  g.radius = v.at("radius").get<long long>();
  if (v.contains("coeff_bound") && !v.at("coeff_bound").is_null())
    g.coeff_bound = v.at("coeff_bound").get<long long>();
  g.root = v.at("root").get<int>();

  const Group G(Ring::parse(g.ring), g.rank);
  for (const auto& vert : v.at("vertices")) {
    std::string key;
    if (g.kind == "cayley")
      key = elem_body_json(parse_elem_json(G, vert.dump()));
    else if (g.kind == "horocyclic")
      key = vertex_json(parse_vertex_json(vert.dump()));
    else
      throw ParseError("unknown graph kind '" + g.kind + "'");
    const int id = static_cast<int>(g.verts.size());
    if (!g.index.emplace(key, id).second) throw ParseError("duplicate vertex: " + key);
    g.verts.push_back(std::move(key));
  }
  for (const auto& l : v.at("layers")) g.layer.push_back(l.get<long long>());
  if (g.layer.size() != g.verts.size())
    throw ParseError("'layers' and 'vertices' lengths differ");
  for (const auto& e : v.at("edges")) {
    if (!e.is_array() || e.size() != 3) throw ParseError("edges must be [src, dst, label]");
    const int s = e.at(0).get<int>();
    const int t = e.at(1).get<int>();
    if (s < 0 || t < 0 || s >= static_cast<int>(g.verts.size()) ||
        t >= static_cast<int>(g.verts.size()))
      throw ParseError("edge endpoint out of range");
    g.edges.emplace_back(s, t, e.at(2).get<std::string>());
  }
  if (g.root < 0 || g.root >= static_cast<int>(g.verts.size()))
    throw ParseError("root out of range");
  return g;
}

}  // namespace horolamp
