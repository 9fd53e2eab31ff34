// Ball enumeration, the lock-step isomorphism / relator / two-cell /
// propagation checks, and graph serialization.
//
// Determinism contract: vertex ids are assigned in BFS-layer order with each
// layer sorted by its canonical key, edges are sorted tuples, and every
// export is a pure function of the graph.  Parallel frontier expansion only
// changes the schedule, never the result.
#pragma once

#include <cstdint>
#include <optional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "horolamp/group.hpp"
#include "horolamp/tree.hpp"
#include "horolamp/words.hpp"

namespace horolamp {

struct LabeledGraph {
  std::string kind;  // "cayley" or "horocyclic"
  std::string ring;
  int rank = 0;
  long long radius = 0;
  std::optional<long long> coeff_bound;  // recorded for infinite rings
  int root = 0;
  std::vector<std::string> verts;   // canonical JSON key per vertex id
  std::vector<long long> layer;     // BFS depth per vertex id
  std::map<std::string, int> index; // key -> id
  // (src, dst, label); each undirected edge appears exactly once, labeled
  // from the src endpoint's point of view.
  std::vector<std::tuple<int, int, std::string>> edges;

  std::vector<long long> degrees() const;  // incident edges per vertex
};

struct CayleyBall {
  LabeledGraph graph;
  std::vector<GroupElem> elems;  // by vertex id
  std::vector<Token> alphabet;   // positive letters, in edge-label order
};

struct HoroBall {
  LabeledGraph graph;
  std::vector<HoroVertex> verts;
  std::vector<Int> labels;
};

// (r, e_j) for every ring label r and 0 <= j < n, then (r, e_j)(r, e_k)^{-1}
// for j < k.  Infinite rings need a coefficient bound.
std::vector<Token> standard_generators(const Group& G, std::optional<long long> coeff_bound);

// Ball of the given word-length radius over an alphabet (letters and their
// inverses); `cayley_ball` uses the standard generators.
CayleyBall alphabet_ball(const Group& G, long long radius, const std::vector<Token>& alphabet,
                         std::optional<long long> coeff_bound, int threads = 1);
CayleyBall cayley_ball(const Group& G, long long radius, std::optional<long long> coeff_bound,
                       int threads = 1);
// Ball in the horocyclic product around the all-empty vertex.
HoroBall horo_ball(const Group& G, long long radius, std::optional<long long> coeff_bound,
                   int threads = 1);

struct IsoReport {
  bool ok = false;
  bool exact = false;  // finite ring: two-sided vertex/edge/degree comparison
  long long cayley_vertices = 0, cayley_edges = 0;
  long long horo_vertices = 0, horo_edges = 0;
  long long violation_count = 0;
  std::vector<std::string> violations;  // deterministic, capped
  std::string note;
};

// Maps the Cayley ball through phi and compares with the horocyclic ball:
// injectivity, vertex sets, edge sets, the (down, up) coordinate pattern of
// every generator edge, and per-vertex degrees.  For infinite rings only the
// one-sided checks run (see note field).
IsoReport verify_iso(const Group& G, long long radius, std::optional<long long> coeff_bound,
                     int threads = 1);

struct RelatorReport {
  bool ok = true;
  long long families = 0;
  long long words = 0;
  long long failure_count = 0;
  std::vector<std::string> failures;  // "family: word", capped
};

// presentation = family name, "i"/"ii"/"iii" alias, or "all".
RelatorReport check_relators(const Group& G, const std::string& presentation, long long bound);

struct TwoCellReport {
  bool ok = true;
  long long vertices = 0;
  long long triangles = 0;
  long long type1 = 0;  // x -mu_i-> y -nu_j-> z with chord lambda_{i+j}
  long long type2 = 0;  // x -nu_i-> y -mu_i-> z with chord lambda_i
  long long instances = 0;
  long long anomaly_count = 0;
  std::vector<std::string> anomalies;  // capped
};

// Rank 2 only: enumerates all triangles in the lambda/mu/nu-alphabet ball,
// classifies each as a defining-relator instance, and conversely realizes
// every in-ball relator instance as a triangle.
TwoCellReport check_two_cells(const Group& G, long long radius,
                              std::optional<long long> coeff_bound, int threads = 1);

struct PropagationReport {
  bool ok = true;
  long long samples = 0;
  long long failure_count = 0;
  std::vector<std::string> failures;  // capped
};

// Random rank-2 oracle triangle over the given ring: grid propagation,
// polynomial sequence extraction, and the Pascal closed forms must agree.
PropagationReport check_propagation(const Ring& R, long long samples, std::uint64_t seed);

std::string to_json(const LabeledGraph& g);
std::string to_dot(const LabeledGraph& g);
std::string to_graphml(const LabeledGraph& g);
std::string to_csv(const LabeledGraph& g);  // source,target,label
// Reads a to_json export back; re-serializing gives the original bytes.
LabeledGraph import_graph(const std::string& json_text);

}  // namespace horolamp
