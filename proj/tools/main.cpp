// Command-line front end: evaluate and normalize words, apply the bijection
// in both directions, enumerate balls, run the verification suites, and
// convert exported graphs between formats.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "horolamp/errors.hpp"
#include "horolamp/graph.hpp"
#include "horolamp/grid.hpp"
#include "horolamp/group.hpp"
#include "horolamp/jsonio.hpp"
#include "horolamp/tree.hpp"
#include "horolamp/words.hpp"

namespace {

using namespace horolamp;

// Input arguments: "-" reads stdin, "@path" reads a file, anything else is
// taken literally.
std::string read_input(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1), std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file '" + arg.substr(1) + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

// Output targets: "" and "-" write to stdout.
void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file '" + path + "'");
  out << text;
}

struct Common {
  std::string ring = "Z/2";
  int n = 2;
  long long radius = 2;
  long long coeff_bound = 2;
  int threads = 1;
};

void add_ring_opts(CLI::App* cmd, Common& o) {
  cmd->add_option("--ring", o.ring, "coefficient ring, Z or Z/<m>")->capture_default_str();
  cmd->add_option("--n", o.n, "rank of the shift part")->capture_default_str();
}

void add_ball_opts(CLI::App* cmd, Common& o) {
  cmd->add_option("--radius", o.radius, "ball radius")->capture_default_str();
  cmd->add_option("--coeff-bound", o.coeff_bound,
                  "|r| bound on enumerated ring labels (infinite rings)")
      ->capture_default_str();
  cmd->add_option("--threads", o.threads, "worker threads for ball expansion")
      ->capture_default_str();
}

int clamp_threads(int t) { return t < 1 ? 1 : (t > 64 ? 64 : t); }

std::string render_graph(const LabeledGraph& g, const std::string& fmt) {
  if (fmt == "json") return to_json(g);
  if (fmt == "dot") return to_dot(g);
  if (fmt == "graphml") return to_graphml(g);
  return to_csv(g);
}

std::string json_bool(bool b) { return b ? "true" : "false"; }

std::string json_opt(const std::optional<long long>& v) {
  return v ? std::to_string(*v) : "null";
}

std::string json_list(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += '"';
    out += json_escape(items[i]);
    out += '"';
  }
  out += ']';
  return out;
}

void emit_report(const std::string& path, const std::string& json) {
  if (path.empty()) return;
  write_output(path, json + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for generalized lamplighter groups and their horocyclic tree models"};
  app.require_subcommand(1);
  int status = 0;

  // --- eval ---------------------------------------------------------------
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a word to a group element");
  Common eval_o;
  std::string eval_word_arg, eval_out;
  bool eval_board = false;
  add_ring_opts(eval_cmd, eval_o);
  eval_cmd->add_option("word", eval_word_arg, "word ('-' for stdin, '@file' for a file)")
      ->required();
  eval_cmd->add_flag("--board", eval_board, "also render the rank-2 board");
  eval_cmd->add_option("--out", eval_out, "output file (default stdout)");
  eval_cmd->callback([&] {
    const Group G(Ring::parse(eval_o.ring), eval_o.n);
    const GroupElem g = eval_word(G, parse_word(G, read_input(eval_word_arg)));
    std::string text = elem_json(G, g) + "\n";
    if (eval_board) text += board_matrix(board_of(G, g));
    write_output(eval_out, text);
  });

  // --- nf -----------------------------------------------------------------
  auto* nf_cmd = app.add_subcommand("nf", "canonical word for a word's value");
  Common nf_o;
  std::string nf_word_arg, nf_out;
  add_ring_opts(nf_cmd, nf_o);
  nf_cmd->add_option("word", nf_word_arg, "word ('-' for stdin, '@file' for a file)")->required();
  nf_cmd->add_option("--out", nf_out, "output file (default stdout)");
  nf_cmd->callback([&] {
    const Group G(Ring::parse(nf_o.ring), nf_o.n);
    const GroupElem g = eval_word(G, parse_word(G, read_input(nf_word_arg)));
    write_output(nf_out, format_word(normal_form(G, g)) + "\n");
  });

  // --- phi ----------------------------------------------------------------
  auto* phi_cmd = app.add_subcommand("phi", "map a group element to its tree-product vertex");
  Common phi_o;
  std::string phi_input, phi_out;
  bool phi_elem = false;
  add_ring_opts(phi_cmd, phi_o);
  phi_cmd->add_option("input", phi_input, "word, or element JSON with --elem")->required();
  phi_cmd->add_flag("--elem", phi_elem, "input is element JSON instead of a word");
  phi_cmd->add_option("--out", phi_out, "output file (default stdout)");
  phi_cmd->callback([&] {
    const Group G(Ring::parse(phi_o.ring), phi_o.n);
    const std::string text = read_input(phi_input);
    const GroupElem g =
        phi_elem ? parse_elem_json(G, text) : eval_word(G, parse_word(G, text));
    write_output(phi_out, vertex_json(phi(G, g)) + "\n");
  });

  // --- phi-inv ------------------------------------------------------------
  auto* inv_cmd = app.add_subcommand("phi-inv", "map a tree-product vertex back to the element");
  Common inv_o;
  std::string inv_input, inv_out;
  add_ring_opts(inv_cmd, inv_o);
  inv_cmd->add_option("input", inv_input, "vertex JSON ('-' for stdin, '@file' for a file)")
      ->required();
  inv_cmd->add_option("--out", inv_out, "output file (default stdout)");
  inv_cmd->callback([&] {
    const Group G(Ring::parse(inv_o.ring), inv_o.n);
    const GroupElem g = phi_inv(G, parse_vertex_json(read_input(inv_input)));
    write_output(inv_out, elem_json(G, g) + "\n");
  });

  // --- ball ---------------------------------------------------------------
  auto* ball_cmd = app.add_subcommand("ball", "enumerate a ball and export it");
  Common ball_o;
  std::string ball_kind = "cayley", ball_fmt = "json", ball_out;
  add_ring_opts(ball_cmd, ball_o);
  add_ball_opts(ball_cmd, ball_o);
  ball_cmd->add_option("--kind", ball_kind, "cayley or horo")
      ->check(CLI::IsMember({"cayley", "horo"}))
      ->capture_default_str();
  ball_cmd->add_option("--format", ball_fmt, "json, dot, graphml, or edge-csv")
      ->check(CLI::IsMember({"json", "dot", "graphml", "edge-csv"}))
      ->capture_default_str();
  ball_cmd->add_option("--out", ball_out, "output file (default stdout)");
  ball_cmd->callback([&] {
    const Group G(Ring::parse(ball_o.ring), ball_o.n);
    const int threads = clamp_threads(ball_o.threads);
    const LabeledGraph g =
        ball_kind == "cayley"
            ? cayley_ball(G, ball_o.radius, ball_o.coeff_bound, threads).graph
            : horo_ball(G, ball_o.radius, ball_o.coeff_bound, threads).graph;
    std::string text = render_graph(g, ball_fmt);
    if (ball_fmt == "json") text += "\n";
    write_output(ball_out, text);
  });

  // --- export -------------------------------------------------------------
  auto* export_cmd = app.add_subcommand("export", "convert an exported graph between formats");
  std::string export_in, export_fmt = "json", export_out;
  export_cmd->add_option("--in", export_in, "graph JSON ('-' for stdin, '@file' or a path)")
      ->required();
  export_cmd->add_option("--format", export_fmt, "json, dot, graphml, or edge-csv")
      ->check(CLI::IsMember({"json", "dot", "graphml", "edge-csv"}))
      ->capture_default_str();
  export_cmd->add_option("--out", export_out, "output file (default stdout)");
  export_cmd->callback([&] {
    std::string raw = export_in == "-" || (!export_in.empty() && export_in[0] == '@')
                          ? read_input(export_in)
                          : read_input("@" + export_in);
    const LabeledGraph g = import_graph(raw);
    std::string text = render_graph(g, export_fmt);
    if (export_fmt == "json") text += "\n";
    write_output(export_out, text);
  });

  // --- verify -------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->require_subcommand(1);

  auto* iso_cmd = verify_cmd->add_subcommand("iso", "ball-by-ball bijection check");
  Common iso_o;
  std::string iso_report;
  add_ring_opts(iso_cmd, iso_o);
  add_ball_opts(iso_cmd, iso_o);
  iso_cmd->add_option("--report", iso_report, "write a JSON report to this path");
  iso_cmd->callback([&] {
    const Group G(Ring::parse(iso_o.ring), iso_o.n);
    const IsoReport rep =
        verify_iso(G, iso_o.radius, iso_o.coeff_bound, clamp_threads(iso_o.threads));
    std::ostringstream out;
    out << "isomorphism check: ring " << G.ring().name() << ", n " << G.rank() << ", radius "
        << iso_o.radius << "\n";
    out << "cayley ball: " << rep.cayley_vertices << " vertices, " << rep.cayley_edges
        << " edges\n";
    if (rep.exact)
      out << "horocyclic ball: " << rep.horo_vertices << " vertices, " << rep.horo_edges
          << " edges (two-sided comparison)\n";
    else
      out << "note: " << rep.note << "\n";
    out << "violations: " << rep.violation_count << "\n";
    for (const auto& v : rep.violations) out << "  " << v << "\n";
    out << (rep.ok ? "PASS" : "FAIL") << "\n";
    std::cout << out.str();
    std::string json = "{\"check\":\"iso\",\"ring\":\"" + json_escape(G.ring().name()) +
                       "\",\"n\":" + std::to_string(G.rank()) +
                       ",\"radius\":" + std::to_string(iso_o.radius) + ",\"coeff_bound\":" +
                       json_opt(G.ring().modular() ? std::nullopt
                                                   : std::optional<long long>(iso_o.coeff_bound)) +
                       ",\"exact\":" + json_bool(rep.exact) +
                       ",\"cayley\":{\"vertices\":" + std::to_string(rep.cayley_vertices) +
                       ",\"edges\":" + std::to_string(rep.cayley_edges) + "}," +
                       (rep.exact ? "\"horocyclic\":{\"vertices\":" +
                                        std::to_string(rep.horo_vertices) +
                                        ",\"edges\":" + std::to_string(rep.horo_edges) + "}"
                                  : std::string("\"horocyclic\":null")) +
                       ",\"violation_count\":" + std::to_string(rep.violation_count) +
                       ",\"violations\":" + json_list(rep.violations) + ",\"note\":\"" +
                       json_escape(rep.note) + "\",\"ok\":" + json_bool(rep.ok) + "}";
    emit_report(iso_report, json);
    if (!rep.ok) status = 1;
  });

  auto* rel_cmd = verify_cmd->add_subcommand("relators", "relator families evaluate to identity");
  Common rel_o;
  std::string rel_pres = "all", rel_report;
  long long rel_bound = 2;
  add_ring_opts(rel_cmd, rel_o);
  rel_cmd->add_option("--pres", rel_pres, "family name, i/ii/iii alias, or all")
      ->capture_default_str();
  rel_cmd->add_option("--bound", rel_bound, "index bound for the families")
      ->capture_default_str();
  rel_cmd->add_option("--report", rel_report, "write a JSON report to this path");
  rel_cmd->callback([&] {
    const Group G(Ring::parse(rel_o.ring), rel_o.n);
    const RelatorReport rep = check_relators(G, rel_pres, rel_bound);
    std::ostringstream out;
    out << "relator check: ring " << G.ring().name() << ", n " << G.rank() << ", presentation '"
        << rel_pres << "', bound " << rel_bound << "\n";
    out << "families: " << rep.families << ", words: " << rep.words << ", failures: "
        << rep.failure_count << "\n";
    for (const auto& f : rep.failures) out << "  " << f << "\n";
    out << (rep.ok ? "PASS" : "FAIL") << "\n";
    std::cout << out.str();
    std::string json = "{\"check\":\"relators\",\"ring\":\"" + json_escape(G.ring().name()) +
                       "\",\"n\":" + std::to_string(G.rank()) + ",\"presentation\":\"" +
                       json_escape(rel_pres) + "\",\"bound\":" + std::to_string(rel_bound) +
                       ",\"families\":" + std::to_string(rep.families) +
                       ",\"words\":" + std::to_string(rep.words) +
                       ",\"failure_count\":" + std::to_string(rep.failure_count) +
                       ",\"failures\":" + json_list(rep.failures) +
                       ",\"ok\":" + json_bool(rep.ok) + "}";
    emit_report(rel_report, json);
    if (!rep.ok) status = 1;
  });

  auto* cells_cmd = verify_cmd->add_subcommand("two-cells", "triangle census of the rank-2 complex");
  Common cells_o;
  std::string cells_report;
  add_ring_opts(cells_cmd, cells_o);
  add_ball_opts(cells_cmd, cells_o);
  cells_cmd->add_option("--report", cells_report, "write a JSON report to this path");
  cells_cmd->callback([&] {
    const Group G(Ring::parse(cells_o.ring), cells_o.n);
    const TwoCellReport rep =
        check_two_cells(G, cells_o.radius, cells_o.coeff_bound, clamp_threads(cells_o.threads));
    std::ostringstream out;
    out << "two-cell check: ring " << G.ring().name() << ", n " << G.rank() << ", radius "
        << cells_o.radius << ", coefficient bound " << cells_o.coeff_bound << "\n";
    out << "vertices: " << rep.vertices << "\n";
    out << "triangles: " << rep.triangles << " (type1 " << rep.type1 << " + type2 " << rep.type2
        << "), relator instances: " << rep.instances << "\n";
    out << "anomalies: " << rep.anomaly_count << "\n";
    for (const auto& a : rep.anomalies) out << "  " << a << "\n";
    out << (rep.ok ? "PASS" : "FAIL") << "\n";
    std::cout << out.str();
    std::string json = "{\"check\":\"two-cells\",\"ring\":\"" + json_escape(G.ring().name()) +
                       "\",\"n\":" + std::to_string(G.rank()) +
                       ",\"radius\":" + std::to_string(cells_o.radius) + ",\"coeff_bound\":" +
                       json_opt(G.ring().modular()
                                    ? std::nullopt
                                    : std::optional<long long>(cells_o.coeff_bound)) +
                       ",\"vertices\":" + std::to_string(rep.vertices) +
                       ",\"triangles\":" + std::to_string(rep.triangles) +
                       ",\"type1\":" + std::to_string(rep.type1) +
                       ",\"type2\":" + std::to_string(rep.type2) +
                       ",\"instances\":" + std::to_string(rep.instances) +
                       ",\"anomaly_count\":" + std::to_string(rep.anomaly_count) +
                       ",\"anomalies\":" + json_list(rep.anomalies) +
                       ",\"ok\":" + json_bool(rep.ok) + "}";
    emit_report(cells_report, json);
    if (!rep.ok) status = 1;
  });

  auto* prop_cmd = verify_cmd->add_subcommand("propagation", "random three-route sequence oracle");
  std::string prop_ring = "Z/2", prop_report;
  long long prop_samples = 500;
  std::uint64_t prop_seed = 1;
  prop_cmd->add_option("--ring", prop_ring, "coefficient ring, Z or Z/<m>")
      ->capture_default_str();
  prop_cmd->add_option("--samples", prop_samples, "number of random elements")
      ->capture_default_str();
  prop_cmd->add_option("--seed", prop_seed, "random seed")->capture_default_str();
  prop_cmd->add_option("--report", prop_report, "write a JSON report to this path");
  prop_cmd->callback([&] {
    const Ring R = Ring::parse(prop_ring);
    const PropagationReport rep = check_propagation(R, prop_samples, prop_seed);
    std::ostringstream out;
    out << "propagation oracle: ring " << R.name() << ", samples " << rep.samples << ", seed "
        << prop_seed << "\n";
    out << "failures: " << rep.failure_count << "\n";
    for (const auto& f : rep.failures) out << "  " << f << "\n";
    out << (rep.ok ? "PASS" : "FAIL") << "\n";
    std::cout << out.str();
    std::string json = "{\"check\":\"propagation\",\"ring\":\"" + json_escape(R.name()) +
                       "\",\"samples\":" + std::to_string(rep.samples) +
                       ",\"seed\":" + std::to_string(prop_seed) +
                       ",\"failure_count\":" + std::to_string(rep.failure_count) +
                       ",\"failures\":" + json_list(rep.failures) +
                       ",\"ok\":" + json_bool(rep.ok) + "}";
    emit_report(prop_report, json);
    if (!rep.ok) status = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
