#include "stepcomp/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "stepcomp/competition.hpp"
#include "stepcomp/constructors.hpp"
#include "stepcomp/formats.hpp"
#include "stepcomp/isomorphism.hpp"
#include "stepcomp/structure.hpp"
#include "stepcomp/verify.hpp"

namespace stepcomp {
namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kIndeterminate = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct TournamentInput {
  int m = 0, n = 0;
  std::string bit_chars;
  std::string file;

  bool given() const { return !bit_chars.empty() || !file.empty(); }
  BipartiteTournament load() const {
    if (!file.empty()) return parse_tournament_text(read_file(file));
    return BipartiteTournament::from_bit_string(m, n, bit_chars);
  }
  void attach(CLI::App* cmd) {
    cmd->add_option("--m", m, "side-1 size");
    cmd->add_option("--n", n, "side-2 size");
    cmd->add_option("--bits", bit_chars,
                    "row-major orientation bit string (bit i*n+j = 1 means "
                    "the arc runs from side-1 vertex i to side-2 vertex j; "
                    "the 3x2 star example is --m 3 --n 2 --bits 101101)");
    cmd->add_option("--input", file,
                    "orientation file: header line \"m n\", then the bits");
  }
};

struct GraphInput {
  int order = 0;
  std::string edges;  // inline "0-1,1-2"
  std::string file;

  bool given() const { return !edges.empty() || !file.empty(); }
  SimpleGraph load() const {
    if (!file.empty()) return parse_graph_text(read_file(file));
    SimpleGraph g(order);
    std::istringstream in(edges);
    std::string token;
    while (std::getline(in, token, ',')) {
      auto dash = token.find('-');
      if (dash == std::string::npos)
        throw std::invalid_argument("edge token needs the form u-v: " + token);
      g.add_edge(std::stoi(token.substr(0, dash)),
                 std::stoi(token.substr(dash + 1)));
    }
    return g;
  }
  void attach(CLI::App* cmd) {
    cmd->add_option("--order", order, "number of vertices");
    cmd->add_option("--edges", edges, "inline edge list, e.g. 0-1,1-2");
    cmd->add_option("--graph-file", file,
                    "graph file: order header, then \"u v\" edge lines");
  }
};

void print_witness(std::ostream& out, int u, int v, const EdgeWitness& wit) {
  out << u << "-" << v;
  if (wit.kind == EdgeWitness::Kind::kCommonOutNeighbor) {
    out << "  w=" << wit.w << " (common out-neighbor)";
  } else {
    const int walker = wit.direct_from == u ? v : u;
    out << "  w=" << wit.w << " (arc " << wit.direct_from << "->" << wit.w
        << ", walk " << walker << "->" << wit.intermediate << "->" << wit.w
        << ")";
  }
  out << "\n";
}

int cmd_compute(const TournamentInput& tin, const std::string& digraph_file,
                const std::string& kind, int i, int j, bool explain,
                const std::string& format, std::ostream& out) {
  std::optional<BipartiteTournament> t;
  Digraph d;
  if (tin.given()) {
    t = tin.load();
    d = t->to_digraph();
  } else if (!digraph_file.empty()) {
    d = parse_digraph_text(read_file(digraph_file));
  } else {
    throw std::invalid_argument(
        "need a tournament (--m/--n/--bits or --input) or --digraph");
  }

  SimpleGraph g;
  if (kind == "11") {
    g = competition_graph(d);
  } else if (kind == "12") {
    g = t ? c12_fast(*t) : step_competition_graph(d, {1, 2});
  } else if (kind == "ij") {
    if (i < 1 || j < 1)
      throw std::invalid_argument("step parameters must be >= 1");
    g = step_competition_graph(d, {i, j});
  } else {
    throw std::invalid_argument("unknown kind " + kind +
                                " (expected 11, 12 or ij)");
  }

  if (format == "dot")
    out << to_dot(g);
  else
    out << render_edge_list(g);

  if (explain) {
    if (kind == "ij")
      throw std::invalid_argument("witnesses exist for kinds 11 and 12 only");
    for (int u = 0; u < g.order(); ++u)
      bits::for_each(g.row(u), [&](int v) {
        if (u >= v) return;
        std::optional<EdgeWitness> wit;
        if (kind == "11")
          wit = competes(d, u, v);
        else if (t)
          wit = explain_edge(*t, u, v);
        else {
          wit = competes(d, u, v);
          if (!wit) wit = one_two_competes(d, u, v);
        }
        if (wit) print_witness(out, u, v, *wit);
      });
  }
  return kOk;
}

CliqueCover parse_cover(const std::string& text, int base_order) {
  // Cliques separated by ';', vertices by ','.
  CliqueCover cover;
  cover.base_order = base_order;
  std::istringstream in(text);
  std::string clique;
  while (std::getline(in, clique, ';')) {
    std::vector<int> verts;
    std::istringstream cin(clique);
    std::string vertex;
    while (std::getline(cin, vertex, ',')) verts.push_back(std::stoi(vertex));
    std::sort(verts.begin(), verts.end());
    cover.cliques.push_back(std::move(verts));
  }
  return cover;
}

int cmd_construct(const std::string& family, int m, int n, int l,
                  const GraphInput& gin, const std::string& cover_text,
                  std::ostream& out) {
  auto check = [&](bool ok, const std::string& what) {
    out << "self-check: " << what << ": " << (ok ? "ok" : "FAILED") << "\n";
    return ok ? kOk : kViolation;
  };

  if (family == "star") {
    auto t = star_witness();
    out << render_tournament(t);
    return check(are_isomorphic(c12_fast(t), star_graph(4)),
                 "C12 isomorphic to K_{1,4}");
  }
  if (family == "disjoint-union") {
    auto t = disjoint_union_witness(m, n);
    out << render_tournament(t);
    auto expected = disjoint_union(complete_graph(m), complete_graph(n));
    return check(are_isomorphic(c12_fast(t), expected),
                 "C12 isomorphic to K_" + std::to_string(m) + " u K_" +
                     std::to_string(n));
  }
  if (family == "pair-k10-k5") {
    auto t = pair_k10_k5_witness(m);
    out << render_tournament(t);
    auto expected = disjoint_union(complete_graph(m), complete_graph(5));
    return check(competition_graph(t.to_digraph()) == expected,
                 "competition graph = K_" + std::to_string(m) + " u K_5");
  }
  if (family == "complete") {
    auto t = complete_c12_witness(l);
    out << render_tournament(t);
    return check(c12_fast(t) == complete_graph(l),
                 "C12 = K_" + std::to_string(l));
  }
  if (family == "min-edge") {
    auto t = min_edge_witness(m, n);
    out << render_tournament(t);
    const std::size_t expected =
        (m == 2 && n == 2) ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2;
    return check(c12_fast(t).edge_count() == expected,
                 "C12 has " + std::to_string(expected) + " edges");
  }
  if (family == "fig2" || family == "diameter-three") {
    auto t = diameter_three_witness();
    out << render_tournament(t);
    SimpleGraph g = c12_fast(t);
    auto shape = classify_shape(g);
    return check(g.edge_count() == 13 &&
                     shape.nontrivial_diameter == std::optional<int>(3),
                 "C12 has 13 edges and diameter three");
  }
  if (family == "from-cover") {
    if (!gin.given())
      throw std::invalid_argument("from-cover needs a base graph");
    SimpleGraph g = gin.load();
    CliqueCover cover = parse_cover(cover_text, g.order());
    auto t = cover_to_orientation(g, cover, m);
    out << render_tournament(t);
    auto expected = disjoint_union(g, complete_graph(m));
    return check(competition_graph(t.to_digraph()) == expected,
                 "competition graph = base graph u K_" + std::to_string(m));
  }
  throw std::invalid_argument("unknown family " + family);
}

nlohmann::json report_json(const VerificationReport& report) {
  nlohmann::json j;
  j["check"] = report.check_id;
  j["m"] = report.m;
  j["n"] = report.n;
  j["dedup"] = report.dedup;
  j["orientations"] = report.orientations_tested;
  j["violations"] = report.violation_count;
  j["verified"] = report.verified();
  j["violation-witnesses"] = report.violations;
  for (const auto& [key, value] : report.observations) j[key] = value;
  if (report.extremal) {
    j["min-edges"] = report.extremal->min_edges;
    j["min-witness"] = report.extremal->min_witness;
    j["max-edges"] = report.extremal->max_edges;
    j["max-witness"] = report.extremal->max_witness;
  }
  return j;
}

int cmd_verify(const std::string& suite, int m, int n, int max_order,
               bool dedup, int jobs, int limit, bool force, std::uint64_t seed,
               bool details, bool dump_json, std::ostream& out,
               std::ostream& err) {
  EnumerationSpec spec;
  spec.m = m;
  spec.n = n;
  spec.dedup = dedup;
  spec.shards = jobs;
  spec.bit_limit = force ? 62 : limit;
  spec.equivalence_offset = seed;

  std::vector<VerificationReport> reports;
  if (suite == "components" || suite == "all")
    reports.push_back(verify_component_theorem(spec));
  if (suite == "diameter" || suite == "all")
    reports.push_back(verify_diameter_theorem(spec));
  if (suite == "invariants" || suite == "all")
    reports.push_back(verify_invariant_suite(spec));
  if (suite == "extremal" || suite == "all")
    reports.push_back(extremal_edge_counts(spec));
  if (suite == "trees") {
    SearchBudget budget;
    budget.jobs = jobs;
    reports.push_back(tree_census(max_order, budget));
  }
  if (reports.empty())
    throw std::invalid_argument(
        "unknown suite " + suite +
        " (expected components, diameter, invariants, extremal, trees, all)");

  bool all_verified = true;
  for (std::size_t k = 0; k < reports.size(); ++k) {
    if (k) out << "\n";
    if (dump_json)
      out << report_json(reports[k]).dump(2) << "\n";
    else
      out << reports[k].to_text(details);
    if (!reports[k].verified()) all_verified = false;
    err << "# " << reports[k].check_id << ": " << reports[k].wall_seconds
        << "s, " << jobs << " shard(s)\n";
  }
  return all_verified ? kOk : kViolation;
}

int cmd_realizable(const GraphInput& gin, std::uint64_t max_orientations,
                   std::uint64_t max_nodes, int jobs, bool no_symmetry,
                   std::ostream& out) {
  SimpleGraph h = gin.load();
  SearchBudget budget;
  budget.max_orientations = max_orientations;
  budget.max_nodes = max_nodes;
  budget.jobs = jobs;
  budget.use_symmetry = !no_symmetry;
  auto answer = is_c12_realizable(h, budget);

  out << "realizable: "
      << (answer.status == SearchStatus::kRealizable      ? "yes"
          : answer.status == SearchStatus::kNotRealizable ? "no"
                                                          : "indeterminate")
      << "\n";
  out << "orientations-tested: " << answer.orientations_tested << "\n";
  out << "nodes-visited: " << answer.nodes_visited << "\n";
  if (answer.certificate) {
    out << "certificate:\n" << render_tournament(*answer.certificate);
  }
  return answer.status == SearchStatus::kIndeterminate ? kIndeterminate : kOk;
}

int cmd_export(const TournamentInput& tin, const GraphInput& gin,
               const std::string& format, std::ostream& out) {
  if (tin.given()) {
    auto t = tin.load();
    if (format == "dot")
      out << to_dot(t);
    else if (format == "matrix")
      out << render_tournament(t);
    else if (format == "edge-list")
      throw std::invalid_argument(
          "edge-list export applies to graphs; tournaments support dot and "
          "matrix");
    else
      throw std::invalid_argument("unknown format " + format);
    return kOk;
  }
  if (gin.given()) {
    SimpleGraph g = gin.load();
    if (format == "dot")
      out << to_dot(g);
    else if (format == "edge-list")
      out << render_edge_list(g);
    else
      throw std::invalid_argument("graphs support dot and edge-list");
    return kOk;
  }
  throw std::invalid_argument("need a tournament or a graph to export");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "(i,j)-step competition graphs of digraphs, specialized for "
      "orientations of complete bipartite graphs"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand(
      "compute", "competition graph of a tournament or digraph");
  TournamentInput compute_t;
  compute_t.attach(compute);
  std::string compute_digraph;
  compute->add_option("--digraph", compute_digraph,
                      "digraph file: order header, then \"tail head\" lines");
  std::string kind = "12";
  compute->add_option("--kind", kind, "11 (plain), 12, or ij (general)");
  int step_i = 1, step_j = 1;
  compute->add_option("--i", step_i, "i for --kind ij");
  compute->add_option("--j", step_j, "j for --kind ij");
  bool explain = false;
  compute->add_flag("--explain", explain, "append a witness per edge");
  std::string compute_format = "edges";
  compute->add_option("--format", compute_format, "edges or dot");

  // construct
  auto* construct =
      app.add_subcommand("construct", "build a named witness orientation");
  std::string family;
  construct
      ->add_option("--family", family,
                   "star | disjoint-union | pair-k10-k5 | complete | "
                   "min-edge | fig2 (alias diameter-three) | from-cover")
      ->required();
  int c_m = 0, c_n = 0, c_l = 0;
  construct->add_option("--m", c_m, "m parameter");
  construct->add_option("--n", c_n, "n parameter");
  construct->add_option("--l", c_l, "target order for --family complete");
  GraphInput construct_graph;
  construct_graph.attach(construct);
  std::string cover_text;
  construct->add_option("--cover", cover_text,
                        "cliques for from-cover, e.g. \"0,1;1,2\"");

  // verify
  auto* verify = app.add_subcommand("verify", "exhaustive theorem checks");
  std::string suite;
  verify
      ->add_option("--suite", suite,
                   "components | diameter | invariants | extremal | trees | "
                   "all")
      ->required();
  int v_m = 1, v_n = 1, v_max_order = 7;
  verify->add_option("--m", v_m, "side-1 size");
  verify->add_option("--n", v_n, "side-2 size");
  verify->add_option("--max-order", v_max_order, "tree census bound (<= 7)");
  bool v_dedup = false;
  verify->add_flag("--dedup", v_dedup,
                   "visit one orientation per symmetry class");
  int v_jobs = 1;
  verify->add_option("--jobs", v_jobs, "parallel shards");
  int v_limit = 24;
  verify->add_option("--limit", v_limit, "exhaustive bit limit");
  bool v_force = false;
  verify->add_flag("--force", v_force, "lift the bit limit");
  std::uint64_t v_seed = 0;
  verify->add_option("--seed", v_seed,
                     "offset for the sampled definitional cross-check");
  bool v_details = false;
  verify->add_flag("--details", v_details,
                   "append shard count and timing to reports");
  bool v_json = false;
  verify->add_flag("--json", v_json, "dump reports as JSON");

  // realizable
  auto* realizable = app.add_subcommand(
      "realizable", "decide (1,2)-step competition realizability");
  GraphInput real_graph;
  real_graph.attach(realizable);
  std::uint64_t r_orientations = SearchBudget{}.max_orientations;
  std::uint64_t r_nodes = SearchBudget{}.max_nodes;
  realizable->add_option("--max-orientations", r_orientations,
                         "orientation budget");
  realizable->add_option("--max-nodes", r_nodes, "search node budget");
  int r_jobs = 1;
  realizable->add_option("--jobs", r_jobs, "parallel workers");
  bool r_no_symmetry = false;
  realizable->add_flag("--no-symmetry", r_no_symmetry,
                       "disable assignment symmetry reduction");

  // export
  auto* exporter = app.add_subcommand("export", "render an input");
  TournamentInput export_t;
  export_t.attach(exporter);
  GraphInput export_graph;
  export_graph.attach(exporter);
  std::string export_format = "dot";
  exporter->add_option("--format", export_format, "dot | edge-list | matrix");

  std::vector<const char*> argv;
  argv.push_back("stepcomp");
  for (const auto& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (compute->parsed())
      return cmd_compute(compute_t, compute_digraph, kind, step_i, step_j,
                         explain, compute_format, out);
    if (construct->parsed())
      return cmd_construct(family, c_m, c_n, c_l, construct_graph, cover_text,
                           out);
    if (verify->parsed())
      return cmd_verify(suite, v_m, v_n, v_max_order, v_dedup, v_jobs, v_limit,
                        v_force, v_seed, v_details, v_json, out, err);
    if (realizable->parsed())
      return cmd_realizable(real_graph, r_orientations, r_nodes, r_jobs,
                            r_no_symmetry, out);
    if (exporter->parsed())
      return cmd_export(export_t, export_graph, export_format, out);
  } catch (const std::domain_error& e) {
    err << "refused: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace stepcomp
