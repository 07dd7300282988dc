// degindex: degree-based topological index calculator and sharp-bound toolkit.
//
// Exit codes: 0 success; 1 verification found violations; 2 malformed flags;
// 3 invalid input (unknown kernel, malformed graph file, infeasible
// parameters).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "degindex/constructors.hpp"
#include "degindex/enumeration.hpp"
#include "degindex/extremal.hpp"
#include "degindex/graph.hpp"
#include "degindex/json_io.hpp"
#include "degindex/kernels.hpp"
#include "degindex/rational.hpp"
#include "degindex/regimes.hpp"

namespace {

constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalidInput = 3;

struct KernelOptions {
  std::string name = "randic";
  double alpha = 0.0;
  bool alpha_set = false;
  std::string table_path;
};

void add_kernel_options(CLI::App& cmd, KernelOptions& opts) {
  cmd.add_option("--kernel", opts.name,
                 "Kernel: randic | general_randic | zagreb_first | zagreb_second | tabulated")
      ->default_val("randic");
  cmd.add_option("--alpha", opts.alpha, "Exponent for general_randic")
      ->check(CLI::Number)
      ->each([&opts](const std::string&) { opts.alpha_set = true; });
  cmd.add_option("--table", opts.table_path, "CSV file for the tabulated kernel");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

degindex::Kernel make_kernel(const KernelOptions& opts) {
  if (opts.name == "randic") return degindex::Kernel::randic();
  if (opts.name == "general_randic") {
    if (!opts.alpha_set)
      throw std::invalid_argument("general_randic requires --alpha");
    return degindex::Kernel::general_randic(opts.alpha);
  }
  if (opts.name == "zagreb_first") return degindex::Kernel::zagreb_first();
  if (opts.name == "zagreb_second") return degindex::Kernel::zagreb_second();
  if (opts.name == "tabulated") {
    if (opts.table_path.empty())
      throw std::invalid_argument("tabulated kernel requires --table FILE");
    return degindex::Kernel::tabulated_from_csv(read_file(opts.table_path));
  }
  throw std::invalid_argument("unknown kernel '" + opts.name + "'");
}

degindex::GraphFormat parse_format(const std::string& name) {
  if (name == "graph6") return degindex::GraphFormat::Graph6;
  if (name == "edgelist") return degindex::GraphFormat::EdgeList;
  throw std::invalid_argument("unknown format '" + name + "' (expected graph6 or edgelist)");
}

// graph6 files may hold one graph per line; edge-list files hold one graph.
std::vector<degindex::Graph> read_graphs(const std::string& path,
                                         degindex::GraphFormat format) {
  const std::string text = read_file(path);
  if (format == degindex::GraphFormat::EdgeList)
    return {degindex::parse_graph(text, format)};
  std::vector<degindex::Graph> graphs;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    graphs.push_back(degindex::parse_graph(line, format));
  }
  if (graphs.empty()) throw std::invalid_argument("no graphs in file: " + path);
  return graphs;
}

degindex::Graph read_single_graph(const std::string& path, degindex::GraphFormat format) {
  auto graphs = read_graphs(path, format);
  if (graphs.size() != 1)
    throw std::invalid_argument(path + " holds " + std::to_string(graphs.size()) +
                                " graphs; expected exactly one");
  return graphs.front();
}

void print_json(const degindex::Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-based topological graph indices: values, sharp bounds, "
               "extremal certificates, regime maps, and exhaustive verification."};
  app.require_subcommand(1);

  // --- index ---------------------------------------------------------------
  auto* index_cmd = app.add_subcommand("index", "Evaluate an index on a graph");
  std::string index_graph, index_format = "graph6";
  KernelOptions index_kernel;
  index_cmd->add_option("--graph", index_graph, "Graph file")->required();
  index_cmd->add_option("--format", index_format, "graph6 | edgelist");
  add_kernel_options(*index_cmd, index_kernel);

  // --- bound ---------------------------------------------------------------
  auto* bound_cmd = app.add_subcommand("bound", "Sharp per-vertex bound coefficient");
  int bound_delta = 1, bound_Delta = 1;
  std::string bound_direction = "min";
  KernelOptions bound_kernel;
  bound_cmd->add_option("--delta", bound_delta, "Minimum degree")->required();
  bound_cmd->add_option("--Delta", bound_Delta, "Maximum degree")->required();
  bound_cmd->add_option("--direction", bound_direction, "min | max");
  add_kernel_options(*bound_cmd, bound_kernel);

  // --- certify -------------------------------------------------------------
  auto* certify_cmd = app.add_subcommand("certify", "Equality certificate for a graph");
  std::string certify_graph, certify_format = "graph6", certify_direction = "min";
  int certify_delta = 1, certify_Delta = 1;
  KernelOptions certify_kernel;
  certify_cmd->add_option("--graph", certify_graph, "Graph file")->required();
  certify_cmd->add_option("--format", certify_format, "graph6 | edgelist");
  certify_cmd->add_option("--delta", certify_delta, "Minimum degree")->required();
  certify_cmd->add_option("--Delta", certify_Delta, "Maximum degree")->required();
  certify_cmd->add_option("--direction", certify_direction, "min | max");
  add_kernel_options(*certify_cmd, certify_kernel);

  // --- regime --------------------------------------------------------------
  auto* regime_cmd = app.add_subcommand("regime", "Regime report for the generalised Randic index");
  int regime_delta = 1, regime_Delta = 2;
  double regime_alpha = 0.0;
  regime_cmd->add_option("--delta", regime_delta, "Minimum degree")->required();
  regime_cmd->add_option("--Delta", regime_Delta, "Maximum degree")->required();
  regime_cmd->add_option("--alpha", regime_alpha, "Exponent")->required();

  // --- diagram -------------------------------------------------------------
  auto* diagram_cmd = app.add_subcommand("diagram", "Regime map as CSV (c,alpha,regime,t1,t2)");
  double c_min = 0.1, c_max = 0.9, c_step = 0.1;
  double alpha_min = -1.5, alpha_max = 0.5, alpha_step = 0.05;
  diagram_cmd->add_option("--c-min", c_min, "Smallest degree ratio, in (0,1)")->required();
  diagram_cmd->add_option("--c-max", c_max, "Largest degree ratio, in (0,1)")->required();
  diagram_cmd->add_option("--c-step", c_step, "Ratio step")->required();
  diagram_cmd->add_option("--alpha-min", alpha_min, "Smallest exponent")->required();
  diagram_cmd->add_option("--alpha-max", alpha_max, "Largest exponent")->required();
  diagram_cmd->add_option("--alpha-step", alpha_step, "Exponent step")->required();

  // --- construct -----------------------------------------------------------
  auto* construct_cmd = app.add_subcommand("construct", "Emit extremal-family graphs as graph6");
  construct_cmd->require_subcommand(1);

  auto* kab_cmd = construct_cmd->add_subcommand("kab", "Complete bipartite graph");
  int kab_a = 1, kab_b = 1;
  kab_cmd->add_option("--a", kab_a, "First part size")->required();
  kab_cmd->add_option("--b", kab_b, "Second part size")->required();

  auto* bireg_cmd = construct_cmd->add_subcommand("biregular", "Biregular graph of arbitrary size");
  int bireg_a = 1, bireg_b = 1, bireg_t = 1;
  bireg_cmd->add_option("--a", bireg_a, "Smaller degree")->required();
  bireg_cmd->add_option("--b", bireg_b, "Larger degree")->required();
  bireg_cmd->add_option("--t", bireg_t, "Repetition factor (graph has (a+b)*t vertices)")->required();

  auto* circ_cmd = construct_cmd->add_subcommand("circulant", "Regular circulant graph");
  int circ_n = 3, circ_r = 2;
  circ_cmd->add_option("--n", circ_n, "Vertex count")->required();
  circ_cmd->add_option("--r", circ_r, "Degree")->required();

  auto* union_cmd = construct_cmd->add_subcommand("union", "Disjoint union of graphs");
  std::vector<std::string> union_files;
  std::string union_format = "graph6";
  union_cmd->add_option("--graph", union_files, "Graph file (repeatable)")->required();
  union_cmd->add_option("--format", union_format, "graph6 | edgelist");

  // --- verify --------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive bound check on small graphs");
  int verify_n = 1, verify_delta = 1, verify_Delta = 1;
  std::string verify_direction = "min";
  KernelOptions verify_kernel;
  verify_cmd->add_option("--n", verify_n, "Vertex count (at most 8)")->required();
  verify_cmd->add_option("--delta", verify_delta, "Minimum degree")->required();
  verify_cmd->add_option("--Delta", verify_Delta, "Maximum degree")->required();
  verify_cmd->add_option("--direction", verify_direction, "min | max");
  add_kernel_options(*verify_cmd, verify_kernel);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*index_cmd) {
      const auto g = read_single_graph(index_graph, parse_format(index_format));
      const auto kernel = make_kernel(index_kernel);
      if (kernel.rational_exact())
        std::cout << degindex::rational_to_string(degindex::exact_index_value(g, kernel)) << "\n";
      else
        std::cout << degindex::format_real(degindex::index_value(g, kernel)) << "\n";
    } else if (*bound_cmd) {
      const degindex::DegreeRange range(bound_delta, bound_Delta);
      const auto kernel = make_kernel(bound_kernel);
      const auto result = degindex::optimal_pairs(kernel, range,
                                                  degindex::parse_direction(bound_direction));
      print_json(degindex::to_json(result, range, kernel));
    } else if (*certify_cmd) {
      const degindex::DegreeRange range(certify_delta, certify_Delta);
      const auto kernel = make_kernel(certify_kernel);
      const auto g = read_single_graph(certify_graph, parse_format(certify_format));
      const auto certificate = degindex::certify_equality(
          g, kernel, range, degindex::parse_direction(certify_direction));
      print_json(degindex::to_json(certificate, range, kernel));
    } else if (*regime_cmd) {
      const degindex::DegreeRange range(regime_delta, regime_Delta);
      print_json(degindex::to_json(degindex::classify_regime(range, regime_alpha)));
    } else if (*diagram_cmd) {
      if (!(c_step > 0)) throw std::invalid_argument("c step must be positive");
      std::vector<double> samples;
      for (long k = 0;; ++k) {
        double c = c_min + static_cast<double>(k) * c_step;
        if (c > c_max + c_step * 1e-9) break;
        samples.push_back(c);
      }
      const auto rows = degindex::diagram_data(samples, alpha_min, alpha_max, alpha_step);
      degindex::write_diagram_csv(std::cout, rows);
    } else if (*construct_cmd) {
      degindex::Graph g;
      if (*kab_cmd) {
        g = degindex::complete_bipartite(kab_a, kab_b);
      } else if (*bireg_cmd) {
        g = degindex::biregular_graph(bireg_a, bireg_b, bireg_t);
      } else if (*circ_cmd) {
        g = degindex::circulant_regular(circ_n, circ_r);
      } else {
        std::vector<degindex::Graph> parts;
        const auto format = parse_format(union_format);
        for (const auto& path : union_files)
          for (auto& graph : read_graphs(path, format)) parts.push_back(std::move(graph));
        g = degindex::disjoint_union(parts);
      }
      std::cout << degindex::serialize_graph(g, degindex::GraphFormat::Graph6) << "\n";
    } else if (*verify_cmd) {
      const degindex::DegreeRange range(verify_delta, verify_Delta);
      const auto kernel = make_kernel(verify_kernel);
      const auto report = degindex::verify_bound(verify_n, range, kernel,
                                                 degindex::parse_direction(verify_direction));
      print_json(degindex::to_json(report));
      if (!report.violations.empty()) return kExitViolations;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return 0;
}
