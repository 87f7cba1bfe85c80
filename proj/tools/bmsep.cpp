// bmsep: exact blossom-inequality separation for b-matching polytopes.
//
// Subcommands:
//   separate <instance> <point>   most violated blossom inequality, if any
//   gomory-hu <graph>             cut tree over a terminal set
//   tcut <graph> -T ...           minimum T-cut
//
// Exit status: 0 no violation / success, 1 violation found, 2 input error,
// 3 oracle cross-check mismatch.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "bmsep/io.hpp"
#include "bmsep/maxflow.hpp"
#include "bmsep/odd_cut.hpp"
#include "bmsep/oracle.hpp"
#include "bmsep/separation.hpp"

namespace {

using namespace bmsep;

constexpr int kExitClean = 0;
constexpr int kExitViolated = 1;
constexpr int kExitInputError = 2;
constexpr int kExitOracleMismatch = 3;

std::ifstream open_or_fail(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return in;
}

std::vector<VertexId> parse_id_list(const std::string& csv) {
  std::vector<VertexId> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long v = std::stoul(item, &pos);
    if (pos != item.size()) throw std::runtime_error("malformed vertex id '" + item + "'");
    out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

template <typename Range>
std::string braces(const Range& xs) {
  std::string out = "{";
  bool first = true;
  for (const auto& x : xs) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

void print_count_line(bool enabled) {
  if (enabled) std::cout << "maxflow_calls=" << min_st_cut_calls() << "\n";
}

int cmd_separate(const std::string& instance_path, const std::string& point_path,
                 const std::string& mode_flag, bool oracle_check, bool count_maxflows) {
  auto in = open_or_fail(instance_path);
  io::ParsedInstance parsed = [&] {
    try {
      return io::read_instance(in);
    } catch (const io::ParseError& e) {
      throw std::runtime_error(instance_path + ": " + e.what());
    }
  }();
  auto pin = open_or_fail(point_path);
  const FractionalPoint x = [&] {
    try {
      return io::read_point(pin, parsed.instance.graph().edge_count());
    } catch (const io::ParseError& e) {
      throw std::runtime_error(point_path + ": " + e.what());
    }
  }();
  if (!mode_flag.empty() && mode_flag != parsed.mode_name)
    throw std::runtime_error("mode mismatch: file says '" + parsed.mode_name + "', flag says '" +
                             mode_flag + "'");

  const Instance& inst = parsed.instance;
  reset_min_st_cut_calls();

  const auto degree_bounds = check_degree_and_bounds(inst, x);
  if (!degree_bounds.empty()) {
    for (const auto& v : degree_bounds) {
      if (v.kind == ConstraintViolation::Kind::degree)
        std::cout << "DEGREE i=" << v.vertex << " violation=" << v.amount.str() << "\n";
      else
        std::cout << "BOUND e=" << v.edge << " violation=" << v.amount.str() << "\n";
    }
    print_count_line(count_maxflows);
    return kExitViolated;
  }

  const SeparationResult r = inst.mode() == MatchingMode::uncapacitated
                                 ? separate_uncapacitated(inst, x)
                                 : separate_capacitated(inst, x);
  if (r.violated) {
    const ViolatedBlossom& vb = *r.violated;
    std::cout << "BLOSSOM W=" << braces(vb.w) << " F=" << braces(vb.f)
              << " lhs=" << vb.lhs.str() << " rhs=" << vb.rhs
              << " violation=" << vb.violation.str() << " beta=" << vb.beta.str() << "\n";
  } else {
    std::cout << "FEASIBLE beta=" << r.min_beta.str() << "\n";
  }
  print_count_line(count_maxflows);

  if (oracle_check) {
    const Graph& g = inst.graph();
    if (g.vertex_count() <= 6 && g.edge_count() <= 10) {
      const auto want = oracle::bf_most_violated_blossom(inst, x);
      const bool match = want.has_value() == r.violated.has_value() &&
                         (!want || want->violation == r.violated->violation);
      if (!match) {
        std::cerr << "ORACLE MISMATCH: brute-force referee disagrees\n";
        return kExitOracleMismatch;
      }
    } else {
      std::cerr << "oracle check skipped: instance exceeds enumeration guards\n";
    }
  }
  return r.violated ? kExitViolated : kExitClean;
}

int cmd_gomory_hu(const std::string& graph_path, const std::string& terminals_flag,
                  bool oracle_check, bool count_maxflows) {
  auto in = open_or_fail(graph_path);
  const io::WeightedGraph wg = [&] {
    try {
      return io::read_weighted_graph(in);
    } catch (const io::ParseError& e) {
      throw std::runtime_error(graph_path + ": " + e.what());
    }
  }();
  std::vector<VertexId> terminals;
  if (terminals_flag.empty())
    terminals.assign(wg.graph.vertices().begin(), wg.graph.vertices().end());
  else
    terminals = parse_id_list(terminals_flag);

  reset_min_st_cut_calls();
  const CutTree tree = gomory_hu(wg.graph, wg.weights, terminals);
  for (const auto& e : tree.tree_edges())
    std::cout << "t " << e.x << " " << e.y << " " << e.cut_value.str() << "\n";
  for (const auto& [v, home] : tree.pi_map())
    if (v != home) std::cout << "pi " << v << " " << home << "\n";
  print_count_line(count_maxflows);

  if (oracle_check) {
    if (wg.graph.vertex_count() <= 20) {
      for (std::size_t k = 0; k < tree.tree_edges().size(); ++k) {
        const auto& e = tree.tree_edges()[k];
        const auto bf = oracle::bf_min_st_cut(wg.graph, wg.weights, e.x, e.y);
        if (bf.value != e.cut_value ||
            cut_weight(wg.graph, wg.weights, tree.induced_cut(k)) != e.cut_value) {
          std::cerr << "ORACLE MISMATCH: tree edge " << e.x << "~" << e.y
                    << " is not a minimum cut\n";
          return kExitOracleMismatch;
        }
      }
    } else {
      std::cerr << "oracle check skipped: instance exceeds enumeration guards\n";
    }
  }
  return kExitClean;
}

int cmd_tcut(const std::string& graph_path, const std::string& t_flag, bool oracle_check,
             bool count_maxflows) {
  auto in = open_or_fail(graph_path);
  const io::WeightedGraph wg = [&] {
    try {
      return io::read_weighted_graph(in);
    } catch (const io::ParseError& e) {
      throw std::runtime_error(graph_path + ": " + e.what());
    }
  }();
  const std::vector<VertexId> t = parse_id_list(t_flag);

  reset_min_st_cut_calls();
  const TCut cut = minimum_t_cut(wg.graph, wg.weights, t);
  std::cout << "TCUT U=" << braces(cut.u) << " value=" << cut.value.str() << "\n";
  print_count_line(count_maxflows);

  if (oracle_check) {
    if (wg.graph.vertex_count() <= 16) {
      if (oracle::bf_min_t_cut(wg.graph, wg.weights, t).value != cut.value) {
        std::cerr << "ORACLE MISMATCH: brute-force T-cut value differs\n";
        return kExitOracleMismatch;
      }
    } else {
      std::cerr << "oracle check skipped: instance exceeds enumeration guards\n";
    }
  }
  return kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact blossom-inequality separation for b-matching polytopes"};
  app.require_subcommand(1);

  std::string instance_path, point_path, graph_path;
  std::string mode_flag, x_flag, t_flag;
  bool oracle_check = false, count_maxflows = false;

  CLI::App* sep = app.add_subcommand("separate", "separate a fractional point");
  sep->add_option("instance", instance_path, "instance file")->required();
  sep->add_option("point", point_path, "point file")->required();
  sep->add_option("--mode", mode_flag, "expected instance mode (cap|uncap|perfect|tsp)");
  sep->add_flag("--oracle-check", oracle_check, "cross-validate against brute force");
  sep->add_flag("--count-maxflows", count_maxflows, "print the max-flow invocation count");

  CLI::App* gh = app.add_subcommand("gomory-hu", "build a cut tree");
  gh->add_option("graph", graph_path, "weighted graph file")->required();
  gh->add_option("-X", x_flag, "comma-separated terminal ids (default: all)");
  gh->add_flag("--oracle-check", oracle_check, "cross-validate against brute force");
  gh->add_flag("--count-maxflows", count_maxflows, "print the max-flow invocation count");

  CLI::App* tc = app.add_subcommand("tcut", "minimum T-cut");
  tc->add_option("graph", graph_path, "weighted graph file")->required();
  tc->add_option("-T", t_flag, "comma-separated T ids")->required();
  tc->add_flag("--oracle-check", oracle_check, "cross-validate against brute force");
  tc->add_flag("--count-maxflows", count_maxflows, "print the max-flow invocation count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (sep->parsed()) return cmd_separate(instance_path, point_path, mode_flag, oracle_check,
                                           count_maxflows);
    if (gh->parsed()) return cmd_gomory_hu(graph_path, x_flag, oracle_check, count_maxflows);
    if (tc->parsed()) return cmd_tcut(graph_path, t_flag, oracle_check, count_maxflows);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
