// command-line front end: decompose single graphs, verify decompositions,
// consult the brute-force search, and run batches over generated corpora
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cubicdec/batch.hpp"
#include "cubicdec/corpus.hpp"
#include "cubicdec/decomposer.hpp"
#include "cubicdec/graph.hpp"
#include "cubicdec/ham_path.hpp"
#include "cubicdec/json_io.hpp"
#include "cubicdec/oracle.hpp"
#include "cubicdec/plan.hpp"

namespace {

using namespace cubicdec;

constexpr int exit_clean = 0;
constexpr int exit_negative = 1;  // not traceable, verification failed, gaps, budget ran out
constexpr int exit_refused = 2;   // usage errors and refused instances

struct input_opts {
  std::string g6;
  std::string edges_path;
  bool from_stdin = false;
};

void add_input(CLI::App* sub, input_opts& in) {
  auto* grp = sub->add_option_group("input", "graph source (pick one)");
  grp->add_option("--g6", in.g6, "graph6 string");
  grp->add_option("--edges", in.edges_path, "edge-list file: header 'n m', then one 'u v' per line");
  grp->add_flag("--stdin", in.from_stdin, "read one graph6 line from standard input");
  grp->require_option(1);
}

cubic_graph load_graph(const input_opts& in) {
  if (!in.g6.empty()) return parse_graph6(in.g6);
  if (!in.edges_path.empty()) {
    std::ifstream f(in.edges_path);
    if (!f) throw graph_error(graph_errc::malformed_input, "cannot open " + in.edges_path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_edge_list_text(ss.str());
  }
  std::string line;
  if (!std::getline(std::cin, line))
    throw graph_error(graph_errc::malformed_input, "no graph6 line on standard input");
  return parse_graph6(line);
}

void emit(const nlohmann::json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw graph_error(graph_errc::malformed_input, "cannot open " + out_path);
  f << j.dump(2) << '\n';
}

nlohmann::json report_json(const verify_report& rep) {
  nlohmann::json checks = nlohmann::json::array();
  for (const check_result& c : rep.checks)
    checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return {{"ok", rep.ok}, {"checks", checks}};
}

edge_set parse_edge_array(const nlohmann::json& arr) {
  edge_set es;
  for (const auto& e : arr) es.insert(edge(e.at(0).get<int>(), e.at(1).get<int>()));
  return es;
}

decomposition parse_decomposition(const nlohmann::json& j) {
  decomposition d;
  d.tree = parse_edge_array(j.at("tree"));
  d.matching = parse_edge_array(j.at("matching"));
  for (const auto& c : j.at("cycles")) d.cycles.push_back(parse_edge_array(c));
  return d;
}

std::vector<cubic_graph> read_graph6_lines(std::istream& is) {
  std::vector<cubic_graph> graphs;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    graphs.push_back(parse_graph6(line));
  }
  return graphs;
}

int run_decompose(const input_opts& in, const decompose_options& opts, bool with_verify,
                  bool with_oracle, std::uint64_t oracle_budget, const std::string& out_path) {
  cubic_graph g = load_graph(in);
  decompose_output out = decompose(g, opts);
  nlohmann::json j = decompose_report(g, out);
  int rc = exit_clean;
  switch (out.status) {
    case decompose_status::ok:
      rc = out.trace.proof_gaps > 0 ? exit_negative : exit_clean;
      break;
    case decompose_status::not_traceable:
    case decompose_status::oracle_exhausted:
      rc = exit_negative;
      break;
    case decompose_status::case2_refused:
      rc = exit_refused;
      break;
  }
  if (with_verify && out.status == decompose_status::ok) {
    verify_report rep = verify_decomposition(g, out.dec);
    bool few_cycles = out.dec.cycles.size() <= 2;
    nlohmann::json v = report_json(rep);
    v["cycle_count"] = out.dec.cycles.size();
    v["cycles_at_most_two"] = few_cycles;
    j["verification"] = v;
    if (!rep.ok || !few_cycles) rc = exit_negative;
  }
  if (with_oracle) {
    oracle_result br = brute_force_decompose(g, oracle_budget);
    j["oracle"] = {{"found", br.found}, {"exhausted", br.exhausted}, {"trees", br.trees}};
  }
  emit(j, out_path);
  return rc;
}

int run_verify(const input_opts& in, const std::string& dec_path, const std::string& out_path) {
  cubic_graph g = load_graph(in);
  std::ifstream f(dec_path);
  if (!f) throw graph_error(graph_errc::malformed_input, "cannot open " + dec_path);
  nlohmann::json parsed = nlohmann::json::parse(f);
  decomposition d = parse_decomposition(parsed);
  verify_report rep = verify_decomposition(g, d);
  bool few_cycles = d.cycles.size() <= 2;
  nlohmann::json j = report_json(rep);
  j["cycle_count"] = d.cycles.size();
  j["cycles_at_most_two"] = few_cycles;
  j["ok"] = rep.ok && few_cycles;
  emit(j, out_path);
  return (rep.ok && few_cycles) ? exit_clean : exit_negative;
}

int run_oracle(const input_opts& in, std::uint64_t budget, const std::string& out_path) {
  cubic_graph g = load_graph(in);
  oracle_result res = brute_force_decompose(g, budget);
  nlohmann::json j = {{"found", res.found}, {"exhausted", res.exhausted}, {"trees", res.trees}};
  if (res.found) j["decomposition"] = to_json(res.dec);
  emit(j, out_path);
  if (res.found) return exit_clean;
  return res.exhausted ? exit_negative : exit_refused;
}

int run_batch_cmd(const std::vector<cubic_graph>& graphs, const batch_options& opts,
                  const std::string& out_path) {
  batch_result res = run_batch(graphs, opts);
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw graph_error(graph_errc::malformed_input, "cannot open " + out_path);
    f << to_jsonl(res.records);
  }
  std::cout << res.summary.to_json().dump(2) << '\n';
  return res.summary.failures == 0 ? exit_clean : exit_negative;
}

int run_gen(const std::vector<cubic_graph>& graphs, const std::string& out_path) {
  std::ostringstream ss;
  for (const cubic_graph& g : graphs) ss << write_graph6(g) << '\n';
  if (out_path.empty()) {
    std::cout << ss.str();
  } else {
    std::ofstream f(out_path);
    if (!f) throw graph_error(graph_errc::malformed_input, "cannot open " + out_path);
    f << ss.str();
  }
  return exit_clean;
}

int run_paths(const input_opts& in, int limit, bool count_only) {
  cubic_graph g = load_graph(in);
  std::uint64_t count = 0;
  enumerate_ham_paths(g, [&](const ham_path& p) {
    ++count;
    if (!count_only) {
      const std::vector<int>& ord = p.order();
      for (std::size_t k = 0; k < ord.size(); ++k)
        std::cout << (k ? " " : "") << ord[k];
      std::cout << '\n';
    }
    return limit <= 0 || count < static_cast<std::uint64_t>(limit);
  });
  if (count_only) std::cout << count << '\n';
  return count > 0 ? exit_clean : exit_negative;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"spanning tree + matching + at most two cycles, for traceable cubic graphs"};
  app.require_subcommand(1);

  // decompose
  auto* dec_cmd = app.add_subcommand("decompose", "decompose one graph and print the result");
  input_opts dec_in;
  add_input(dec_cmd, dec_in);
  decompose_options dec_opts;
  bool dec_verify = false, dec_oracle = false;
  std::uint64_t dec_budget = 0;
  std::string dec_out;
  dec_cmd->add_flag("--force", dec_opts.force, "run the full disjoint-case scan at any order");
  dec_cmd->add_option("--max-n-case2", dec_opts.case2_bound,
                      "largest order given the unbounded disjoint-case scan")
      ->capture_default_str();
  dec_cmd->add_option("--cap", dec_opts.scan_cap, "path-scan cap above that order")
      ->capture_default_str();
  dec_cmd->add_flag("--verify", dec_verify, "re-check the output decomposition");
  dec_cmd->add_flag("--oracle", dec_oracle, "also run the brute-force search");
  dec_cmd->add_option("--budget", dec_budget, "brute-force node budget, 0 = unlimited");
  dec_cmd->add_option("--out", dec_out, "write JSON here instead of stdout");

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "check a decomposition against its graph");
  input_opts ver_in;
  add_input(ver_cmd, ver_in);
  std::string ver_dec, ver_out;
  ver_cmd->add_option("--decomposition", ver_dec, "JSON file with tree/matching/cycles")
      ->required();
  ver_cmd->add_option("--out", ver_out, "write JSON here instead of stdout");

  // oracle
  auto* ora_cmd = app.add_subcommand("oracle", "brute-force decomposition existence check");
  input_opts ora_in;
  add_input(ora_cmd, ora_in);
  std::uint64_t ora_budget = 0;
  std::string ora_out;
  ora_cmd->add_option("--budget", ora_budget, "search node budget, 0 = unlimited");
  ora_cmd->add_option("--out", ora_out, "write JSON here instead of stdout");

  // batch
  auto* bat_cmd = app.add_subcommand("batch", "decompose a corpus and summarize");
  int bat_census = 0, bat_random = 0, bat_count = 100;
  std::uint64_t bat_seed = 1;
  std::string bat_file, bat_out;
  bool bat_stdin = false;
  auto* bat_src = bat_cmd->add_option_group("source", "corpus source (pick one)");
  bat_src->add_option("--census", bat_census, "every connected cubic graph of this order");
  bat_src->add_option("--random", bat_random, "random cubic graphs of this order");
  bat_src->add_option("--file", bat_file, "file of graph6 lines");
  bat_src->add_flag("--stdin", bat_stdin, "graph6 lines on standard input");
  bat_src->require_option(1);
  batch_options bat_opts;
  bat_cmd->add_option("--count", bat_count, "how many random graphs")->capture_default_str();
  bat_cmd->add_option("--seed", bat_seed, "random corpus seed")->capture_default_str();
  bat_cmd->add_option("--workers", bat_opts.workers, "parallel worker threads, 0 = serial");
  bat_cmd->add_flag("--oracle", bat_opts.check_oracle, "cross-check each verdict by brute force");
  bat_cmd->add_option("--budget", bat_opts.oracle_budget, "brute-force node budget per graph");
  bat_cmd->add_flag("--force", bat_opts.decompose.force,
                    "run the full disjoint-case scan at any order");
  bat_cmd->add_option("--max-n-case2", bat_opts.decompose.case2_bound,
                      "largest order given the unbounded disjoint-case scan")
      ->capture_default_str();
  bat_cmd->add_option("--cap", bat_opts.decompose.scan_cap, "path-scan cap above that order")
      ->capture_default_str();
  bat_cmd->add_option("--out", bat_out, "write one JSON record per graph here");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "emit a corpus as graph6 lines");
  int gen_exhaustive = 0, gen_random = 0, gen_count = 100;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto* gen_src = gen_cmd->add_option_group("source", "corpus kind (pick one)");
  gen_src->add_option("--exhaustive", gen_exhaustive, "every connected cubic graph of this order");
  gen_src->add_option("--random", gen_random, "random cubic graphs of this order");
  gen_src->require_option(1);
  gen_cmd->add_option("--count", gen_count, "how many random graphs")->capture_default_str();
  gen_cmd->add_option("--seed", gen_seed, "random corpus seed")->capture_default_str();
  gen_cmd->add_option("--out", gen_out, "write lines here instead of stdout");

  // paths
  auto* pat_cmd = app.add_subcommand("paths", "enumerate hamiltonian paths");
  input_opts pat_in;
  add_input(pat_cmd, pat_in);
  int pat_limit = 0;
  bool pat_count_only = false;
  pat_cmd->add_option("--limit", pat_limit, "stop after this many paths, 0 = all");
  pat_cmd->add_flag("--count-only", pat_count_only, "print only the total");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_refused;
  }

  try {
    if (*dec_cmd) {
      dec_opts.oracle_budget = dec_budget;
      return run_decompose(dec_in, dec_opts, dec_verify, dec_oracle, dec_budget, dec_out);
    }
    if (*ver_cmd) return run_verify(ver_in, ver_dec, ver_out);
    if (*ora_cmd) return run_oracle(ora_in, ora_budget, ora_out);
    if (*bat_cmd) {
      bat_opts.decompose.oracle_budget = bat_opts.oracle_budget;
      bat_opts.parallel = bat_opts.workers > 0;
      std::vector<cubic_graph> graphs;
      if (bat_census > 0) {
        graphs = generate_exhaustive(bat_census);
      } else if (bat_random > 0) {
        graphs = generate_random(bat_random, bat_count, bat_seed);
      } else if (!bat_file.empty()) {
        std::ifstream f(bat_file);
        if (!f) throw graph_error(graph_errc::malformed_input, "cannot open " + bat_file);
        graphs = read_graph6_lines(f);
      } else {
        graphs = read_graph6_lines(std::cin);
      }
      return run_batch_cmd(graphs, bat_opts, bat_out);
    }
    if (*gen_cmd) {
      std::vector<cubic_graph> graphs = gen_exhaustive > 0
                                            ? generate_exhaustive(gen_exhaustive)
                                            : generate_random(gen_random, gen_count, gen_seed);
      return run_gen(graphs, gen_out);
    }
    if (*pat_cmd) return run_paths(pat_in, pat_limit, pat_count_only);
  } catch (const graph_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return exit_refused;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_negative;
  }
  return exit_refused;
}
