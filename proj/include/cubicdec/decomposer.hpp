#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubicdec/graph.hpp"
#include "cubicdec/ham_path.hpp"
#include "cubicdec/plan.hpp"

namespace cubicdec {

// outcome of running one case construction on one Hamiltonian path
struct case_attempt {
  enum class outcome { plan_ready, ham_cycle, replacement_path, gap };

  outcome kind = outcome::gap;
  partition_plan plan;                           // plan_ready
  std::string branch;                            // constructive leaf tag
  std::vector<std::string> via;                  // annotations along the way
  std::map<std::string, std::string> witnesses;  // named selections (1-based positions)
  std::string gap_reason;                        // gap
  std::vector<int> cycle;                        // ham_cycle: vertices in cyclic order
  std::optional<ham_path> replacement;           // replacement_path
};

// overlapping chords: three internally disjoint paths between v_j and v_i
case_attempt case1(const cubic_graph& g, const ham_path& p);

// disjoint chords on a gap-maximal path; maximality_ok permits the argument
// that rewires the path when only a rotation witness is available
case_attempt case2(const cubic_graph& g, const ham_path& p, bool maximality_ok);

enum class decompose_status { ok, not_traceable, oracle_exhausted, case2_refused };
const char* to_string(decompose_status s);

struct trace_log {
  std::string branch;
  std::vector<std::string> via;
  std::map<std::string, std::string> witnesses;
  std::vector<int> path;  // Hamiltonian path behind the plan, when one exists
  std::vector<std::string> gap_details;
  int proof_gaps = 0;
};

struct decompose_options {
  int case2_bound = 24;          // largest order allowed to enumerate all paths
  bool force = false;            // enumerate regardless of the bound
  std::uint64_t oracle_budget = 0;
  std::uint64_t scan_cap = 10000;  // bounded scan size above the bound
};

struct decompose_output {
  decompose_status status = decompose_status::not_traceable;
  decomposition dec;  // meaningful when status == ok
  trace_log trace;
};

// full pipeline: enumerate Hamiltonian paths, route to the matching case,
// fall back for Hamiltonian graphs, rescue defensively via the oracle
decompose_output decompose(const cubic_graph& g, const decompose_options& opts = {});

// decomposition for a graph with a known Hamiltonian cycle; reentry signals
// that unexplored Hamiltonian paths may remain worth rotating through
decompose_output hamiltonian_fallback(const cubic_graph& g, const std::vector<int>& cycle,
                                      bool reentry, const decompose_options& opts = {});

}  // namespace cubicdec
