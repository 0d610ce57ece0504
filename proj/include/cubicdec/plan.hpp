#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cubicdec/graph.hpp"

namespace cubicdec {

// vertex partition of a cubic graph into a tree part (with an explicit tree
// on it) and chordless cycles, as consumed by apply_plan
struct partition_plan {
  std::vector<int> tree_vertices;
  edge_set tree_edges;                   // a spanning tree of the tree part
  std::vector<std::vector<int>> cycles;  // each in cyclic order
};

// edge partition into a spanning tree, a matching and cycles
struct decomposition {
  edge_set tree;
  edge_set matching;
  std::vector<edge_set> cycles;
};

struct check_result {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct verify_report {
  std::vector<check_result> checks;
  bool ok = true;

  void add(const std::string& name, bool passed, const std::string& detail = "");
  const check_result* find(const std::string& name) const;
};

struct plan_invalid : std::runtime_error {
  std::string check;
  plan_invalid(const std::string& check_name, const std::string& detail);
};

// checks the preconditions the tree/cycle vertex partition must satisfy:
//   vertex_partition, tree_edges_within, tree_spanning, cycle_shape,
//   cycles_chordless, no_cycle_cycle_edges, pendant_adjacency
verify_report verify_plan(const cubic_graph& g, const partition_plan& plan);

// turns a valid plan into the edge decomposition: the tree absorbs every
// cycle-to-tree edge, the remaining non-cycle edges form the matching;
// throws plan_invalid if the plan fails verify_plan
decomposition apply_plan(const cubic_graph& g, const partition_plan& plan);

// construction-independent validity of an edge partition:
//   edge_partition, spanning_tree, matching, cycles_valid
// (the cycle-count bound is a caller-side concern)
verify_report verify_decomposition(const cubic_graph& g, const decomposition& dec);

}  // namespace cubicdec
