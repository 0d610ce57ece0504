#pragma once

#include <cstdint>
#include <functional>

#include "cubicdec/graph.hpp"
#include "cubicdec/plan.hpp"

namespace cubicdec {

struct oracle_result {
  bool found = false;
  bool exhausted = true;    // false when the node budget ran out first
  std::uint64_t trees = 0;  // spanning trees examined
  decomposition dec;        // meaningful only when found
};

// searches the spanning-tree space (contraction/deletion, include-first) for
// a tree whose residue splits into a matching and cycles; budget caps search
// nodes, 0 means unlimited
oracle_result brute_force_decompose(const cubic_graph& g, std::uint64_t budget = 0);

// visits every spanning tree exactly once with no residue-based pruning;
// stops early when visit returns false; returns the number visited
std::uint64_t enumerate_spanning_trees(const cubic_graph& g,
                                       const std::function<bool(const edge_set&)>& visit);

std::uint64_t count_spanning_trees(const cubic_graph& g);

}  // namespace cubicdec
