#pragma once

// Hamiltonian path enumeration and the chord-index classification the case
// split runs on. Positions are 1-based to match the v_1..v_n convention used
// throughout the construction; vertex ids stay 0-based.

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cubicdec/graph.hpp"

namespace cubicdec {

struct case_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ham_path {
 public:
  ham_path(const cubic_graph& g, std::vector<int> order);

  int length() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }
  // vertex at 1-based position k (the construction's v_k)
  int v(int k) const { return order_[k - 1]; }
  // 1-based position of a vertex
  int pos(int vertex) const { return pos_[vertex] + 1; }
  ham_path reversed(const cubic_graph& g) const;
  bool operator==(const ham_path& o) const { return order_ == o.order_; }

 private:
  std::vector<int> order_;
  std::vector<int> pos_;
};

enum class path_kind { hamiltonian_endpoints, overlapping, disjoint };

const char* to_string(path_kind k);

// 1-based positions: v_1's off-path neighbors sit at jp < j, v_n's at i < ip
struct chord_indices_t {
  int jp = 0, j = 0, i = 0, ip = 0;
  int gap() const { return ip - jp; }
  bool operator==(const chord_indices_t&) const = default;
};

struct path_class {
  path_kind kind;
  std::optional<chord_indices_t> chords;  // absent iff endpoints adjacent
};

path_class chord_indices(const cubic_graph& g, const ham_path& p);

// exhaustive backtracking enumeration, one canonical orientation per
// undirected path (first endpoint < last endpoint), deterministic order;
// returns false if the visitor stopped the stream early
bool enumerate_ham_paths(const cubic_graph& g, const std::function<bool(const ham_path&)>& visit);

std::vector<ham_path> all_ham_paths(const cubic_graph& g, std::optional<int> cap = std::nullopt);

// argmax of ip - jp over paths that all classify Disjoint; ties broken by
// lexicographically smallest vertex order
const ham_path& select_max_gap_path(const cubic_graph& g, const std::vector<ham_path>& paths);

}  // namespace cubicdec
