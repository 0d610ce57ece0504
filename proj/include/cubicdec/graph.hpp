#pragma once

// Core cubic-graph types: canonical edges, sorted edge sets, an immutable
// validated cubic graph, plus graph6 and plain edge-list serialization.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cubicdec {

enum class graph_errc {
  not_cubic,
  not_simple,
  not_connected,
  bad_vertex_id,
  malformed_graph6,
  malformed_input,
  order_too_large,
  rejection_budget_exhausted,
};

const char* to_string(graph_errc k);

struct graph_error : std::runtime_error {
  graph_errc kind;
  graph_error(graph_errc k, const std::string& msg)
      : std::runtime_error(std::string(to_string(k)) + ": " + msg), kind(k) {}
};

struct edge {
  int u = 0, v = 0;  // canonical: u < v
  edge() = default;
  edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  bool operator==(const edge&) const = default;
  auto operator<=>(const edge&) const = default;
  int other(int w) const { return w == u ? v : u; }
  bool touches(int w) const { return u == w || v == w; }
};

// sorted duplicate-free edge collection with set algebra
class edge_set {
 public:
  edge_set() = default;
  explicit edge_set(std::vector<edge> es);
  void insert(edge e);
  bool contains(edge e) const;
  int size() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return edges_.empty(); }
  const std::vector<edge>& edges() const { return edges_; }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }
  bool operator==(const edge_set&) const = default;

  friend edge_set set_union(const edge_set& a, const edge_set& b);
  friend edge_set set_difference(const edge_set& a, const edge_set& b);
  friend edge_set set_intersection(const edge_set& a, const edge_set& b);

 private:
  std::vector<edge> edges_;
};

// immutable simple connected 3-regular graph on dense labels 0..n-1
class cubic_graph {
 public:
  static cubic_graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<edge>& edges() const { return edges_; }
  const std::array<int, 3>& neighbors(int v) const { return adj_[v]; }  // ascending
  bool has_vertex(int v) const { return 0 <= v && v < n_; }
  bool adjacent(int u, int v) const { return adjmat_[static_cast<size_t>(u) * n_ + v] != 0; }
  // the neighbor of v distinct from both a and b (v must have one)
  int third_neighbor(int v, int a, int b) const;
  edge_set induced_edge_set(const std::vector<int>& s) const;
  edge_set all_edges() const { return edge_set(edges_); }

 private:
  cubic_graph() = default;
  int n_ = 0;
  std::vector<std::array<int, 3>> adj_;
  std::vector<edge> edges_;
  std::vector<uint8_t> adjmat_;
};

// one graph6 record; tolerates a ">>graph6<<" prefix and trailing whitespace
cubic_graph parse_graph6(const std::string& line);
std::string write_graph6(const cubic_graph& g);

// plain text: first line "n m", then m lines "u v" (0-based)
cubic_graph parse_edge_list_text(const std::string& text);
std::string write_edge_list_text(const cubic_graph& g);

}  // namespace cubicdec
