#include "cubicdec/graph.hpp"

#include <algorithm>
#include <sstream>

namespace cubicdec {

const char* to_string(graph_errc k) {
  switch (k) {
    case graph_errc::not_cubic: return "NotCubic";
    case graph_errc::not_simple: return "NotSimple";
    case graph_errc::not_connected: return "NotConnected";
    case graph_errc::bad_vertex_id: return "BadVertexId";
    case graph_errc::malformed_graph6: return "MalformedGraph6";
    case graph_errc::malformed_input: return "MalformedInput";
    case graph_errc::order_too_large: return "OrderTooLarge";
    case graph_errc::rejection_budget_exhausted: return "RejectionBudgetExhausted";
  }
  return "UnknownGraphError";
}

edge_set::edge_set(std::vector<edge> es) : edges_(std::move(es)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

void edge_set::insert(edge e) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

bool edge_set::contains(edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

edge_set set_union(const edge_set& a, const edge_set& b) {
  edge_set r;
  std::set_union(a.edges_.begin(), a.edges_.end(), b.edges_.begin(), b.edges_.end(),
                 std::back_inserter(r.edges_));
  return r;
}

edge_set set_difference(const edge_set& a, const edge_set& b) {
  edge_set r;
  std::set_difference(a.edges_.begin(), a.edges_.end(), b.edges_.begin(), b.edges_.end(),
                      std::back_inserter(r.edges_));
  return r;
}

edge_set set_intersection(const edge_set& a, const edge_set& b) {
  edge_set r;
  std::set_intersection(a.edges_.begin(), a.edges_.end(), b.edges_.begin(), b.edges_.end(),
                        std::back_inserter(r.edges_));
  return r;
}

cubic_graph cubic_graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
  // deterministic first-violation reporting: vertex ids, loops, duplicates,
  // then order/degrees, then connectivity
  for (size_t k = 0; k < pairs.size(); ++k) {
    for (int w : {pairs[k].first, pairs[k].second}) {
      if (w < 0 || w >= n) {
        throw graph_error(graph_errc::bad_vertex_id,
                          "edge " + std::to_string(k) + " references vertex " + std::to_string(w) +
                              " outside [0," + std::to_string(n) + ")");
      }
    }
  }
  for (size_t k = 0; k < pairs.size(); ++k) {
    if (pairs[k].first == pairs[k].second) {
      throw graph_error(graph_errc::not_simple,
                        "loop at vertex " + std::to_string(pairs[k].first) + " (edge " +
                            std::to_string(k) + ")");
    }
  }
  std::vector<uint8_t> seen(static_cast<size_t>(n) * n, 0);
  for (size_t k = 0; k < pairs.size(); ++k) {
    edge e(pairs[k].first, pairs[k].second);
    uint8_t& cell = seen[static_cast<size_t>(e.u) * n + e.v];
    if (cell) {
      throw graph_error(graph_errc::not_simple,
                        "duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") (edge " + std::to_string(k) + ")");
    }
    cell = 1;
  }
  if (n < 4) {
    throw graph_error(graph_errc::not_cubic, "order must be >= 4, got " + std::to_string(n));
  }

  std::vector<std::vector<int>> nbr(n);
  for (const auto& [a, b] : pairs) {
    nbr[a].push_back(b);
    nbr[b].push_back(a);
  }
  for (int v = 0; v < n; ++v) {
    if (nbr[v].size() != 3) {
      throw graph_error(graph_errc::not_cubic, "vertex " + std::to_string(v) + " has degree " +
                                                   std::to_string(nbr[v].size()));
    }
  }

  std::vector<uint8_t> reached(n, 0);
  std::vector<int> stack{0};
  reached[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : nbr[v]) {
      if (!reached[w]) {
        reached[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  if (count != n) {
    int missing = 0;
    while (reached[missing]) ++missing;
    throw graph_error(graph_errc::not_connected,
                      "vertex " + std::to_string(missing) + " unreachable from vertex 0");
  }

  cubic_graph g;
  g.n_ = n;
  g.adj_.resize(n);
  for (int v = 0; v < n; ++v) {
    std::sort(nbr[v].begin(), nbr[v].end());
    g.adj_[v] = {nbr[v][0], nbr[v][1], nbr[v][2]};
  }
  for (const auto& [a, b] : pairs) g.edges_.emplace_back(a, b);
  std::sort(g.edges_.begin(), g.edges_.end());
  g.adjmat_.assign(static_cast<size_t>(n) * n, 0);
  for (const edge& e : g.edges_) {
    g.adjmat_[static_cast<size_t>(e.u) * n + e.v] = 1;
    g.adjmat_[static_cast<size_t>(e.v) * n + e.u] = 1;
  }
  return g;
}

int cubic_graph::third_neighbor(int v, int a, int b) const {
  for (int w : adj_[v]) {
    if (w != a && w != b) return w;
  }
  throw std::logic_error("third_neighbor: no neighbor of " + std::to_string(v) +
                         " distinct from " + std::to_string(a) + " and " + std::to_string(b));
}

edge_set cubic_graph::induced_edge_set(const std::vector<int>& s) const {
  std::vector<uint8_t> in(n_, 0);
  for (int v : s) {
    if (!has_vertex(v)) {
      throw graph_error(graph_errc::bad_vertex_id,
                        "induced set references vertex " + std::to_string(v));
    }
    in[v] = 1;
  }
  std::vector<edge> out;
  for (const edge& e : edges_) {
    if (in[e.u] && in[e.v]) out.push_back(e);
  }
  return edge_set(std::move(out));
}

namespace {

std::string strip_record(const std::string& line) {
  std::string s = line;
  const std::string prefix = ">>graph6<<";
  if (s.rfind(prefix, 0) == 0) s = s.substr(prefix.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.pop_back();
  return s;
}

}  // namespace

cubic_graph parse_graph6(const std::string& line) {
  std::string s = strip_record(line);
  if (s.empty()) throw graph_error(graph_errc::malformed_graph6, "empty record");
  unsigned char header = static_cast<unsigned char>(s[0]);
  if (header == 126) {
    throw graph_error(graph_errc::order_too_large, "multi-byte graph6 order header (n > 62)");
  }
  if (header < 63 || header > 125) {
    throw graph_error(graph_errc::malformed_graph6,
                      "order byte " + std::to_string(header) + " outside [63,125]");
  }
  int n = header - 63;
  long long nbits = static_cast<long long>(n) * (n - 1) / 2;
  size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
  if (s.size() - 1 != nbytes) {
    throw graph_error(graph_errc::malformed_graph6,
                      "expected " + std::to_string(nbytes) + " payload bytes for n=" +
                          std::to_string(n) + ", got " + std::to_string(s.size() - 1));
  }
  std::vector<int> bits;
  bits.reserve(nbytes * 6);
  for (size_t k = 1; k < s.size(); ++k) {
    unsigned char c = static_cast<unsigned char>(s[k]);
    if (c < 63 || c > 126) {
      throw graph_error(graph_errc::malformed_graph6,
                        "payload byte " + std::to_string(c) + " outside [63,126]");
    }
    int x = c - 63;
    for (int b = 5; b >= 0; --b) bits.push_back((x >> b) & 1);
  }
  for (size_t k = static_cast<size_t>(nbits); k < bits.size(); ++k) {
    if (bits[k]) throw graph_error(graph_errc::malformed_graph6, "nonzero padding bits");
  }
  std::vector<std::pair<int, int>> pairs;
  size_t idx = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++idx) {
      if (bits[idx]) pairs.emplace_back(u, v);
    }
  }
  return cubic_graph::from_edge_list(n, pairs);
}

std::string write_graph6(const cubic_graph& g) {
  int n = g.order();
  if (n > 62) {
    throw graph_error(graph_errc::order_too_large,
                      "graph6 single-byte header limited to n <= 62, got " + std::to_string(n));
  }
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  std::vector<int> bits;
  bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) bits.push_back(g.adjacent(u, v) ? 1 : 0);
  }
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (size_t k = 0; k < bits.size(); k += 6) {
    int x = 0;
    for (int b = 0; b < 6; ++b) x = (x << 1) | bits[k + b];
    out.push_back(static_cast<char>(63 + x));
  }
  return out;
}

cubic_graph parse_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  long long n = 0, m = 0;
  if (!(in >> n >> m)) {
    throw graph_error(graph_errc::malformed_input, "expected header line \"n m\"");
  }
  if (n < 0 || m < 0 || m > 3LL * n) {
    throw graph_error(graph_errc::malformed_input,
                      "implausible header n=" + std::to_string(n) + " m=" + std::to_string(m));
  }
  std::vector<std::pair<int, int>> pairs;
  for (long long k = 0; k < m; ++k) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) {
      throw graph_error(graph_errc::malformed_input,
                        "expected " + std::to_string(m) + " edge lines, got " + std::to_string(k));
    }
    pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string extra;
  if (in >> extra) {
    throw graph_error(graph_errc::malformed_input, "trailing token \"" + extra + "\"");
  }
  return cubic_graph::from_edge_list(static_cast<int>(n), pairs);
}

std::string write_edge_list_text(const cubic_graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace cubicdec
