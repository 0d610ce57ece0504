#include "cubicdec/corpus.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <random>
#include <stdexcept>

namespace cubicdec {

namespace {

using adj_list = std::vector<std::vector<int>>;

adj_list adjacency(const cubic_graph& g) {
  adj_list adj(static_cast<size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    adj[static_cast<size_t>(v)].assign(nb.begin(), nb.end());
  }
  return adj;
}

// stable color refinement: repeatedly split classes by the multiset of
// neighbor colors until nothing changes
void refine(const adj_list& adj, std::vector<int>& colors) {
  const int n = static_cast<int>(adj.size());
  for (;;) {
    std::map<std::pair<int, std::array<int, 3>>, int> order;
    std::vector<std::pair<int, std::array<int, 3>>> sig(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::array<int, 3> around{};
      for (size_t k = 0; k < adj[static_cast<size_t>(v)].size(); ++k)
        around[k] = colors[static_cast<size_t>(adj[static_cast<size_t>(v)][k])];
      std::sort(around.begin(), around.end());
      sig[static_cast<size_t>(v)] = {colors[static_cast<size_t>(v)], around};
      order[sig[static_cast<size_t>(v)]] = 0;
    }
    int next = 0;
    for (auto& [key, id] : order) id = next++;
    bool changed = false;
    for (int v = 0; v < n; ++v) {
      int c = order[sig[static_cast<size_t>(v)]];
      if (c != colors[static_cast<size_t>(v)]) changed = true;
      colors[static_cast<size_t>(v)] = c;
    }
    if (!changed) return;
  }
}

// upper-triangle adjacency bits under the relabeling, packed into bytes;
// lexicographic order on this string matches graph6 order
std::string encode_with(const adj_list& adj, const std::vector<int>& labels) {
  const int n = static_cast<int>(adj.size());
  std::string bits(static_cast<size_t>(n * n), '0');
  for (int v = 0; v < n; ++v)
    for (int w : adj[static_cast<size_t>(v)]) {
      int a = labels[static_cast<size_t>(v)], b = labels[static_cast<size_t>(w)];
      bits[static_cast<size_t>(a * n + b)] = '1';
    }
  std::string enc;
  enc.reserve(static_cast<size_t>(n * (n - 1) / 2));
  for (int b = 1; b < n; ++b)
    for (int a = 0; a < b; ++a) enc.push_back(bits[static_cast<size_t>(a * n + b)]);
  return enc;
}

// individualization-refinement search for the lexicographically least
// encoding; exhaustive over the chosen cell, so it is exact
void canon_search(const adj_list& adj, std::vector<int> colors, std::string& best_enc,
                  std::vector<int>& best_labels) {
  refine(adj, colors);
  const int n = static_cast<int>(adj.size());
  int cell_color = -1;
  std::vector<int> cell;
  for (int c = 0; c < n; ++c) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (colors[static_cast<size_t>(v)] == c) members.push_back(v);
    if (members.size() > 1 && (cell.empty() || members.size() < cell.size())) {
      cell_color = c;
      cell = members;
    }
  }
  if (cell_color < 0) {
    std::string enc = encode_with(adj, colors);
    if (best_enc.empty() || enc < best_enc) {
      best_enc = enc;
      best_labels = colors;
    }
    return;
  }
  for (int v : cell) {
    std::vector<int> split = colors;
    for (int w = 0; w < n; ++w)
      if (split[static_cast<size_t>(w)] > cell_color) ++split[static_cast<size_t>(w)];
    split[static_cast<size_t>(v)] = cell_color + 1;
    canon_search(adj, std::move(split), best_enc, best_labels);
  }
}

std::string canonical_graph6_impl(const adj_list& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> colors(static_cast<size_t>(n), 0);
  std::string best_enc;
  std::vector<int> best_labels;
  canon_search(adj, std::move(colors), best_enc, best_labels);
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v)
    for (int w : adj[static_cast<size_t>(v)])
      if (v < w)
        edges.emplace_back(best_labels[static_cast<size_t>(v)], best_labels[static_cast<size_t>(w)]);
  return write_graph6(cubic_graph::from_edge_list(n, edges));
}

struct census_builder {
  int n;
  std::vector<std::vector<int>> adj;
  std::vector<int> deg;
  std::set<std::string> seen;
  std::vector<std::pair<std::string, cubic_graph>> out;

  explicit census_builder(int order)
      : n(order), adj(static_cast<size_t>(order)), deg(static_cast<size_t>(order), 0) {}

  bool adjacent(int u, int v) const {
    const auto& a = adj[static_cast<size_t>(u)];
    return std::find(a.begin(), a.end(), v) != a.end();
  }

  void link(int u, int v) {
    adj[static_cast<size_t>(u)].push_back(v);
    adj[static_cast<size_t>(v)].push_back(u);
    ++deg[static_cast<size_t>(u)];
    ++deg[static_cast<size_t>(v)];
  }

  void unlink(int u, int v) {
    adj[static_cast<size_t>(u)].pop_back();
    adj[static_cast<size_t>(v)].pop_back();
    --deg[static_cast<size_t>(u)];
    --deg[static_cast<size_t>(v)];
  }

  void emit() {
    std::string canon = canonical_graph6_impl(adj);
    if (seen.insert(canon).second) out.emplace_back(canon, parse_graph6(canon));
  }

  // saturate the first incomplete vertex; edges are added grouped by their
  // lower endpoint with ascending partners, so each labeled graph is built
  // exactly once
  void grow(int u, int min_v) {
    while (u < n && deg[static_cast<size_t>(u)] == 3) {
      ++u;
      min_v = u + 1;
      // a fresh vertex with no link back to the finished prefix can never
      // acquire one, and that labeling is never needed for completeness
      if (u < n && deg[static_cast<size_t>(u)] == 0) return;
    }
    if (u == n) {
      emit();
      return;
    }
    // fresh vertices must be discovered in index order (any connected graph
    // has a breadth-first labeling of this shape), so a partner is either an
    // already-touched vertex or the single lowest untouched one
    int fresh = -1;
    for (int v = u + 1; v < n; ++v)
      if (deg[static_cast<size_t>(v)] == 0) {
        fresh = v;
        break;
      }
    int needed = 3 - deg[static_cast<size_t>(u)];
    int avail = 0;
    for (int v = min_v; v < n; ++v)
      if (deg[static_cast<size_t>(v)] >= 1 && deg[static_cast<size_t>(v)] < 3 && !adjacent(u, v))
        ++avail;
    if (fresh >= min_v) avail += n - fresh; // linking one untouched vertex unlocks the next
    if (avail < needed) return;
    for (int v = min_v; v < n; ++v) {
      if (deg[static_cast<size_t>(v)] == 0 && v != fresh) continue;
      if (deg[static_cast<size_t>(v)] == 3 || adjacent(u, v)) continue;
      link(u, v);
      grow(u, v + 1);
      unlink(u, v);
    }
  }
};

uint64_t bounded(std::uint64_t raw, std::uint64_t bound) { return raw % bound; }

} // namespace

std::string canonical_graph6(const cubic_graph& g) {
  return canonical_graph6_impl(adjacency(g));
}

std::vector<cubic_graph> generate_exhaustive(int n) {
  if (n < 4 || n % 2 != 0) throw graph_error(graph_errc::malformed_input, "census needs even n >= 4");
  census_builder b(n);
  b.link(0, 1);
  b.link(0, 2);
  b.link(0, 3);
  b.grow(1, 2);
  std::sort(b.out.begin(), b.out.end(),
            [](const auto& a, const auto& c) { return a.first < c.first; });
  std::vector<cubic_graph> graphs;
  graphs.reserve(b.out.size());
  for (auto& [canon, g] : b.out) graphs.push_back(std::move(g));
  return graphs;
}

std::vector<cubic_graph> generate_random(int n, int count, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) throw graph_error(graph_errc::malformed_input, "sampling needs even n >= 4");
  std::mt19937_64 rng(seed);
  std::vector<cubic_graph> graphs;
  graphs.reserve(static_cast<size_t>(count));
  const int restarts = 10000;
  for (int made = 0; made < count; ++made) {
    bool ok = false;
    for (int attempt = 0; attempt < restarts && !ok; ++attempt) {
      std::vector<int> stubs;
      stubs.reserve(static_cast<size_t>(3 * n));
      for (int v = 0; v < n; ++v)
        for (int k = 0; k < 3; ++k) stubs.push_back(v);
      // explicit Fisher-Yates so the sequence is identical on every platform
      for (size_t i = stubs.size() - 1; i > 0; --i) {
        size_t j = static_cast<size_t>(bounded(rng(), static_cast<std::uint64_t>(i + 1)));
        std::swap(stubs[i], stubs[j]);
      }
      std::set<std::pair<int, int>> picked;
      bool simple = true;
      for (size_t k = 0; k + 1 < stubs.size() && simple; k += 2) {
        int u = stubs[k], v = stubs[k + 1];
        if (u == v) simple = false;
        else if (!picked.emplace(std::min(u, v), std::max(u, v)).second) simple = false;
      }
      if (!simple || static_cast<int>(picked.size()) != 3 * n / 2) continue;
      std::vector<std::pair<int, int>> edges(picked.begin(), picked.end());
      // reject disconnected pairings before the constructor (which insists)
      std::vector<std::vector<int>> adj(static_cast<size_t>(n));
      for (auto [u, v] : edges) {
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
      }
      std::vector<char> hit(static_cast<size_t>(n), 0);
      std::vector<int> stack{0};
      hit[0] = 1;
      int reached = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<size_t>(v)])
          if (!hit[static_cast<size_t>(w)]) {
            hit[static_cast<size_t>(w)] = 1;
            ++reached;
            stack.push_back(w);
          }
      }
      if (reached != n) continue;
      graphs.push_back(cubic_graph::from_edge_list(n, edges));
      ok = true;
    }
    if (!ok) throw graph_error(graph_errc::rejection_budget_exhausted, "configuration model failed to produce a connected cubic graph");
  }
  return graphs;
}

} // namespace cubicdec
