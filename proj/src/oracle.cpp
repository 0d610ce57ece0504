#include "cubicdec/oracle.hpp"

#include <queue>

namespace cubicdec {

namespace {

constexpr int kUndecided = 0;
constexpr int kIncluded = 1;
constexpr int kExcluded = 2;

struct tree_search {
  const cubic_graph& g;
  bool residue_prunes;
  std::uint64_t budget;
  const std::function<bool(const edge_set&)>* visit = nullptr;

  std::vector<edge> edges;
  int n, m;
  std::vector<int> state;                       // per edge
  std::vector<std::vector<int>> incident;       // vertex -> edge indices
  struct uf_op {
    int a, b;
    bool bumped;
  };
  std::vector<int> parent, rank_of;  // union-find, no compression
  std::vector<uf_op> uf_log;         // rollback journal
  std::vector<int> excl_deg, undecided_deg;
  int included = 0;
  std::uint64_t nodes = 0, trees = 0;
  bool out_of_budget = false, stopped = false;
  decomposition found_dec;
  bool found = false;

  explicit tree_search(const cubic_graph& graph, bool prunes, std::uint64_t node_budget)
      : g(graph), residue_prunes(prunes), budget(node_budget) {
    for (edge e : g.all_edges()) edges.push_back(e);
    n = g.order();
    m = static_cast<int>(edges.size());
    state.assign(m, kUndecided);
    incident.assign(n, {});
    for (int k = 0; k < m; ++k) {
      incident[edges[k].u].push_back(k);
      incident[edges[k].v].push_back(k);
    }
    parent.resize(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    rank_of.assign(n, 0);
    excl_deg.assign(n, 0);
    undecided_deg.assign(n, 3);
  }

  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_of[a] < rank_of[b]) std::swap(a, b);
    bool bumped = rank_of[a] == rank_of[b];
    parent[b] = a;
    if (bumped) ++rank_of[a];
    uf_log.push_back({a, b, bumped});
    return true;
  }

  void undo_unite() {
    uf_op op = uf_log.back();
    uf_log.pop_back();
    parent[op.b] = op.b;
    if (op.bumped) --rank_of[op.a];
  }

  bool connected_skipping(int skip) const {
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int k : incident[v]) {
        if (k == skip || state[k] == kExcluded) continue;
        int w = edges[k].other(v);
        if (seen[w]) continue;
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
    }
    return reached == n;
  }

  // size in edges of the explicit residue component containing v
  int residue_component_edges(int v) const {
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(v);
    seen[v] = 1;
    int count = 0;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int k : incident[x]) {
        if (state[k] != kExcluded) continue;
        int w = edges[k].other(x);
        ++count;  // each edge seen once from each side
        if (seen[w]) continue;
        seen[w] = 1;
        q.push(w);
      }
    }
    return count / 2;
  }

  bool doomed_after_exclude(int k) const {
    for (int v : {edges[k].u, edges[k].v}) {
      if (excl_deg[v] == 1 && undecided_deg[v] == 0 && residue_component_edges(v) >= 2)
        return true;
    }
    return false;
  }

  void mark(int k, int st) {
    state[k] = st;
    --undecided_deg[edges[k].u];
    --undecided_deg[edges[k].v];
    if (st == kExcluded) {
      ++excl_deg[edges[k].u];
      ++excl_deg[edges[k].v];
    } else {
      ++included;
    }
  }

  void unmark(int k) {
    int st = state[k];
    state[k] = kUndecided;
    ++undecided_deg[edges[k].u];
    ++undecided_deg[edges[k].v];
    if (st == kExcluded) {
      --excl_deg[edges[k].u];
      --excl_deg[edges[k].v];
    } else {
      --included;
    }
  }

  edge_set included_edges() const {
    edge_set t;
    for (int k = 0; k < m; ++k)
      if (state[k] == kIncluded) t.insert(edges[k]);
    return t;
  }

  // residue of the finished tree: accept iff matching plus cycles
  bool harvest(const edge_set& tree) {
    std::vector<int> deg(n, 0);
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge idx)
    std::vector<edge> residue;
    for (int k = 0; k < m; ++k) {
      if (tree.contains(edges[k])) continue;
      residue.push_back(edges[k]);
      int idx = static_cast<int>(residue.size()) - 1;
      ++deg[edges[k].u];
      ++deg[edges[k].v];
      adj[edges[k].u].emplace_back(edges[k].v, idx);
      adj[edges[k].v].emplace_back(edges[k].u, idx);
    }
    decomposition dec;
    dec.tree = tree;
    std::vector<char> used(residue.size(), 0);
    for (int v = 0; v < n; ++v) {
      if (deg[v] == 0) continue;
      bool fresh = false;
      for (auto [w, idx] : adj[v]) fresh = fresh || !used[idx];
      if (!fresh) continue;
      // walk the component from v
      std::vector<char> seen(n, 0);
      std::queue<int> q;
      q.push(v);
      seen[v] = 1;
      edge_set comp;
      bool all_two = true;
      int comp_vertices = 0;
      while (!q.empty()) {
        int x = q.front();
        q.pop();
        ++comp_vertices;
        all_two = all_two && deg[x] == 2;
        for (auto [w, idx] : adj[x]) {
          used[idx] = 1;
          comp.insert(residue[idx]);
          if (!seen[w]) {
            seen[w] = 1;
            q.push(w);
          }
        }
      }
      if (comp.size() == 1) {
        dec.matching.insert(*comp.begin());
      } else if (all_two && comp.size() == static_cast<std::size_t>(comp_vertices)) {
        dec.cycles.push_back(comp);
      } else {
        return false;  // a path of two or more edges
      }
    }
    found = true;
    found_dec = std::move(dec);
    return true;
  }

  void leaf() {
    ++trees;
    edge_set tree = included_edges();
    if (visit != nullptr) {
      if (!(*visit)(tree)) stopped = true;
      return;
    }
    harvest(tree);
  }

  void rec(int k) {
    if (found || stopped || out_of_budget) return;
    if (budget != 0 && ++nodes > budget) {
      out_of_budget = true;
      return;
    }
    if (included == n - 1) {
      leaf();
      return;
    }
    if (k == m) return;
    edge e = edges[k];
    if (find(e.u) == find(e.v)) {
      // forced exclusion: the endpoints already meet through included edges
      mark(k, kExcluded);
      if (!(residue_prunes && doomed_after_exclude(k))) rec(k + 1);
      unmark(k);
      return;
    }
    unite(e.u, e.v);
    mark(k, kIncluded);
    rec(k + 1);
    unmark(k);
    undo_unite();
    if (found || stopped || out_of_budget) return;
    if (connected_skipping(k)) {
      mark(k, kExcluded);
      if (!(residue_prunes && doomed_after_exclude(k))) rec(k + 1);
      unmark(k);
    }
  }
};

}  // namespace

oracle_result brute_force_decompose(const cubic_graph& g, std::uint64_t budget) {
  tree_search s(g, true, budget);
  s.rec(0);
  oracle_result r;
  r.found = s.found;
  r.exhausted = !s.out_of_budget;
  r.trees = s.trees;
  if (s.found) r.dec = std::move(s.found_dec);
  return r;
}

std::uint64_t enumerate_spanning_trees(const cubic_graph& g,
                                       const std::function<bool(const edge_set&)>& visit) {
  tree_search s(g, false, 0);
  s.visit = &visit;
  s.rec(0);
  return s.trees;
}

std::uint64_t count_spanning_trees(const cubic_graph& g) {
  return enumerate_spanning_trees(g, [](const edge_set&) { return true; });
}

}  // namespace cubicdec
