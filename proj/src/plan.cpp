#include "cubicdec/plan.hpp"

#include <algorithm>
#include <queue>

namespace cubicdec {

void verify_report::add(const std::string& name, bool passed, const std::string& detail) {
  checks.push_back({name, passed, passed ? std::string() : detail});
  ok = ok && passed;
}

const check_result* verify_report::find(const std::string& name) const {
  for (const check_result& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

plan_invalid::plan_invalid(const std::string& check_name, const std::string& detail)
    : std::runtime_error(check_name + ": " + detail), check(check_name) {}

namespace {

bool connected_on(const std::vector<int>& vertices, const edge_set& edges, int order) {
  if (vertices.empty()) return false;
  std::vector<std::vector<int>> adj(order);
  for (edge e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> seen(order, 0);
  std::queue<int> q;
  q.push(vertices.front());
  seen[vertices.front()] = 1;
  std::size_t reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      ++reached;
      q.push(w);
    }
  }
  for (int v : vertices)
    if (!seen[v]) return false;
  return reached == vertices.size();
}

}  // namespace

verify_report verify_plan(const cubic_graph& g, const partition_plan& plan) {
  verify_report rep;
  int n = g.order();

  for (int v : plan.tree_vertices) {
    if (!g.has_vertex(v)) {
      rep.add("vertex_partition", false, "tree vertex " + std::to_string(v) + " out of range");
      return rep;
    }
  }
  for (const std::vector<int>& c : plan.cycles) {
    for (int v : c) {
      if (!g.has_vertex(v)) {
        rep.add("vertex_partition", false, "cycle vertex " + std::to_string(v) + " out of range");
        return rep;
      }
    }
  }

  std::vector<int> part(n, -2);  // -2 unassigned, -1 tree, k >= 0 cycle index
  bool partition_ok = true;
  std::string partition_detail;
  for (int v : plan.tree_vertices) {
    if (part[v] != -2) {
      partition_ok = false;
      partition_detail = "vertex " + std::to_string(v) + " listed twice";
    }
    part[v] = -1;
  }
  for (std::size_t k = 0; k < plan.cycles.size(); ++k) {
    for (int v : plan.cycles[k]) {
      if (part[v] != -2 && partition_ok) {
        partition_ok = false;
        partition_detail = "vertex " + std::to_string(v) + " listed twice";
      }
      part[v] = static_cast<int>(k);
    }
  }
  for (int v = 0; v < n && partition_ok; ++v) {
    if (part[v] == -2) {
      partition_ok = false;
      partition_detail = "vertex " + std::to_string(v) + " unassigned";
    }
  }
  rep.add("vertex_partition", partition_ok, partition_detail);

  bool within_ok = true;
  std::string within_detail;
  for (edge e : plan.tree_edges) {
    if (part[e.u] != -1 || part[e.v] != -1) {
      within_ok = false;
      within_detail = "tree edge leaves the tree part";
      break;
    }
    if (!g.adjacent(e.u, e.v)) {
      within_ok = false;
      within_detail = "tree edge not present in the graph";
      break;
    }
  }
  rep.add("tree_edges_within", within_ok, within_detail);

  bool span_ok = !plan.tree_vertices.empty() &&
                 static_cast<std::size_t>(plan.tree_edges.size()) + 1 == plan.tree_vertices.size() && within_ok &&
                 connected_on(plan.tree_vertices, plan.tree_edges, n);
  rep.add("tree_spanning", span_ok,
          plan.tree_vertices.empty() ? "tree part is empty"
                                     : "tree edges do not form a tree on the tree part");

  bool shape_ok = true;
  std::string shape_detail;
  for (const std::vector<int>& c : plan.cycles) {
    if (c.size() < 3) {
      shape_ok = false;
      shape_detail = "cycle shorter than 3";
      break;
    }
    std::vector<int> sorted(c);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      shape_ok = false;
      shape_detail = "cycle repeats a vertex";
      break;
    }
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (!g.adjacent(c[k], c[(k + 1) % c.size()])) {
        shape_ok = false;
        shape_detail = "cyclic order is not a cycle of the graph";
        break;
      }
    }
    if (!shape_ok) break;
  }
  rep.add("cycle_shape", shape_ok, shape_detail);

  bool chordless_ok = true;
  for (const std::vector<int>& c : plan.cycles) {
    std::size_t len = c.size();
    for (std::size_t a = 0; a < len && chordless_ok; ++a) {
      for (std::size_t b = a + 1; b < len; ++b) {
        if (b == a + 1 || (a == 0 && b == len - 1)) continue;
        if (g.adjacent(c[a], c[b])) {
          chordless_ok = false;
          break;
        }
      }
    }
    if (!chordless_ok) break;
  }
  rep.add("cycles_chordless", chordless_ok, "a cycle of the partition has a chord");

  bool cross_ok = true;
  for (edge e : g.all_edges()) {
    if (part[e.u] >= 0 && part[e.v] >= 0 && part[e.u] != part[e.v]) {
      cross_ok = false;
      break;
    }
  }
  rep.add("no_cycle_cycle_edges", cross_ok, "edge joins two distinct cycles");

  std::vector<int> tree_degree(n, 0);
  for (edge e : plan.tree_edges) {
    ++tree_degree[e.u];
    ++tree_degree[e.v];
  }
  bool pendant_ok = true;
  std::string pendant_detail;
  for (int v : plan.tree_vertices) {
    if (tree_degree[v] > 1) continue;
    bool near_cycle = false;
    for (int w : g.neighbors(v)) near_cycle = near_cycle || part[w] >= 0;
    if (!near_cycle) {
      pendant_ok = false;
      pendant_detail = "pendant vertex " + std::to_string(v) + " touches no cycle";
      break;
    }
  }
  rep.add("pendant_adjacency", pendant_ok, pendant_detail);

  return rep;
}

decomposition apply_plan(const cubic_graph& g, const partition_plan& plan) {
  verify_report rep = verify_plan(g, plan);
  if (!rep.ok) {
    for (const check_result& c : rep.checks)
      if (!c.ok) throw plan_invalid(c.name, c.detail);
  }

  int n = g.order();
  std::vector<int> part(n, -1);
  for (std::size_t k = 0; k < plan.cycles.size(); ++k)
    for (int v : plan.cycles[k]) part[v] = static_cast<int>(k);

  decomposition dec;
  dec.tree = plan.tree_edges;
  for (const std::vector<int>& c : plan.cycles) {
    for (int v : c) {
      int links = 0;
      for (int w : g.neighbors(v)) {
        if (part[w] >= 0) continue;
        dec.tree.insert(edge(v, w));
        ++links;
      }
      if (links != 1) throw std::logic_error("cycle vertex without a unique tree link");
    }
  }

  edge_set cycle_edges;
  for (const std::vector<int>& c : plan.cycles) {
    edge_set es;
    for (std::size_t k = 0; k < c.size(); ++k) es.insert(edge(c[k], c[(k + 1) % c.size()]));
    dec.cycles.push_back(es);
    cycle_edges = set_union(cycle_edges, es);
  }

  dec.matching = set_difference(set_difference(g.all_edges(), dec.tree), cycle_edges);
  return dec;
}

verify_report verify_decomposition(const cubic_graph& g, const decomposition& dec) {
  verify_report rep;
  int n = g.order();

  std::vector<edge> listed;
  for (edge e : dec.tree) listed.push_back(e);
  for (edge e : dec.matching) listed.push_back(e);
  for (const edge_set& c : dec.cycles)
    for (edge e : c) listed.push_back(e);
  std::sort(listed.begin(), listed.end());
  bool partition_ok = std::adjacent_find(listed.begin(), listed.end()) == listed.end();
  if (partition_ok) {
    std::vector<edge> all;
    for (edge e : g.all_edges()) all.push_back(e);
    partition_ok = listed == all;
  }
  rep.add("edge_partition", partition_ok, "parts do not partition the edge set");

  std::vector<int> everyone(n);
  for (int v = 0; v < n; ++v) everyone[v] = v;
  bool tree_ok = dec.tree.size() + 1 == n &&
                 connected_on(everyone, dec.tree, n);
  rep.add("spanning_tree", tree_ok, "tree part is not a spanning tree");

  std::vector<int> mdeg(n, 0);
  bool matching_ok = true;
  for (edge e : dec.matching) {
    if (++mdeg[e.u] > 1 || ++mdeg[e.v] > 1) {
      matching_ok = false;
      break;
    }
  }
  rep.add("matching", matching_ok, "matching edges share a vertex");

  bool cycles_ok = true;
  for (const edge_set& c : dec.cycles) {
    std::vector<int> degree(n, 0), touched;
    for (edge e : c) {
      if (degree[e.u]++ == 0) touched.push_back(e.u);
      if (degree[e.v]++ == 0) touched.push_back(e.v);
    }
    for (int v : touched) cycles_ok = cycles_ok && degree[v] == 2;
    cycles_ok = cycles_ok && static_cast<std::size_t>(c.size()) == touched.size() && c.size() >= 3 &&
                connected_on(touched, c, n);
    if (!cycles_ok) break;
  }
  rep.add("cycles_valid", cycles_ok, "a listed cycle is not a single cycle");

  return rep;
}

}  // namespace cubicdec
