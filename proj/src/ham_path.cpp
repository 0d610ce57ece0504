#include "cubicdec/ham_path.hpp"

#include <algorithm>

namespace cubicdec {

const char* to_string(path_kind k) {
  switch (k) {
    case path_kind::hamiltonian_endpoints: return "HamiltonianEndpoints";
    case path_kind::overlapping: return "Overlapping";
    case path_kind::disjoint: return "Disjoint";
  }
  return "UnknownPathKind";
}

ham_path::ham_path(const cubic_graph& g, std::vector<int> order) : order_(std::move(order)) {
  if (static_cast<int>(order_.size()) != g.order()) {
    throw std::invalid_argument("ham_path: order length != graph order");
  }
  pos_.assign(g.order(), -1);
  for (int k = 0; k < static_cast<int>(order_.size()); ++k) {
    int v = order_[k];
    if (!g.has_vertex(v) || pos_[v] != -1) {
      throw std::invalid_argument("ham_path: order is not a permutation of V");
    }
    pos_[v] = k;
  }
  for (int k = 0; k + 1 < static_cast<int>(order_.size()); ++k) {
    if (!g.adjacent(order_[k], order_[k + 1])) {
      throw std::invalid_argument("ham_path: consecutive vertices not adjacent");
    }
  }
}

ham_path ham_path::reversed(const cubic_graph& g) const {
  std::vector<int> rev(order_.rbegin(), order_.rend());
  return ham_path(g, std::move(rev));
}

path_class chord_indices(const cubic_graph& g, const ham_path& p) {
  int n = p.length();
  int v1 = p.v(1), vn = p.v(n);
  if (g.adjacent(v1, vn)) return {path_kind::hamiltonian_endpoints, std::nullopt};

  chord_indices_t c;
  {
    std::vector<int> at;
    for (int w : g.neighbors(v1)) {
      if (w != p.v(2)) at.push_back(p.pos(w));
    }
    std::sort(at.begin(), at.end());
    c.jp = at[0];
    c.j = at[1];
  }
  {
    std::vector<int> at;
    for (int w : g.neighbors(vn)) {
      if (w != p.v(n - 1)) at.push_back(p.pos(w));
    }
    std::sort(at.begin(), at.end());
    c.i = at[0];
    c.ip = at[1];
  }
  if (c.i == c.j) throw std::logic_error("chord_indices: i == j implies a degree-4 vertex");
  path_kind k = c.i < c.j ? path_kind::overlapping : path_kind::disjoint;
  return {k, c};
}

namespace {

struct enumerator {
  const cubic_graph& g;
  const std::function<bool(const ham_path&)>& visit;
  int n;
  std::vector<int> order;
  std::vector<uint8_t> used;
  std::vector<int> udeg;  // degree within the unvisited set
  std::vector<int> bfs_queue;
  std::vector<int> bfs_mark;
  int bfs_stamp = 0;
  bool stopped = false;

  enumerator(const cubic_graph& g_, const std::function<bool(const ham_path&)>& v)
      : g(g_), visit(v), n(g_.order()), used(n, 0), udeg(n, 3), bfs_mark(n, 0) {
    order.reserve(n);
    bfs_queue.reserve(n);
  }

  // remaining vertices must still admit a path: their induced subgraph has to
  // be connected with at most two degree<=1 vertices
  bool feasible() {
    int remaining = n - static_cast<int>(order.size());
    if (remaining < 2) return true;
    int low = 0, seed = -1;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      seed = v;
      if (udeg[v] <= 1) {
        if (++low > 2) return false;
      }
    }
    ++bfs_stamp;
    bfs_queue.clear();
    bfs_queue.push_back(seed);
    bfs_mark[seed] = bfs_stamp;
    int reached = 1;
    for (size_t head = 0; head < bfs_queue.size(); ++head) {
      for (int w : g.neighbors(bfs_queue[head])) {
        if (!used[w] && bfs_mark[w] != bfs_stamp) {
          bfs_mark[w] = bfs_stamp;
          ++reached;
          bfs_queue.push_back(w);
        }
      }
    }
    return reached == remaining;
  }

  void take(int v) {
    order.push_back(v);
    used[v] = 1;
    for (int w : g.neighbors(v)) --udeg[w];
  }

  void drop(int v) {
    for (int w : g.neighbors(v)) ++udeg[w];
    used[v] = 0;
    order.pop_back();
  }

  void extend() {
    if (stopped) return;
    if (static_cast<int>(order.size()) == n) {
      if (order.front() < order.back()) {
        if (!visit(ham_path(g, order))) stopped = true;
      }
      return;
    }
    if (!feasible()) return;
    for (int w : g.neighbors(order.back())) {
      if (used[w]) continue;
      take(w);
      extend();
      drop(w);
      if (stopped) return;
    }
  }

  bool run() {
    for (int s = 0; s < n && !stopped; ++s) {
      take(s);
      extend();
      drop(s);
    }
    return !stopped;
  }
};

}  // namespace

bool enumerate_ham_paths(const cubic_graph& g, const std::function<bool(const ham_path&)>& visit) {
  enumerator e(g, visit);
  return e.run();
}

std::vector<ham_path> all_ham_paths(const cubic_graph& g, std::optional<int> cap) {
  std::vector<ham_path> out;
  enumerate_ham_paths(g, [&](const ham_path& p) {
    out.push_back(p);
    return !cap || static_cast<int>(out.size()) < *cap;
  });
  return out;
}

const ham_path& select_max_gap_path(const cubic_graph& g, const std::vector<ham_path>& paths) {
  if (paths.empty()) throw case_violation("select_max_gap_path: empty path set");
  const ham_path* best = nullptr;
  int best_gap = -1;
  for (const ham_path& p : paths) {
    path_class pc = chord_indices(g, p);
    if (pc.kind != path_kind::disjoint) {
      throw case_violation(std::string("select_max_gap_path: path classifies ") +
                           to_string(pc.kind));
    }
    int gap = pc.chords->gap();
    if (gap > best_gap || (gap == best_gap && p.order() < best->order())) {
      best = &p;
      best_gap = gap;
    }
  }
  return *best;
}

}  // namespace cubicdec
