#include "cubicdec/cycle_tools.hpp"

#include <algorithm>

namespace cubicdec {

namespace {

void require_segment(const cubic_graph& g, const std::vector<int>& segment) {
  if (segment.empty()) throw std::invalid_argument("segment must be non-empty");
  std::vector<char> seen(g.order(), 0);
  for (int v : segment) {
    if (!g.has_vertex(v)) throw std::invalid_argument("segment vertex out of range");
    if (seen[v]) throw std::invalid_argument("segment vertices must be distinct");
    seen[v] = 1;
  }
  for (std::size_t k = 0; k + 1 < segment.size(); ++k)
    if (!g.adjacent(segment[k], segment[k + 1]))
      throw std::invalid_argument("segment vertices must be consecutively adjacent");
}

}  // namespace

std::vector<formed_cycle> cycles_formed_by(const cubic_graph& g, const std::vector<int>& segment) {
  require_segment(g, segment);
  int l = static_cast<int>(segment.size());
  std::vector<formed_cycle> out;
  for (int lo = 0; lo + 2 < l; ++lo) {
    for (int hi = lo + 2; hi < l; ++hi) {
      if (!g.adjacent(segment[lo], segment[hi])) continue;
      formed_cycle c;
      c.lo = lo;
      c.hi = hi;
      c.vertices.assign(segment.begin() + lo, segment.begin() + hi + 1);
      c.closing = edge(segment[lo], segment[hi]);
      c.chordless = true;
      for (int x = lo; x < hi && c.chordless; ++x) {
        for (int y = x + 2; y <= hi; ++y) {
          if (x == lo && y == hi) continue;
          if (g.adjacent(segment[x], segment[y])) {
            c.chordless = false;
            break;
          }
        }
      }
      out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(), [](const formed_cycle& a, const formed_cycle& b) {
    if (a.hi - a.lo != b.hi - b.lo) return a.hi - a.lo < b.hi - b.lo;
    return a.lo < b.lo;
  });
  return out;
}

std::optional<formed_cycle> chordless_cycle_formed_by(const cubic_graph& g,
                                                      const std::vector<int>& segment) {
  std::vector<formed_cycle> all = cycles_formed_by(g, segment);
  if (all.empty()) return std::nullopt;
  // a chord of the shortest formed cycle would close a strictly shorter one
  if (!all.front().chordless)
    throw std::logic_error("shortest formed cycle has a chord");
  return all.front();
}

edge_set path_edge_set(const std::vector<int>& path_vertices) {
  edge_set es;
  for (std::size_t k = 0; k + 1 < path_vertices.size(); ++k)
    es.insert(edge(path_vertices[k], path_vertices[k + 1]));
  return es;
}

edge_set cycle_edge_set(const std::vector<int>& cycle_vertices) {
  if (cycle_vertices.size() < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  edge_set es = path_edge_set(cycle_vertices);
  es.insert(edge(cycle_vertices.front(), cycle_vertices.back()));
  return es;
}

bool isolated_from(const cubic_graph& g, const std::vector<int>& vertices,
                   const std::vector<int>& allowed) {
  std::vector<char> ok(g.order(), 0);
  for (int v : allowed) ok.at(v) = 1;
  for (int v : vertices)
    for (int w : g.neighbors(v))
      if (!ok[w]) return false;
  return true;
}

std::vector<int> monotone_path_indices(const cubic_graph& g, const std::vector<int>& segment) {
  require_segment(g, segment);
  int last = static_cast<int>(segment.size()) - 1;
  std::vector<int> hops(last + 1, -1);  // forward hop count from index x to last
  hops[last] = 0;
  for (int x = last - 1; x >= 0; --x) {
    for (int y = x + 1; y <= last; ++y) {
      if (hops[y] < 0 || !g.adjacent(segment[x], segment[y])) continue;
      if (hops[x] < 0 || hops[y] + 1 < hops[x]) hops[x] = hops[y] + 1;
    }
  }
  if (hops[0] < 0) throw std::logic_error("segment endpoints are not monotonically connected");
  std::vector<int> seq{0};
  int cur = 0;
  while (cur != last) {
    int next = -1;
    for (int y = cur + 1; y <= last; ++y) {
      if (hops[y] == hops[cur] - 1 && g.adjacent(segment[cur], segment[y])) {
        next = y;
        break;
      }
    }
    if (next < 0) throw std::logic_error("monotone reconstruction stalled");
    seq.push_back(next);
    cur = next;
  }
  return seq;
}

missing_connector::missing_connector(std::vector<int> r)
    : std::runtime_error("no connector available for a leftover run"), run(std::move(r)) {}

std::vector<leftover_run> leftover_segments(const cubic_graph& g, const std::vector<int>& segment,
                                            const std::vector<int>& mono_indices,
                                            const std::vector<int>& forbidden) {
  require_segment(g, segment);
  int l = static_cast<int>(segment.size());
  std::vector<char> on_cycle(l, 0);
  for (int idx : mono_indices) {
    if (idx < 0 || idx >= l) throw std::invalid_argument("monotone index out of range");
    on_cycle[idx] = 1;
  }
  std::vector<char> banned(g.order(), 0);
  for (int v : forbidden) banned.at(v) = 1;
  for (int v : segment)
    if (!banned[v]) throw std::invalid_argument("forbidden set must cover the segment");

  std::vector<leftover_run> out;
  int x = 0;
  while (x < l) {
    if (on_cycle[x]) {
      ++x;
      continue;
    }
    leftover_run run;
    while (x < l && !on_cycle[x]) run.vertices.push_back(segment[x++]);
    bool found = false;
    for (int v : run.vertices) {
      for (int w : g.neighbors(v)) {
        if (banned[w]) continue;
        run.connector = edge(v, w);
        found = true;
        break;
      }
      if (found) break;
    }
    if (!found) throw missing_connector(run.vertices);
    out.push_back(std::move(run));
  }
  return out;
}

}  // namespace cubicdec
