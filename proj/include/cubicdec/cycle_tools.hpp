#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "cubicdec/graph.hpp"

namespace cubicdec {

// cycle whose edges all lie on a path segment except for a single closing edge
struct formed_cycle {
  int lo = 0;
  int hi = 0;                 // inclusive index range within the host segment
  std::vector<int> vertices;  // segment[lo..hi] in segment order
  edge closing;               // the unique non-segment edge
  bool chordless = false;

  formed_cycle() : closing(0, 1) {}
};

// all cycles formed by the segment, sorted by (length, lo)
std::vector<formed_cycle> cycles_formed_by(const cubic_graph& g, const std::vector<int>& segment);

// shortest formed cycle; guaranteed chordless when present
std::optional<formed_cycle> chordless_cycle_formed_by(const cubic_graph& g,
                                                      const std::vector<int>& segment);

// edges of consecutive vertex pairs along a path
edge_set path_edge_set(const std::vector<int>& path_vertices);

// edge set of a cycle given as vertices in cyclic order
edge_set cycle_edge_set(const std::vector<int>& cycle_vertices);

// true if every neighbor of every listed vertex lies in `allowed`
bool isolated_from(const cubic_graph& g, const std::vector<int>& vertices,
                   const std::vector<int>& allowed);

// strictly increasing index sequence 0 = i0 < ... < ik = last, of minimum
// length, whose vertices are pairwise adjacent along the sequence; ties are
// resolved to the lexicographically smallest index sequence
std::vector<int> monotone_path_indices(const cubic_graph& g, const std::vector<int>& segment);

struct missing_connector : std::runtime_error {
  std::vector<int> run;
  explicit missing_connector(std::vector<int> r);
};

struct leftover_run {
  std::vector<int> vertices;  // maximal run of segment vertices skipped by the cycle
  edge connector;             // edge tying the run to a vertex outside `forbidden`

  leftover_run() : connector(0, 1) {}
};

// maximal runs of segment vertices whose indices are absent from mono_indices,
// each paired with its lexicographically least connector (by run position,
// then neighbor id); throws missing_connector if some run has none
std::vector<leftover_run> leftover_segments(const cubic_graph& g, const std::vector<int>& segment,
                                            const std::vector<int>& mono_indices,
                                            const std::vector<int>& forbidden);

}  // namespace cubicdec
