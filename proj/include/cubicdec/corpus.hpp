#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubicdec/graph.hpp"

namespace cubicdec {

// canonical graph6 form: color refinement plus individualization picks the
// lexicographically least adjacency encoding, so isomorphic graphs map to the
// same string
std::string canonical_graph6(const cubic_graph& g);

// every connected cubic graph on n vertices, one representative per
// isomorphism class, sorted by canonical form
std::vector<cubic_graph> generate_exhaustive(int n);

// connected cubic graphs drawn from the configuration model (rejection
// sampling); deterministic for a fixed seed
std::vector<cubic_graph> generate_random(int n, int count, std::uint64_t seed);

} // namespace cubicdec
