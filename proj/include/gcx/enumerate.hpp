#pragma once

#include <limits>
#include <vector>

#include "gcx/graph.hpp"

namespace gcx::graph {

struct EnumOptions {
  int min_edges = -1;                                  // -1 = unbounded
  int max_edges = -1;
  int max_vertex_genus = std::numeric_limits<int>::max();
  bool all_genus_zero = false;
  bool no_loops = false;
  bool no_simple_loops = false;
  int jobs = 1;  // canonicalization parallelism; output independent of it
};

// One canonical representative per isomorphism class of modular graphs of
// type (genus, legs) passing the filters, sorted by certificate. Generation
// runs over degree-sequence-constrained edge insertions; deduplication is by
// canonical form.
std::vector<ModularGraph> enumerate_graphs(int genus, int legs, const EnumOptions& opt = {});

}  // namespace gcx::graph
