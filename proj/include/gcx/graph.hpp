#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gcx::graph {

// An abstract graph in the flag formalism: flags 0..F-1, each adjacent to a
// vertex, paired off by a self-inverse involution. Order-2 orbits of the
// involution are edges, fixed points are legs.
struct AbstractGraph {
  int vertex_count = 0;
  std::vector<int> adjacency;   // flag -> vertex
  std::vector<int> involution;  // flag -> flag, involution[involution[f]] == f

  int flag_count() const { return (int)adjacency.size(); }

  // Edges as flag pairs (f, involution[f]) with f < involution[f], sorted by
  // first flag. The position in this list is the edge's index.
  std::vector<std::pair<int, int>> edges() const;
  std::vector<int> legs() const;  // fixed flags, ascending

  std::vector<int> flags_at(int v) const;  // ascending
  int valence(int v) const;
  int loops_at(int v) const;
  bool is_connected() const;

  void validate() const;  // throws std::invalid_argument on malformed data
};

// A connected stable genus-labeled graph with numbered legs.
struct ModularGraph {
  AbstractGraph g;
  std::vector<int> genus;       // per vertex
  std::vector<int> leg_labels;  // leg_labels[i] = flag carrying label i+1

  int n_legs() const { return (int)leg_labels.size(); }
  int edge_count() const { return ((int)g.adjacency.size() - n_legs()) / 2; }
  int betti1() const { return edge_count() - g.vertex_count + 1; }
  int total_genus() const;
  std::pair<int, int> type() const { return {total_genus(), n_legs()}; }

  bool is_stable() const;  // 2 g(v) + valence(v) >= 3 at every vertex
  void validate() const;

  // A loop is simple if its vertex is trivalent of genus 0.
  bool has_loops() const;
  bool has_simple_loop() const;
  bool has_parallel_edges() const;
};

struct GraphIsomorphism {
  std::vector<int> vertex_map;  // source vertex -> target vertex
  std::vector<int> flag_map;    // source flag -> target flag

  // Permutation induced on edge indices (source edge list -> target edge list).
  std::vector<int> edge_map(const ModularGraph& src, const ModularGraph& dst) const;
};

// Checks that iso is a genuine modular-graph isomorphism src -> dst.
bool is_isomorphism(const GraphIsomorphism& iso, const ModularGraph& src,
                    const ModularGraph& dst);

// Composition: (second ∘ first).
GraphIsomorphism compose(const GraphIsomorphism& first, const GraphIsomorphism& second);

// A nest: a proper connected leg-free subgraph, stored as its edge indices
// (vertices are the induced endpoints). Single-vertex edgeless nests are not
// represented; they only ever contribute internal-differential terms, which
// vanish for the operads built here.
struct Nest {
  std::vector<int> edge_indices;  // ascending, nonempty
};

// Integer certificate that characterizes a modular graph up to isomorphism.
using Certificate = std::vector<long long>;

Certificate certificate_of(const ModularGraph& g, const std::vector<int>& vertex_order);

struct CanonicalForm {
  ModularGraph canonical;
  GraphIsomorphism witness;  // input -> canonical
  Certificate certificate;
};

// Deterministic canonical form: partition refinement on
// (genus, valence, loops, leg labels), then individualization with
// certificate minimization. Isomorphic inputs yield identical canonical
// graphs.
CanonicalForm canonical_form(const ModularGraph& g);

// Complete automorphism group of a canonical graph, at flag level.
std::vector<GraphIsomorphism> automorphisms(const ModularGraph& g);

struct Contraction {
  ModularGraph quotient;
  std::vector<int> vertex_map;  // old vertex -> new vertex
  std::vector<int> flag_map;    // old flag -> new flag, -1 for contracted
  int merged_vertex = -1;
  int nest_genus = 0;  // genus label the nest contributes to the merged vertex
};

// Contracts the edges of the nest to a single vertex labeled to preserve the
// total genus. Surviving flags keep their relative order.
Contraction contract_nest(const ModularGraph& g, const Nest& nest);

// The graph N̂: the nest with every outside flag adjacent to it added as a
// leg. Legs are labeled 1..k in increasing order of their original flag id,
// matching the letter order of the merged vertex in the quotient.
ModularGraph nest_hat(const ModularGraph& g, const Nest& nest);

// All nests (proper connected leg-free subgraphs with >= 1 edge).
std::vector<Nest> enumerate_nests(const ModularGraph& g);

// Nest vertices (ascending) induced by its edges.
std::vector<int> nest_vertices(const ModularGraph& g, const Nest& nest);
int nest_betti1(const ModularGraph& g, const Nest& nest);

// True iff the nest is a simple cycle (every nest vertex has exactly two
// nest flags); length = number of edges.
bool nest_is_polygon(const ModularGraph& g, const Nest& nest);

// Convenience constructors used throughout tests and the verify pipeline.
ModularGraph make_corolla(int genus, int n_legs);
// The two-vertex graph with three connecting edges and `loops` loops on the
// genus-1 vertex (vertex 0 genus 0, vertex 1 genus 1).
ModularGraph make_theta(int loops);
// Cycle of length len with one numbered leg per vertex, dihedral order.
ModularGraph make_polygon(int len);
// Wheel: cycle of length len plus a hub joined to every cycle vertex. Edge
// indices: rim edges first in cyclic order, then spokes.
ModularGraph make_wheel(int len);

}  // namespace gcx::graph
