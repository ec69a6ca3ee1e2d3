#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "gcx/enumerate.hpp"
#include "gcx/graph.hpp"
#include "gcx/hlie.hpp"
#include "gcx/linalg.hpp"
#include "gcx/orientation.hpp"

namespace gcx::feynman {

enum class Operad { Com, HLie };

struct Options {
  bool no_loops = false;
  bool no_simple_loops = false;
  int jobs = 1;
};

// Basis of one graph summand at one internal degree: the invariant subspace
// of K*(γ) ⊗ A(γ) under Aut(γ), echelonized over the raw label basis.
//
// Raw label basis: genus-1 vertices in ascending vertex order each carry a
// normal-form wedge subset (letters over {1..valence-1}); genus-0 vertices
// carry the commutative generator. The summand vanishes iff the averaging
// projector kills everything.
struct Summand {
  graph::ModularGraph graph;  // canonical
  graph::Certificate cert;
  int internal_degree = 0;
  std::vector<int> genus1_vertices;
  std::vector<std::vector<std::vector<int>>> raw;  // raw[i] = wedges per genus-1 vertex
  std::map<std::vector<std::vector<int>>, int> raw_index;
  std::vector<graph::GraphIsomorphism> autos;
  // precomputed action data aligned with autos: K*-sign and, per genus-1
  // position, the target position and letter map
  std::vector<int> auto_signs;
  std::vector<std::vector<std::pair<int, std::vector<int>>>> auto_maps;
  std::vector<linalg::SparseVec> basis;  // reduced echelon, over raw coords
  std::vector<int> pivots;

  int edges() const { return graph.edge_count(); }
  int dim() const { return (int)basis.size(); }

  // Average a raw vector over Aut and return its coordinates in `basis`.
  std::vector<Rational> coords(const linalg::SparseVec& raw_vec) const;
  linalg::SparseVec project_raw(const linalg::SparseVec& raw_vec) const;
  linalg::SparseVec act(const graph::GraphIsomorphism& phi, const linalg::SparseVec& v) const;
};

// (graph id, internal degree, basis index)
using ChainKey = std::tuple<int, int, int>;
// Formal rational combination of summand basis vectors.
using Chain = std::map<ChainKey, Rational>;

Chain& chain_add(Chain& c, const ChainKey& k, const Rational& v);

// Graph-indexed chain complex B(A)(g,n) with the bigraded differential.
// Summands are built lazily and cached; build_all() enumerates the whole
// complex for the d-squared and homology checks.
class Complex {
 public:
  Complex(Operad op, int g, int n, Options opt = {});
  ~Complex();

  Operad operad() const { return op_; }
  int genus() const { return g_; }
  int legs() const { return n_; }
  const Options& options() const { return opt_; }

  // Intern a graph (canonicalizing if needed); returns its id.
  int graph_id(const graph::ModularGraph& g);
  std::optional<int> find_graph(const graph::Certificate& cert) const;
  const graph::ModularGraph& graph_of(int gid) const;

  // nullptr when the summand is zero-dimensional (or the graph carries no
  // labels at this degree).
  const Summand* summand(int gid, int internal_degree);

  // Internal degrees with nonzero label space for this graph.
  std::vector<int> internal_degrees(int gid);

  // Enumerate every contributing graph of the complex and build all
  // summands. Afterwards all_keys() lists every basis vector.
  void build_all();
  const std::vector<ChainKey>& all_keys() const { return keys_; }

  // Full differential (one-edge contractions plus odd-polygon Massey terms),
  // or just the one-edge part.
  Chain differential(const Chain& c);
  Chain d1(const Chain& c);

  // Differential of a single basis vector; cached. max_edges = 1 gives d1.
  const Chain& differential_of(const ChainKey& key, int max_nest_edges);

  // Component of a chain in the summand of γ (zero vector if absent).
  std::vector<Rational> project(const Chain& c, const graph::ModularGraph& gamma,
                                int internal_degree);

  // Per-nest differential terms of a basis vector restricted to one target
  // summand; used for the nesting-by-nesting witnesses.
  struct TermReport {
    std::vector<int> nest_edges;
    std::vector<Rational> coords;
  };
  std::vector<TermReport> differential_terms_to(const ChainKey& key, int target_gid,
                                                int target_degree);

  // d-squared on every basis vector; returns the offending key if any.
  std::optional<ChainKey> check_d_squared(int max_nest_edges = 1 << 20);

 private:
  struct NestTerm;
  struct GraphEntry;
  void ensure_terms(int gid);
  Chain apply_terms(const ChainKey& key, int max_nest_edges, std::optional<int> target_gid,
                    std::vector<TermReport>* reports, int target_degree = -1);

  Operad op_;
  int g_, n_;
  Options opt_;
  std::vector<GraphEntry> graphs_;
  std::map<graph::Certificate, int> by_cert_;
  std::map<std::pair<int, int>, std::optional<Summand>> summands_;
  std::map<std::pair<ChainKey, int>, Chain> diff_cache_;
  std::vector<ChainKey> keys_;
  bool built_ = false;
};

// The wheel class: the generator of the (1-dimensional) wheel-graph summand
// in bidegree (4j+2, 0). Edge-order convention: rim edges in cyclic order,
// then spokes.
Chain omega(Complex& cx, int j);

// The canonical generator of the theta summand in bidegree (2j+1, 2j):
// genus-1 vertex labeled by x_{2j+1}, genus-0 vertex by the commutative
// product, non-loop edges first in the edge order.
Chain beta(Complex& cx, int j);

// Dimension of the theta summand in bidegree (2j+1, 2j).
int theta_summand_dimension(Complex& cx, int j);

// The loopless genus-g slice of B(Com): boundary matrices indexed by edge
// count over [min_edges, max_edges]. Graph degree = 2g - E.
struct Gc2Slice {
  int genus = 0;
  int min_edges = 0;
  linalg::ChainComplexSlice slice;            // index i <-> edge count min_edges + i
  std::vector<std::vector<ChainKey>> bases;   // basis keys per edge count

  int degree_of_edge_count(int e) const { return 2 * genus - e; }
};

Gc2Slice gc2_slice(Complex& cx, int min_edges, int max_edges);

}  // namespace gcx::feynman
