#pragma once

#include <functional>
#include <vector>

#include "gcx/graph.hpp"
#include "gcx/linalg.hpp"
#include "gcx/rational.hpp"

namespace gcx::orientation {

// A mod-2 edge order: a total order on the edge indices of its host graph.
// Two orientations differing by an odd permutation are negatives of one
// another. `degree` is +E for the twist K* and -E for K; the pairing
// identifies the two, so only the tag differs.
struct Orientation {
  std::vector<int> edge_order;  // permutation of 0..E-1
  int degree = 0;

  static Orientation standard(int edge_count) {
    Orientation o;
    o.edge_order.resize(edge_count);
    for (int i = 0; i < edge_count; ++i) o.edge_order[i] = i;
    o.degree = edge_count;
    return o;
  }
};

// Sign comparing iso-pushforward of `src`'s orientation with `dst`'s.
int iso_sign(const graph::GraphIsomorphism& iso, const graph::ModularGraph& src_graph,
             const graph::ModularGraph& dst_graph, const Orientation& src,
             const Orientation& dst);

// Sign of an automorphism acting on the standard orientation (edge
// permutation parity).
int auto_sign(const graph::GraphIsomorphism& iso, const graph::ModularGraph& g);

struct OrientationFactorization {
  int sign = 1;
  std::vector<int> quotient_order;  // surviving edges, in o-order
  std::vector<int> nest_order;      // contracted edges, in o-order
};

// Factors o as (quotient edges first, nest edges last): the sign is the
// parity of the shuffle moving the contracted edges to the back.
OrientationFactorization contraction_orientation(const Orientation& o,
                                                 const std::vector<int>& contracted_edges);

// True iff averaging over Aut(g) annihilates the oriented labeled class.
// label_action(phi) must return the matrix by which phi acts on the label
// space (the K*-sign is supplied here); `label_vector` is the class's label
// coordinate vector.
bool vanishes_under_automorphisms(
    const graph::ModularGraph& g, const Orientation& o,
    const std::function<linalg::RationalMatrix(const graph::GraphIsomorphism&)>& label_action,
    const std::vector<Rational>& label_vector);

}  // namespace gcx::orientation
