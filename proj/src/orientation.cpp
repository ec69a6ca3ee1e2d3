#include "gcx/orientation.hpp"

#include <stdexcept>

namespace gcx::orientation {

int iso_sign(const graph::GraphIsomorphism& iso, const graph::ModularGraph& src_graph,
             const graph::ModularGraph& dst_graph, const Orientation& src,
             const Orientation& dst) {
  auto emap = iso.edge_map(src_graph, dst_graph);
  // position of each dst edge in dst's order
  std::vector<int> pos(dst.edge_order.size());
  for (size_t i = 0; i < dst.edge_order.size(); ++i) pos[dst.edge_order[i]] = (int)i;
  std::vector<int> perm(src.edge_order.size());
  for (size_t i = 0; i < src.edge_order.size(); ++i) perm[i] = pos[emap[src.edge_order[i]]];
  return permutation_sign(perm);
}

int auto_sign(const graph::GraphIsomorphism& iso, const graph::ModularGraph& g) {
  Orientation o = Orientation::standard(g.edge_count());
  return iso_sign(iso, g, g, o, o);
}

OrientationFactorization contraction_orientation(const Orientation& o,
                                                 const std::vector<int>& contracted_edges) {
  OrientationFactorization out;
  std::vector<bool> in_nest(o.edge_order.size(), false);
  for (int e : contracted_edges) {
    if (e < 0 || e >= (int)o.edge_order.size())
      throw std::out_of_range("contraction_orientation: edge index out of range");
    in_nest[e] = true;
  }
  int pending_nest = 0;
  long long inversions = 0;
  for (int e : o.edge_order) {
    if (in_nest[e]) {
      out.nest_order.push_back(e);
      ++pending_nest;
    } else {
      out.quotient_order.push_back(e);
      inversions += pending_nest;  // this edge moves past every nest edge seen so far
    }
  }
  out.sign = inversions % 2 == 0 ? 1 : -1;
  return out;
}

bool vanishes_under_automorphisms(
    const graph::ModularGraph& g, const Orientation& o,
    const std::function<linalg::RationalMatrix(const graph::GraphIsomorphism&)>& label_action,
    const std::vector<Rational>& label_vector) {
  auto autos = graph::automorphisms(g);
  int dim = (int)label_vector.size();
  std::vector<Rational> acc(dim, Rational(0));
  for (const auto& phi : autos) {
    int s = iso_sign(phi, g, g, o, o);
    linalg::RationalMatrix m = label_action(phi);
    if (m.rows() != dim || m.cols() != dim)
      throw std::invalid_argument("vanishes_under_automorphisms: label action has wrong shape");
    auto y = m.apply(label_vector);
    for (int i = 0; i < dim; ++i) acc[i] += Rational(s) * y[i];
  }
  for (const auto& v : acc)
    if (v != 0) return false;
  return true;
}

}  // namespace gcx::orientation
