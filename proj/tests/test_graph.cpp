#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "gcx/enumerate.hpp"
#include "gcx/graph.hpp"

using namespace gcx;
using namespace gcx::graph;

// Brute-force isomorphism test over all vertex bijections and parallel-edge
// matchings; the independent oracle for enumeration and automorphism counts.
static bool brute_force_isomorphic(const ModularGraph& a, const ModularGraph& b) {
  if (a.g.vertex_count != b.g.vertex_count) return false;
  if (a.g.flag_count() != b.g.flag_count()) return false;
  if (a.n_legs() != b.n_legs()) return false;
  int V = a.g.vertex_count;
  std::vector<int> perm(V);
  std::iota(perm.begin(), perm.end(), 0);
  auto edge_multiset = [](const ModularGraph& g, const std::vector<int>* p) {
    std::multiset<std::pair<int, int>> out;
    for (auto [f, h] : g.g.edges()) {
      int u = g.g.adjacency[f], w = g.g.adjacency[h];
      if (p) {
        u = (*p)[u];
        w = (*p)[w];
      }
      if (u > w) std::swap(u, w);
      out.insert({u, w});
    }
    return out;
  };
  auto b_edges = edge_multiset(b, nullptr);
  do {
    bool ok = true;
    for (int v = 0; v < V && ok; ++v)
      if (a.genus[v] != b.genus[perm[v]]) ok = false;
    for (int i = 0; i < a.n_legs() && ok; ++i)
      if (perm[a.g.adjacency[a.leg_labels[i]]] != b.g.adjacency[b.leg_labels[i]]) ok = false;
    if (ok && edge_multiset(a, &perm) == b_edges) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

TEST_CASE("corolla basics") {
  auto c = make_corolla(0, 3);
  CHECK(c.total_genus() == 0);
  CHECK(c.n_legs() == 3);
  CHECK(c.edge_count() == 0);
  auto cf = canonical_form(c);
  CHECK(cf.canonical.g.vertex_count == 1);
  CHECK(is_isomorphism(cf.witness, c, cf.canonical));
  // legs are labeled: only the identity automorphism
  CHECK(automorphisms(cf.canonical).size() == 1);
}

TEST_CASE("canonical form is independent of the presentation") {
  // two differently-labeled presentations of the same wheel
  auto w = make_wheel(3);
  // relabel vertices and flags by a haphazard permutation
  ModularGraph shuffled;
  int V = w.g.vertex_count, F = w.g.flag_count();
  std::vector<int> vperm{2, 0, 3, 1}, fperm(F);
  std::iota(fperm.begin(), fperm.end(), 0);
  std::reverse(fperm.begin(), fperm.end());
  shuffled.g.vertex_count = V;
  shuffled.genus.assign(V, 0);
  shuffled.g.adjacency.resize(F);
  shuffled.g.involution.resize(F);
  for (int f = 0; f < F; ++f) {
    shuffled.g.adjacency[fperm[f]] = vperm[w.g.adjacency[f]];
    shuffled.g.involution[fperm[f]] = fperm[w.g.involution[f]];
  }
  auto c1 = canonical_form(w), c2 = canonical_form(shuffled);
  CHECK(c1.certificate == c2.certificate);
  CHECK(is_isomorphism(c1.witness, w, c1.canonical));
  CHECK(is_isomorphism(c2.witness, shuffled, c2.canonical));
  CHECK(brute_force_isomorphic(w, shuffled));

  // idempotence
  auto c3 = canonical_form(c1.canonical);
  CHECK(c3.certificate == c1.certificate);
  CHECK(c3.canonical.g.adjacency == c1.canonical.g.adjacency);
}

TEST_CASE("theta automorphism groups") {
  // theta_3: two vertices, three parallel edges, |Aut| = 3! = 6
  auto t3 = canonical_form(make_theta(0)).canonical;
  CHECK(automorphisms(t3).size() == 6);
  // theta_5: add 2 loops, |Aut| = 6 * (2^2 * 2!) = 48
  auto t5 = canonical_form(make_theta(2)).canonical;
  CHECK(automorphisms(t5).size() == 48);
  // theta_7: |Aut| = 6 * (2^4 * 4!) = 2304
  auto t7 = canonical_form(make_theta(4)).canonical;
  CHECK(automorphisms(t7).size() == 2304);
}

TEST_CASE("wheel automorphisms: the tetrahedron has 24") {
  auto w3 = canonical_form(make_wheel(3)).canonical;
  auto autos = automorphisms(w3);
  CHECK(autos.size() == 24);
  for (const auto& phi : autos) CHECK(is_isomorphism(phi, w3, w3));
  // composition stays in the group
  auto composed = compose(autos[1], autos[autos.size() - 1]);
  bool found = false;
  for (const auto& phi : autos)
    if (phi.flag_map == composed.flag_map) found = true;
  CHECK(found);

  // the 5-wheel has the dihedral group of the pentagon
  auto w5 = canonical_form(make_wheel(5)).canonical;
  CHECK(automorphisms(w5).size() == 10);
}

TEST_CASE("enumeration counts at small types") {
  CHECK(enumerate_graphs(0, 3).size() == 1);
  CHECK(enumerate_graphs(0, 4).size() == 4);
  CHECK(enumerate_graphs(1, 1).size() == 2);
  CHECK_THROWS(enumerate_graphs(0, 2));
}

TEST_CASE("enumeration output is pairwise non-isomorphic and complete") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 5}, {1, 2}, {1, 3}, {2, 0}, {2, 1}}) {
    auto gs = enumerate_graphs(g, n);
    for (const auto& m : gs) {
      m.validate();
      CHECK(m.total_genus() == g);
      CHECK(m.n_legs() == n);
    }
    for (size_t i = 0; i < gs.size(); ++i)
      for (size_t j = i + 1; j < gs.size(); ++j)
        CHECK(!brute_force_isomorphic(gs[i], gs[j]));
  }
  // spot check a known count: loopless trivalent genus-2 graphs exist among
  // the 2-vertex classes (theta graph and the dumbbell with a loop, etc.)
  auto g2 = enumerate_graphs(2, 0);
  CHECK(g2.size() > 2);
}

TEST_CASE("automorphism count equals the brute-force orbit ratio") {
  // |Aut| from the flag-level list matches dedicated counting for the wheel
  auto w = canonical_form(make_wheel(4)).canonical;
  CHECK(automorphisms(w).size() == 8);  // dihedral group of the square
}

TEST_CASE("nests of the labeled triangle") {
  auto tri = make_polygon(3);
  auto nests = enumerate_nests(tri);
  // 3 single edges + 3 two-edge paths + the full (leg-free) triangle
  CHECK(nests.size() == 7);
}

TEST_CASE("nests of theta_3") {
  auto t3 = make_theta(0);
  auto nests = enumerate_nests(t3);
  // 3 single edges + 3 parallel pairs; the full subgraph is not proper
  CHECK(nests.size() == 6);
  int polygons = 0;
  for (const auto& n : nests)
    if (nest_is_polygon(t3, n) && n.edge_indices.size() >= 2) ++polygons;
  CHECK(polygons == 3);  // the three 2-gons
}

TEST_CASE("contracting a non-loop edge of theta_3") {
  auto t3 = make_theta(0);
  Nest nest{{0}};
  auto c = contract_nest(t3, nest);
  CHECK(c.quotient.g.vertex_count == 1);
  CHECK(c.quotient.total_genus() == 3);
  CHECK(c.quotient.genus[0] == 1);
  CHECK(c.quotient.edge_count() == 2);
  CHECK(c.quotient.g.loops_at(0) == 2);
}

TEST_CASE("contracting the interior polygon of a wheel gives theta") {
  for (int j : {1, 2, 3}) {
    auto w = make_wheel(2 * j + 1);
    // interior cycle missing rim vertex 0: spokes to rim 1 and rim 2j, plus
    // the rim path 1..2j
    std::vector<int> cycle;
    for (int i = 1; i < 2 * j; ++i) cycle.push_back(i);              // rim edges i: v_i - v_{i+1}
    cycle.push_back(2 * j + 1 + 1);                                  // spoke to rim 1
    cycle.push_back(2 * j + 1 + 2 * j);                              // spoke to rim 2j
    std::sort(cycle.begin(), cycle.end());
    Nest nest{cycle};
    CHECK(nest_is_polygon(w, nest));
    CHECK((int)nest.edge_indices.size() == 2 * j + 1);
    auto c = contract_nest(w, nest);
    auto theta = make_theta(2 * j - 2);
    CHECK(canonical_form(c.quotient).certificate == canonical_form(theta).certificate);
    CHECK(c.quotient.total_genus() == w.total_genus());
  }
}

TEST_CASE("nest hat legs correspond to the merged vertex flags") {
  auto w = make_wheel(3);
  Nest nest{{0, 1, 2}};  // the rim triangle
  auto hat = nest_hat(w, nest);
  CHECK(hat.n_legs() == 3);
  CHECK(hat.g.vertex_count == 3);
  CHECK(hat.total_genus() == 1);
  auto c = contract_nest(w, nest);
  CHECK(c.quotient.g.valence(c.merged_vertex) == 3);
}

TEST_CASE("single-vertex nests are excluded, contraction preserves genus") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 1}}) {
    for (const auto& m : enumerate_graphs(g, n)) {
      for (const auto& nest : enumerate_nests(m)) {
        CHECK(!nest.edge_indices.empty());
        auto c = contract_nest(m, nest);
        CHECK(c.quotient.total_genus() == m.total_genus());
        CHECK(c.quotient.n_legs() == m.n_legs());
      }
    }
  }
}

TEST_CASE("Euler relation for loopless leg-free graphs") {
  for (const auto& m : enumerate_graphs(3, 0, [] {
         EnumOptions o;
         o.no_loops = true;
         o.all_genus_zero = true;
         return o;
       }())) {
    int E = m.edge_count(), V = m.g.vertex_count, g = m.total_genus();
    CHECK(2 * g - E == E - 2 * V + 2);
  }
}

TEST_CASE("edge filters") {
  EnumOptions o;
  o.min_edges = 6;
  o.max_edges = 6;
  o.all_genus_zero = true;
  for (const auto& m : enumerate_graphs(3, 0, o)) CHECK(m.edge_count() == 6);

  EnumOptions osl;
  osl.no_simple_loops = true;
  for (const auto& m : enumerate_graphs(2, 1, osl)) CHECK(!m.has_simple_loop());
}
