#include "gcx/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "gcx/parallel.hpp"

namespace gcx::graph {

namespace {

struct RawGraph {
  int V;
  std::vector<int> genus;
  std::vector<std::pair<int, int>> edges;  // u <= v; loops as (v,v)
  std::vector<int> leg_vertex;             // label i+1 sits at leg_vertex[i]
};

ModularGraph to_modular(const RawGraph& r) {
  ModularGraph g;
  g.g.vertex_count = r.V;
  g.genus = r.genus;
  int n = (int)r.leg_vertex.size();
  int F = n + 2 * (int)r.edges.size();
  g.g.adjacency.resize(F);
  g.g.involution.resize(F);
  for (int i = 0; i < n; ++i) {
    g.g.adjacency[i] = r.leg_vertex[i];
    g.g.involution[i] = i;
    g.leg_labels.push_back(i);
  }
  for (size_t k = 0; k < r.edges.size(); ++k) {
    int fa = n + 2 * (int)k, fb = fa + 1;
    g.g.adjacency[fa] = r.edges[k].first;
    g.g.adjacency[fb] = r.edges[k].second;
    g.g.involution[fa] = fb;
    g.g.involution[fb] = fa;
  }
  return g;
}

bool connected(const RawGraph& r) {
  std::vector<int> parent(r.V);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : r.edges) parent[find(u)] = find(v);
  int root = find(0);
  for (int v = 1; v < r.V; ++v)
    if (find(v) != root) return false;
  return true;
}

// Weakly decreasing genus vectors of length V summing to G with entries
// bounded by cap.
void genus_vectors(int V, int G, int cap, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if ((int)cur.size() == V) {
    if (G == 0) out.push_back(cur);
    return;
  }
  int hi = cur.empty() ? cap : std::min(cap, cur.back());
  int slots = V - (int)cur.size();
  for (int g = std::min(hi, G); g >= 0; --g) {
    if (g * slots < G) break;  // can no longer reach the target sum
    cur.push_back(g);
    genus_vectors(V, G - g, cap, cur, out);
    cur.pop_back();
  }
}

// Edge-degree vectors with prescribed sum, weakly decreasing within blocks of
// equal genus (an inexpensive symmetry reduction).
void degree_vectors(const std::vector<int>& genus, int idx, int remaining, int n_legs,
                    std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  int V = (int)genus.size();
  if (idx == V) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  int hi = remaining;
  if (idx > 0 && genus[idx] == genus[idx - 1]) hi = std::min(hi, cur[idx - 1]);
  int lo = V > 1 ? 1 : 0;  // isolated vertices only exist in one-vertex graphs
  // a vertex must be able to reach stability with at most all legs
  for (int d = hi; d >= lo; --d) {
    if (2 * genus[idx] + d + n_legs < 3) break;
    cur.push_back(d);
    degree_vectors(genus, idx + 1, remaining - d, n_legs, cur, out);
    cur.pop_back();
  }
}

// Lex-ordered edge multiset generation matching the exact degree vector.
void edge_fill(int u, int last_target, std::vector<int>& rem, bool allow_loops,
               std::vector<std::pair<int, int>>& edges, const std::function<void()>& emit) {
  int V = (int)rem.size();
  while (u < V && rem[u] == 0) {
    ++u;
    last_target = u;
  }
  if (u >= V) {
    emit();
    return;
  }
  // feasibility: odd residue at u needs a cross edge
  int later = 0;
  for (int w = u + 1; w < V; ++w) later += rem[w];
  if (!allow_loops && rem[u] > later) return;
  if (allow_loops && rem[u] % 2 == 1 && later == 0) return;

  for (int w = std::max(last_target, u); w < V; ++w) {
    if (w == u) {
      if (!allow_loops || rem[u] < 2) continue;
      rem[u] -= 2;
      edges.emplace_back(u, u);
      edge_fill(u, u, rem, allow_loops, edges, emit);
      edges.pop_back();
      rem[u] += 2;
    } else {
      if (rem[w] < 1 || rem[u] < 1) continue;
      rem[u]--;
      rem[w]--;
      edges.emplace_back(u, w);
      edge_fill(u, w, rem, allow_loops, edges, emit);
      edges.pop_back();
      rem[u]++;
      rem[w]++;
    }
  }
}

// Distribute labeled legs; cap[v] limits nothing above, but every vertex must
// end stable, so track the outstanding deficiency.
void leg_fill(const std::vector<int>& genus, const std::vector<int>& edeg, int label, int n,
              std::vector<int>& at, std::vector<int>& count, int deficiency,
              const std::function<void()>& emit) {
  int V = (int)genus.size();
  if (label == n) {
    if (deficiency == 0) emit();
    return;
  }
  if (deficiency > n - label) return;  // not enough labels left to stabilize
  for (int v = 0; v < V; ++v) {
    int need = std::max(0, 3 - 2 * genus[v] - edeg[v] - count[v]);
    at.push_back(v);
    count[v]++;
    leg_fill(genus, edeg, label + 1, n, at, count, deficiency - (need > 0 ? 1 : 0), emit);
    count[v]--;
    at.pop_back();
  }
}

}  // namespace

std::vector<ModularGraph> enumerate_graphs(int genus, int legs, const EnumOptions& opt) {
  if (2 * genus + legs < 3)
    throw std::invalid_argument("enumerate_graphs: stability requires 2g + n >= 3");

  std::vector<RawGraph> raw;
  int vmax = std::max(1, 2 * genus + legs - 2);
  int gcap = opt.all_genus_zero ? 0 : std::min(genus, opt.max_vertex_genus);

  for (int V = 1; V <= vmax; ++V) {
    for (int G = 0; G <= std::min(genus, gcap * V); ++G) {
      int b1 = genus - G;
      int E = V - 1 + b1;
      if (opt.min_edges >= 0 && E < opt.min_edges) continue;
      if (opt.max_edges >= 0 && E > opt.max_edges) continue;
      if (opt.no_loops && V == 1 && b1 > 0) continue;
      std::vector<std::vector<int>> gvecs;
      std::vector<int> gcur;
      genus_vectors(V, G, gcap, gcur, gvecs);
      for (const auto& gv : gvecs) {
        std::vector<std::vector<int>> dvecs;
        std::vector<int> dcur;
        degree_vectors(gv, 0, 2 * E, legs, dcur, dvecs);
        for (const auto& dv : dvecs) {
          std::vector<int> rem = dv;
          std::vector<std::pair<int, int>> edges;
          edge_fill(0, 0, rem, !opt.no_loops, edges, [&]() {
            RawGraph r{V, gv, edges, {}};
            if (!connected(r)) return;
            std::vector<int> at, count(V, 0);
            int deficiency = 0;
            for (int v = 0; v < V; ++v) deficiency += std::max(0, 3 - 2 * gv[v] - dv[v]);
            leg_fill(gv, dv, 0, legs, at, count, deficiency, [&]() {
              RawGraph full = r;
              full.leg_vertex = at;
              raw.push_back(std::move(full));
            });
          });
        }
      }
    }
  }

  // canonicalize in parallel; deterministic merge in generation order
  std::vector<std::pair<Certificate, ModularGraph>> canon(raw.size());
  parallel_for(raw.size(), opt.jobs, [&](size_t i) {
    ModularGraph m = to_modular(raw[i]);
    auto cf = canonical_form(m);
    canon[i] = {std::move(cf.certificate), std::move(cf.canonical)};
  });

  std::map<Certificate, ModularGraph> dedup;
  for (auto& [cert, g] : canon) {
    if (opt.no_loops && g.has_loops()) continue;
    if (opt.no_simple_loops && g.has_simple_loop()) continue;
    dedup.emplace(std::move(cert), std::move(g));
  }
  std::vector<ModularGraph> out;
  out.reserve(dedup.size());
  for (auto& [cert, g] : dedup) out.push_back(std::move(g));
  return out;
}

}  // namespace gcx::graph
