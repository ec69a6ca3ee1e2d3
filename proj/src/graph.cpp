#include "gcx/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace gcx::graph {

std::vector<std::pair<int, int>> AbstractGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int f = 0; f < flag_count(); ++f) {
    int g = involution[f];
    if (g > f) out.emplace_back(f, g);
  }
  return out;
}

std::vector<int> AbstractGraph::legs() const {
  std::vector<int> out;
  for (int f = 0; f < flag_count(); ++f)
    if (involution[f] == f) out.push_back(f);
  return out;
}

std::vector<int> AbstractGraph::flags_at(int v) const {
  std::vector<int> out;
  for (int f = 0; f < flag_count(); ++f)
    if (adjacency[f] == v) out.push_back(f);
  return out;
}

int AbstractGraph::valence(int v) const {
  int c = 0;
  for (int f = 0; f < flag_count(); ++f)
    if (adjacency[f] == v) ++c;
  return c;
}

int AbstractGraph::loops_at(int v) const {
  int c = 0;
  for (auto [f, g] : edges())
    if (adjacency[f] == v && adjacency[g] == v) ++c;
  return c;
}

bool AbstractGraph::is_connected() const {
  if (vertex_count == 0) return false;
  std::vector<bool> seen(vertex_count, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int f = 0; f < flag_count(); ++f) {
      if (adjacency[f] != v) continue;
      int w = adjacency[involution[f]];
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        q.push(w);
      }
    }
  }
  return reached == vertex_count;
}

void AbstractGraph::validate() const {
  if (vertex_count <= 0) throw std::invalid_argument("graph: vertex set is empty");
  if (involution.size() != adjacency.size())
    throw std::invalid_argument("graph: flag maps have different sizes");
  for (int f = 0; f < flag_count(); ++f) {
    if (adjacency[f] < 0 || adjacency[f] >= vertex_count)
      throw std::invalid_argument("graph: adjacency target out of range");
    int g = involution[f];
    if (g < 0 || g >= flag_count() || involution[g] != f)
      throw std::invalid_argument("graph: involution is not self-inverse");
  }
}

int ModularGraph::total_genus() const {
  int s = betti1();
  for (int gv : genus) s += gv;
  return s;
}

bool ModularGraph::is_stable() const {
  for (int v = 0; v < g.vertex_count; ++v)
    if (2 * genus[v] + g.valence(v) < 3) return false;
  return true;
}

void ModularGraph::validate() const {
  g.validate();
  if ((int)genus.size() != g.vertex_count)
    throw std::invalid_argument("modular graph: genus labels mismatch");
  for (int gv : genus)
    if (gv < 0) throw std::invalid_argument("modular graph: negative genus");
  if (!g.is_connected()) throw std::invalid_argument("modular graph: not connected");
  if (!is_stable()) throw std::invalid_argument("modular graph: unstable vertex");
  auto lg = g.legs();
  if (lg.size() != leg_labels.size())
    throw std::invalid_argument("modular graph: leg labeling is not a bijection");
  std::vector<int> sorted = leg_labels;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != lg) throw std::invalid_argument("modular graph: leg labeling is not a bijection");
}

bool ModularGraph::has_loops() const {
  for (auto [f, h] : g.edges())
    if (g.adjacency[f] == g.adjacency[h]) return true;
  return false;
}

bool ModularGraph::has_simple_loop() const {
  for (auto [f, h] : g.edges()) {
    int v = g.adjacency[f];
    if (v == g.adjacency[h] && genus[v] == 0 && g.valence(v) == 3) return true;
  }
  return false;
}

bool ModularGraph::has_parallel_edges() const {
  std::set<std::pair<int, int>> seen;
  for (auto [f, h] : g.edges()) {
    int u = g.adjacency[f], w = g.adjacency[h];
    if (u > w) std::swap(u, w);
    if (!seen.insert({u, w}).second) return true;
  }
  return false;
}

std::vector<int> GraphIsomorphism::edge_map(const ModularGraph& src, const ModularGraph& dst) const {
  auto se = src.g.edges();
  auto de = dst.g.edges();
  std::map<int, int> dst_index;  // min flag -> edge index
  for (size_t i = 0; i < de.size(); ++i) dst_index[de[i].first] = (int)i;
  std::vector<int> out(se.size());
  for (size_t i = 0; i < se.size(); ++i) {
    int a = flag_map[se[i].first], b = flag_map[se[i].second];
    out[i] = dst_index.at(std::min(a, b));
  }
  return out;
}

bool is_isomorphism(const GraphIsomorphism& iso, const ModularGraph& src,
                    const ModularGraph& dst) {
  if (src.g.vertex_count != dst.g.vertex_count) return false;
  if (src.g.flag_count() != dst.g.flag_count()) return false;
  if (src.n_legs() != dst.n_legs()) return false;
  const auto& vm = iso.vertex_map;
  const auto& fm = iso.flag_map;
  if ((int)vm.size() != src.g.vertex_count || (int)fm.size() != src.g.flag_count()) return false;
  std::vector<bool> vseen(dst.g.vertex_count, false), fseen(dst.g.flag_count(), false);
  for (int v : vm) {
    if (v < 0 || v >= dst.g.vertex_count || vseen[v]) return false;
    vseen[v] = true;
  }
  for (int f : fm) {
    if (f < 0 || f >= dst.g.flag_count() || fseen[f]) return false;
    fseen[f] = true;
  }
  for (int f = 0; f < src.g.flag_count(); ++f) {
    if (dst.g.adjacency[fm[f]] != vm[src.g.adjacency[f]]) return false;
    if (dst.g.involution[fm[f]] != fm[src.g.involution[f]]) return false;
  }
  for (int v = 0; v < src.g.vertex_count; ++v)
    if (dst.genus[vm[v]] != src.genus[v]) return false;
  for (int i = 0; i < src.n_legs(); ++i)
    if (fm[src.leg_labels[i]] != dst.leg_labels[i]) return false;
  return true;
}

GraphIsomorphism compose(const GraphIsomorphism& first, const GraphIsomorphism& second) {
  GraphIsomorphism out;
  out.vertex_map.resize(first.vertex_map.size());
  out.flag_map.resize(first.flag_map.size());
  for (size_t v = 0; v < first.vertex_map.size(); ++v)
    out.vertex_map[v] = second.vertex_map[first.vertex_map[v]];
  for (size_t f = 0; f < first.flag_map.size(); ++f)
    out.flag_map[f] = second.flag_map[first.flag_map[f]];
  return out;
}

// ---------------------------------------------------------------------------
// Canonical form.

Certificate certificate_of(const ModularGraph& g, const std::vector<int>& order) {
  int V = g.g.vertex_count, n = g.n_legs();
  Certificate cert;
  cert.push_back(V);
  cert.push_back(n);
  std::vector<int> inv(V);
  for (int v = 0; v < V; ++v) inv[order[v]] = v;
  for (int i = 0; i < V; ++i) cert.push_back(g.genus[inv[i]]);
  auto es = g.g.edges();
  std::vector<std::pair<int, int>> pairs;
  for (auto [f, h] : es) {
    int a = order[g.g.adjacency[f]], b = order[g.g.adjacency[h]];
    if (a > b) std::swap(a, b);
    pairs.emplace_back(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
  cert.push_back((long long)pairs.size());
  for (auto [a, b] : pairs) {
    cert.push_back(a);
    cert.push_back(b);
  }
  for (int i = 0; i < n; ++i) cert.push_back(order[g.g.adjacency[g.leg_labels[i]]]);
  return cert;
}

namespace {

ModularGraph graph_from_certificate(const Certificate& cert) {
  size_t p = 0;
  int V = (int)cert[p++];
  int n = (int)cert[p++];
  ModularGraph out;
  out.g.vertex_count = V;
  out.genus.resize(V);
  for (int i = 0; i < V; ++i) out.genus[i] = (int)cert[p++];
  int E = (int)cert[p++];
  std::vector<std::pair<int, int>> pairs(E);
  for (int k = 0; k < E; ++k) {
    pairs[k].first = (int)cert[p++];
    pairs[k].second = (int)cert[p++];
  }
  out.g.adjacency.resize(n + 2 * E);
  out.g.involution.resize(n + 2 * E);
  out.leg_labels.resize(n);
  for (int i = 0; i < n; ++i) {
    out.g.adjacency[i] = (int)cert[p++];
    out.g.involution[i] = i;
    out.leg_labels[i] = i;
  }
  for (int k = 0; k < E; ++k) {
    int fa = n + 2 * k, fb = n + 2 * k + 1;
    out.g.adjacency[fa] = pairs[k].first;
    out.g.adjacency[fb] = pairs[k].second;
    out.g.involution[fa] = fb;
    out.g.involution[fb] = fa;
  }
  return out;
}

// One round of color refinement; colors are normalized to ranks 0..k-1.
std::vector<int> refine_colors(const ModularGraph& g, std::vector<int> colors) {
  int V = g.g.vertex_count;
  for (;;) {
    std::vector<std::vector<long long>> sig(V);
    for (int v = 0; v < V; ++v) sig[v].push_back(colors[v]);
    for (auto [f, h] : g.g.edges()) {
      int u = g.g.adjacency[f], w = g.g.adjacency[h];
      sig[u].push_back(colors[w]);
      sig[w].push_back(colors[u]);
    }
    for (int v = 0; v < V; ++v) std::sort(sig[v].begin() + 1, sig[v].end());
    std::vector<std::vector<long long>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(V);
    for (int v = 0; v < V; ++v)
      next[v] = (int)(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    int old_classes = 1 + *std::max_element(colors.begin(), colors.end());
    int new_classes = (int)sorted.size();
    colors = std::move(next);
    if (new_classes == old_classes) return colors;
  }
}

std::vector<int> initial_colors(const ModularGraph& g) {
  int V = g.g.vertex_count;
  std::vector<std::vector<long long>> sig(V);
  for (int v = 0; v < V; ++v)
    sig[v] = {g.genus[v], g.g.valence(v), g.g.loops_at(v)};
  for (int i = 0; i < g.n_legs(); ++i)
    sig[g.g.adjacency[g.leg_labels[i]]].push_back(i + 1);
  std::vector<std::vector<long long>> sorted = sig;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> colors(V);
  for (int v = 0; v < V; ++v)
    colors[v] = (int)(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
  return colors;
}

struct CanonSearch {
  const ModularGraph& g;
  Certificate best;
  bool have_best = false;
  std::vector<std::vector<int>> best_orders;

  void run(std::vector<int> colors) {
    colors = refine_colors(g, colors);
    int V = g.g.vertex_count;
    int classes = 1 + *std::max_element(colors.begin(), colors.end());
    if (classes == V) {
      Certificate cert = certificate_of(g, colors);
      if (!have_best || cert < best) {
        best = cert;
        have_best = true;
        best_orders.clear();
        best_orders.push_back(colors);
      } else if (cert == best) {
        best_orders.push_back(colors);
      }
      return;
    }
    // first color class with more than one vertex
    int target = -1;
    std::vector<int> class_size(classes, 0);
    for (int v = 0; v < V; ++v) class_size[colors[v]]++;
    for (int c = 0; c < classes; ++c)
      if (class_size[c] > 1) {
        target = c;
        break;
      }
    for (int v = 0; v < V; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> split(V);
      for (int u = 0; u < V; ++u)
        split[u] = 2 * colors[u] + ((colors[u] == target && u != v) ? 1 : 0);
      run(std::move(split));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const ModularGraph& g) {
  g.validate();
  CanonSearch search{g};
  search.run(initial_colors(g));

  CanonicalForm out;
  out.certificate = search.best;
  out.canonical = graph_from_certificate(search.best);
  const std::vector<int>& order = search.best_orders.front();

  // Witness flag map: legs by label; edges matched within parallel classes in
  // order of their first flag.
  int n = g.n_legs();
  GraphIsomorphism iso;
  iso.vertex_map = order;
  iso.flag_map.assign(g.g.flag_count(), -1);
  for (int i = 0; i < n; ++i) iso.flag_map[g.leg_labels[i]] = out.canonical.leg_labels[i];

  auto src_edges = g.g.edges();
  auto can_edges = out.canonical.g.edges();
  // canonical edge index by endpoint pair, grouped
  std::map<std::pair<int, int>, std::vector<int>> can_by_pair;
  for (size_t k = 0; k < can_edges.size(); ++k) {
    auto [f, h] = can_edges[k];
    int a = out.canonical.g.adjacency[f], b = out.canonical.g.adjacency[h];
    if (a > b) std::swap(a, b);
    can_by_pair[{a, b}].push_back((int)k);
  }
  std::map<std::pair<int, int>, int> used;
  for (auto [f, h] : src_edges) {
    int a = order[g.g.adjacency[f]], b = order[g.g.adjacency[h]];
    bool swapped = a > b;
    if (swapped) std::swap(a, b);
    int k = can_by_pair[{a, b}][used[{a, b}]++];
    auto [cf, ch] = can_edges[k];  // cf at vertex a, ch at vertex b
    if (a == b) {
      iso.flag_map[f] = cf;
      iso.flag_map[h] = ch;
    } else {
      iso.flag_map[f] = swapped ? ch : cf;
      iso.flag_map[h] = swapped ? cf : ch;
    }
  }
  out.witness = std::move(iso);
  return out;
}

std::vector<GraphIsomorphism> automorphisms(const ModularGraph& g) {
  g.validate();
  CanonSearch search{g};
  search.run(initial_colors(g));
  int V = g.g.vertex_count;
  std::vector<int> ident(V);
  std::iota(ident.begin(), ident.end(), 0);
  if (search.best != certificate_of(g, ident))
    throw std::invalid_argument("automorphisms: input graph is not in canonical form");

  auto can_edges = g.g.edges();
  // parallel classes: endpoint pair -> edge indices
  std::map<std::pair<int, int>, std::vector<int>> by_pair;
  for (size_t k = 0; k < can_edges.size(); ++k) {
    auto [f, h] = can_edges[k];
    int a = g.g.adjacency[f], b = g.g.adjacency[h];
    if (a > b) std::swap(a, b);
    by_pair[{a, b}].push_back((int)k);
  }

  std::vector<GraphIsomorphism> out;
  for (const auto& vmap : search.best_orders) {
    // enumerate flag-level extensions: bijections within parallel classes,
    // plus the two flag assignments of each loop
    std::vector<std::pair<std::vector<int>, std::vector<int>>> class_pairs;
    for (const auto& [pr, idxs] : by_pair) {
      int a = vmap[pr.first], b = vmap[pr.second];
      if (a > b) std::swap(a, b);
      class_pairs.emplace_back(idxs, by_pair.at({a, b}));
    }
    // assignment[i] = permutation of target class i
    std::vector<std::vector<int>> perms(class_pairs.size());
    std::function<void(size_t)> rec = [&](size_t ci) {
      if (ci == class_pairs.size()) {
        // now expand loop orientations
        int nloops = 0;
        for (size_t i = 0; i < class_pairs.size(); ++i)
          for (size_t j = 0; j < class_pairs[i].first.size(); ++j) {
            auto [f, h] = can_edges[class_pairs[i].first[j]];
            if (g.g.adjacency[f] == g.g.adjacency[h]) ++nloops;
          }
        for (int mask = 0; mask < (1 << nloops); ++mask) {
          GraphIsomorphism iso;
          iso.vertex_map = vmap;
          iso.flag_map.assign(g.g.flag_count(), -1);
          for (int i = 0; i < g.n_legs(); ++i) iso.flag_map[g.leg_labels[i]] = g.leg_labels[i];
          int loop_pos = 0;
          for (size_t i = 0; i < class_pairs.size(); ++i) {
            for (size_t j = 0; j < class_pairs[i].first.size(); ++j) {
              int se = class_pairs[i].first[j];
              int de = class_pairs[i].second[perms[i][j]];
              auto [sf, sh] = can_edges[se];
              auto [df, dh] = can_edges[de];
              int su = g.g.adjacency[sf], sw = g.g.adjacency[sh];
              int du = g.g.adjacency[df];
              if (su == sw) {
                bool flip = (mask >> loop_pos) & 1;
                ++loop_pos;
                iso.flag_map[sf] = flip ? dh : df;
                iso.flag_map[sh] = flip ? df : dh;
              } else if (vmap[su] == du) {
                iso.flag_map[sf] = df;
                iso.flag_map[sh] = dh;
              } else {
                iso.flag_map[sf] = dh;
                iso.flag_map[sh] = df;
              }
            }
          }
          out.push_back(std::move(iso));
        }
        return;
      }
      std::vector<int> perm(class_pairs[ci].first.size());
      std::iota(perm.begin(), perm.end(), 0);
      do {
        perms[ci] = perm;
        rec(ci + 1);
      } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(0);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Nests and contraction.

std::vector<int> nest_vertices(const ModularGraph& g, const Nest& nest) {
  auto es = g.g.edges();
  std::set<int> vs;
  for (int ei : nest.edge_indices) {
    vs.insert(g.g.adjacency[es[ei].first]);
    vs.insert(g.g.adjacency[es[ei].second]);
  }
  return {vs.begin(), vs.end()};
}

int nest_betti1(const ModularGraph& g, const Nest& nest) {
  return (int)nest.edge_indices.size() - (int)nest_vertices(g, nest).size() + 1;
}

bool nest_is_polygon(const ModularGraph& g, const Nest& nest) {
  auto es = g.g.edges();
  std::map<int, int> deg;
  for (int ei : nest.edge_indices) {
    deg[g.g.adjacency[es[ei].first]]++;
    deg[g.g.adjacency[es[ei].second]]++;
  }
  for (auto [v, d] : deg)
    if (d != 2) return false;
  return nest.edge_indices.size() == deg.size();
}

static bool nest_connected(const ModularGraph& g, const std::vector<int>& edge_indices) {
  auto es = g.g.edges();
  std::map<int, std::vector<int>> adj;  // vertex -> incident nest edges
  for (int ei : edge_indices) {
    adj[g.g.adjacency[es[ei].first]].push_back(ei);
    adj[g.g.adjacency[es[ei].second]].push_back(ei);
  }
  if (adj.empty()) return false;
  std::set<int> seen;
  std::queue<int> q;
  q.push(adj.begin()->first);
  seen.insert(adj.begin()->first);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int ei : adj[v]) {
      for (int f : {es[ei].first, es[ei].second}) {
        int w = g.g.adjacency[f];
        if (!seen.count(w)) {
          seen.insert(w);
          q.push(w);
        }
      }
    }
  }
  return seen.size() == adj.size();
}

std::vector<Nest> enumerate_nests(const ModularGraph& g) {
  int E = g.edge_count();
  std::vector<Nest> out;
  for (uint32_t mask = 1; mask < (1u << E); ++mask) {
    std::vector<int> idxs;
    for (int e = 0; e < E; ++e)
      if ((mask >> e) & 1) idxs.push_back(e);
    if (!nest_connected(g, idxs)) continue;
    // proper: the subgraph must not be the whole graph
    if ((int)idxs.size() == E && g.n_legs() == 0) {
      Nest cand{idxs};
      if ((int)nest_vertices(g, cand).size() == g.g.vertex_count) continue;
    }
    out.push_back(Nest{idxs});
  }
  return out;
}

Contraction contract_nest(const ModularGraph& g, const Nest& nest) {
  auto es = g.g.edges();
  auto nvs = nest_vertices(g, nest);
  if (nvs.empty()) throw std::invalid_argument("contract_nest: empty nest");
  std::set<int> nest_vs(nvs.begin(), nvs.end());
  std::set<int> nest_flags;
  for (int ei : nest.edge_indices) {
    nest_flags.insert(es[ei].first);
    nest_flags.insert(es[ei].second);
  }

  Contraction out;
  int V = g.g.vertex_count;
  int anchor = nvs.front();
  out.vertex_map.assign(V, -1);
  int next = 0;
  for (int v = 0; v < V; ++v) {
    if (nest_vs.count(v)) {
      if (v == anchor) {
        out.vertex_map[v] = next++;
      }
    } else {
      out.vertex_map[v] = next++;
    }
  }
  for (int v : nvs) out.vertex_map[v] = out.vertex_map[anchor];
  out.merged_vertex = out.vertex_map[anchor];

  int genus_sum = 0;
  for (int v : nvs) genus_sum += g.genus[v];
  out.nest_genus = genus_sum + nest_betti1(g, nest);

  out.flag_map.assign(g.g.flag_count(), -1);
  int nf = 0;
  for (int f = 0; f < g.g.flag_count(); ++f)
    if (!nest_flags.count(f)) out.flag_map[f] = nf++;

  ModularGraph q;
  q.g.vertex_count = next;
  q.g.adjacency.resize(nf);
  q.g.involution.resize(nf);
  q.genus.assign(next, 0);
  for (int v = 0; v < V; ++v)
    if (!nest_vs.count(v)) q.genus[out.vertex_map[v]] = g.genus[v];
  q.genus[out.merged_vertex] = out.nest_genus;
  for (int f = 0; f < g.g.flag_count(); ++f) {
    if (out.flag_map[f] < 0) continue;
    q.g.adjacency[out.flag_map[f]] = out.vertex_map[g.g.adjacency[f]];
    q.g.involution[out.flag_map[f]] = out.flag_map[g.g.involution[f]];
  }
  q.leg_labels.resize(g.n_legs());
  for (int i = 0; i < g.n_legs(); ++i) q.leg_labels[i] = out.flag_map[g.leg_labels[i]];
  q.validate();
  out.quotient = std::move(q);
  return out;
}

ModularGraph nest_hat(const ModularGraph& g, const Nest& nest) {
  auto es = g.g.edges();
  auto nvs = nest_vertices(g, nest);
  std::set<int> nest_vs(nvs.begin(), nvs.end());
  std::set<int> nest_flags;
  for (int ei : nest.edge_indices) {
    nest_flags.insert(es[ei].first);
    nest_flags.insert(es[ei].second);
  }
  // flags of N̂: nest flags plus outside flags adjacent to nest vertices
  std::vector<int> flags;
  for (int f = 0; f < g.g.flag_count(); ++f)
    if (nest_vs.count(g.g.adjacency[f])) flags.push_back(f);

  std::map<int, int> vmap, fmap;
  for (size_t i = 0; i < nvs.size(); ++i) vmap[nvs[i]] = (int)i;
  for (size_t i = 0; i < flags.size(); ++i) fmap[flags[i]] = (int)i;

  ModularGraph hat;
  hat.g.vertex_count = (int)nvs.size();
  hat.g.adjacency.resize(flags.size());
  hat.g.involution.resize(flags.size());
  hat.genus.resize(nvs.size());
  for (int v : nvs) hat.genus[vmap[v]] = g.genus[v];
  for (int f : flags) {
    hat.g.adjacency[fmap[f]] = vmap[g.g.adjacency[f]];
    int p = g.g.involution[f];
    hat.g.involution[fmap[f]] = nest_flags.count(f) ? fmap[p] : fmap[f];
  }
  // legs labeled in increasing original flag id
  for (int f : flags)
    if (!nest_flags.count(f)) hat.leg_labels.push_back(fmap[f]);
  hat.validate();
  return hat;
}

// ---------------------------------------------------------------------------
// Constructors.

ModularGraph make_corolla(int genus, int n_legs) {
  ModularGraph g;
  g.g.vertex_count = 1;
  g.genus = {genus};
  g.g.adjacency.assign(n_legs, 0);
  g.g.involution.resize(n_legs);
  for (int i = 0; i < n_legs; ++i) g.g.involution[i] = i;
  g.leg_labels.resize(n_legs);
  std::iota(g.leg_labels.begin(), g.leg_labels.end(), 0);
  g.validate();
  return g;
}

ModularGraph make_theta(int loops) {
  ModularGraph g;
  g.g.vertex_count = 2;
  g.genus = {0, 1};
  int F = 6 + 2 * loops;
  g.g.adjacency.resize(F);
  g.g.involution.resize(F);
  for (int i = 0; i < 3; ++i) {
    g.g.adjacency[2 * i] = 0;
    g.g.adjacency[2 * i + 1] = 1;
    g.g.involution[2 * i] = 2 * i + 1;
    g.g.involution[2 * i + 1] = 2 * i;
  }
  for (int k = 0; k < loops; ++k) {
    int f = 6 + 2 * k;
    g.g.adjacency[f] = g.g.adjacency[f + 1] = 1;
    g.g.involution[f] = f + 1;
    g.g.involution[f + 1] = f;
  }
  g.validate();
  return g;
}

ModularGraph make_polygon(int len) {
  ModularGraph g;
  g.g.vertex_count = len;
  g.genus.assign(len, 0);
  int F = 3 * len;
  g.g.adjacency.resize(F);
  g.g.involution.resize(F);
  for (int i = 0; i < len; ++i) {
    g.g.adjacency[2 * i] = i;
    g.g.adjacency[2 * i + 1] = (i + 1) % len;
    g.g.involution[2 * i] = 2 * i + 1;
    g.g.involution[2 * i + 1] = 2 * i;
  }
  for (int i = 0; i < len; ++i) {
    int f = 2 * len + i;
    g.g.adjacency[f] = i;
    g.g.involution[f] = f;
    g.leg_labels.push_back(f);
  }
  g.validate();
  return g;
}

ModularGraph make_wheel(int len) {
  ModularGraph g;
  g.g.vertex_count = len + 1;  // hub is vertex `len`
  g.genus.assign(len + 1, 0);
  int F = 4 * len;
  g.g.adjacency.resize(F);
  g.g.involution.resize(F);
  for (int i = 0; i < len; ++i) {
    g.g.adjacency[2 * i] = i;
    g.g.adjacency[2 * i + 1] = (i + 1) % len;
    g.g.involution[2 * i] = 2 * i + 1;
    g.g.involution[2 * i + 1] = 2 * i;
  }
  for (int i = 0; i < len; ++i) {
    int f = 2 * len + 2 * i;
    g.g.adjacency[f] = len;
    g.g.adjacency[f + 1] = i;
    g.g.involution[f] = f + 1;
    g.g.involution[f + 1] = f;
  }
  g.validate();
  return g;
}

}  // namespace gcx::graph
