#include "gcx/feynman.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "gcx/parallel.hpp"

namespace gcx::feynman {

using graph::Certificate;
using graph::GraphIsomorphism;
using graph::ModularGraph;
using graph::Nest;
using hlie::GenusOneClass;
using linalg::SparseVec;

namespace {

int letter_of(const std::vector<int>& flags, int flag) {
  auto it = std::lower_bound(flags.begin(), flags.end(), flag);
  return (int)(it - flags.begin()) + 1;
}

// even compositions of s over the genus-1 valences
void degree_distributions(const std::vector<int>& valences, int s, size_t idx,
                          std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (idx == valences.size()) {
    if (s == 0) out.push_back(cur);
    return;
  }
  for (int i = 0; i <= std::min(s, valences[idx] - 1); i += 2) {
    cur.push_back(i);
    degree_distributions(valences, s - i, idx + 1, cur, out);
    cur.pop_back();
  }
}

void tensor_expand(const std::vector<GenusOneClass>& per_pos, size_t idx,
                   std::vector<std::vector<int>>& shape, const Rational& coeff,
                   const std::map<std::vector<std::vector<int>>, int>& raw_index,
                   SparseVec& out) {
  if (coeff == 0) return;
  if (idx == per_pos.size()) {
    auto it = raw_index.find(shape);
    if (it == raw_index.end())
      throw std::logic_error("tensor_expand: shape missing from raw basis");
    auto jt = out.find(it->second);
    if (jt == out.end()) {
      out.emplace(it->second, coeff);
    } else {
      jt->second += coeff;
      if (jt->second == 0) out.erase(jt);
    }
    return;
  }
  for (const auto& [wedge, v] : per_pos[idx].coords) {
    shape[idx] = wedge;
    tensor_expand(per_pos, idx + 1, shape, coeff * v, raw_index, out);
  }
  shape[idx].clear();
}

bool vertex_genus_admissible(const ModularGraph& g, Operad op) {
  for (int v = 0; v < g.g.vertex_count; ++v) {
    if (g.genus[v] >= 2) return false;
    if (op == Operad::Com && g.genus[v] != 0) return false;
  }
  return true;
}

std::optional<Summand> build_summand_impl(const ModularGraph& g, const Certificate& cert,
                                          int internal_degree, Operad op, int jobs) {
  if (internal_degree < 0 || internal_degree % 2 != 0) return std::nullopt;
  if (!vertex_genus_admissible(g, op)) return std::nullopt;

  Summand s;
  s.graph = g;
  s.cert = cert;
  s.internal_degree = internal_degree;
  for (int v = 0; v < g.g.vertex_count; ++v)
    if (g.genus[v] == 1) s.genus1_vertices.push_back(v);
  std::vector<int> valences;
  for (int v : s.genus1_vertices) valences.push_back(g.g.valence(v));

  std::vector<std::vector<int>> dists;
  std::vector<int> cur;
  degree_distributions(valences, internal_degree, 0, cur, dists);
  for (const auto& dist : dists) {
    std::vector<std::vector<std::vector<int>>> per_pos;
    for (size_t p = 0; p < valences.size(); ++p)
      per_pos.push_back(hlie::subsets_lex(valences[p] - 1, dist[p]));
    std::vector<std::vector<int>> shape(valences.size());
    std::function<void(size_t)> rec = [&](size_t p) {
      if (p == valences.size()) {
        s.raw_index.emplace(shape, (int)s.raw.size());
        s.raw.push_back(shape);
        return;
      }
      for (const auto& w : per_pos[p]) {
        shape[p] = w;
        rec(p + 1);
      }
    };
    rec(0);
  }
  if (s.raw.empty()) return std::nullopt;

  s.autos = graph::automorphisms(g);
  for (const auto& phi : s.autos) {
    s.auto_signs.push_back(orientation::auto_sign(phi, g));
    std::vector<std::pair<int, std::vector<int>>> maps;
    for (int v : s.genus1_vertices) {
      int w = phi.vertex_map[v];
      int tp = (int)(std::lower_bound(s.genus1_vertices.begin(), s.genus1_vertices.end(), w) -
                     s.genus1_vertices.begin());
      auto vflags = g.g.flags_at(v);
      auto wflags = g.g.flags_at(w);
      std::vector<int> lmap(vflags.size());
      for (size_t i = 0; i < vflags.size(); ++i)
        lmap[i] = letter_of(wflags, phi.flag_map[vflags[i]]);
      maps.emplace_back(tp, std::move(lmap));
    }
    s.auto_maps.push_back(std::move(maps));
  }

  std::vector<SparseVec> rows(s.raw.size());
  parallel_for(s.raw.size(), jobs, [&](size_t i) {
    SparseVec e;
    e.emplace((int)i, Rational(1));
    rows[i] = s.project_raw(e);
  });
  auto [reduced, pivots] = linalg::rref_rows(std::move(rows));
  s.basis = std::move(reduced);
  s.pivots = std::move(pivots);
  return s;
}

}  // namespace

SparseVec Summand::act(const GraphIsomorphism& phi, const SparseVec& v) const {
  for (size_t a = 0; a < autos.size(); ++a) {
    if (autos[a].flag_map != phi.flag_map) continue;
    SparseVec out;
    for (const auto& [idx, c] : v) {
      const auto& shape = raw[idx];
      std::vector<GenusOneClass> per_pos(genus1_vertices.size());
      for (size_t p = 0; p < genus1_vertices.size(); ++p) {
        int val = graph.g.valence(genus1_vertices[p]);
        GenusOneClass cls = hlie::zero_class(val, (int)shape[p].size());
        cls.coords.emplace(shape[p], Rational(1));
        const auto& [tp, lmap] = auto_maps[a][p];
        per_pos[tp] = hlie::relabel(cls, lmap, val);
      }
      std::vector<std::vector<int>> out_shape(genus1_vertices.size());
      tensor_expand(per_pos, 0, out_shape, c * auto_signs[a], raw_index, out);
    }
    return out;
  }
  throw std::invalid_argument("Summand::act: not an automorphism of this summand");
}

SparseVec Summand::project_raw(const SparseVec& raw_vec) const {
  SparseVec acc;
  for (size_t a = 0; a < autos.size(); ++a) {
    for (const auto& [idx, c] : raw_vec) {
      const auto& shape = raw[idx];
      std::vector<GenusOneClass> per_pos(genus1_vertices.size());
      for (size_t p = 0; p < genus1_vertices.size(); ++p) {
        int val = graph.g.valence(genus1_vertices[p]);
        GenusOneClass cls = hlie::zero_class(val, (int)shape[p].size());
        cls.coords.emplace(shape[p], Rational(1));
        const auto& [tp, lmap] = auto_maps[a][p];
        per_pos[tp] = hlie::relabel(cls, lmap, val);
      }
      std::vector<std::vector<int>> out_shape(genus1_vertices.size());
      tensor_expand(per_pos, 0, out_shape, c * auto_signs[a], raw_index, acc);
    }
  }
  Rational inv(1, (long)autos.size());
  for (auto it = acc.begin(); it != acc.end();) {
    it->second *= inv;
    it = it->second == 0 ? acc.erase(it) : std::next(it);
  }
  return acc;
}

std::vector<Rational> Summand::coords(const SparseVec& raw_vec) const {
  SparseVec p = project_raw(raw_vec);
  std::vector<Rational> out(basis.size(), Rational(0));
  for (size_t k = 0; k < basis.size(); ++k) {
    auto it = p.find(pivots[k]);
    if (it != p.end()) out[k] = it->second;
  }
  return out;
}

// ---------------------------------------------------------------------------

struct Complex::NestTerm {
  std::vector<int> nest_edges;
  int e = 0;
  enum Kind { EdgeG0G0, EdgeG0G1, Loop, Polygon } kind = EdgeG0G0;
  int target_gid = -1;
  int static_sign = 1;
  int merged_target_pos = -1;  // genus-1 position in target, or -1
  int merged_arity = 0;
  int g1_pos = -1;      // EdgeG0G1: source genus-1 position being consumed
  int glue_letter = 0;  // its glue-flag letter
  std::vector<int> g1_letter_map;
  GenusOneClass polygon_class;  // Polygon: merged class in target letters
  std::vector<std::tuple<int, int, std::vector<int>>> carried;  // (src pos, tgt pos, letters)
};

struct Complex::GraphEntry {
  ModularGraph graph;
  Certificate cert;
  bool terms_built = false;
  std::vector<NestTerm> terms;
};

Complex::Complex(Operad op, int g, int n, Options opt) : op_(op), g_(g), n_(n), opt_(opt) {
  if (2 * g + n < 3) throw std::invalid_argument("Complex: 2g + n >= 3 required");
}

Complex::~Complex() = default;

int Complex::graph_id(const ModularGraph& g) {
  auto cf = graph::canonical_form(g);
  auto it = by_cert_.find(cf.certificate);
  if (it != by_cert_.end()) return it->second;
  int id = (int)graphs_.size();
  graphs_.push_back(GraphEntry{std::move(cf.canonical), cf.certificate, false, {}});
  by_cert_.emplace(std::move(cf.certificate), id);
  return id;
}

std::optional<int> Complex::find_graph(const Certificate& cert) const {
  auto it = by_cert_.find(cert);
  if (it == by_cert_.end()) return std::nullopt;
  return it->second;
}

const ModularGraph& Complex::graph_of(int gid) const { return graphs_.at(gid).graph; }

std::vector<int> Complex::internal_degrees(int gid) {
  const ModularGraph& g = graphs_.at(gid).graph;
  if (!vertex_genus_admissible(g, op_)) return {};
  std::vector<int> valences;
  for (int v = 0; v < g.g.vertex_count; ++v)
    if (g.genus[v] == 1) valences.push_back(g.g.valence(v));
  int smax = 0;
  for (int val : valences) smax += val - 1;
  std::vector<int> out;
  for (int s = 0; s <= smax; s += 2) {
    std::vector<std::vector<int>> dists;
    std::vector<int> cur;
    degree_distributions(valences, s, 0, cur, dists);
    if (!dists.empty()) out.push_back(s);
  }
  return out;
}

const Summand* Complex::summand(int gid, int internal_degree) {
  auto key = std::make_pair(gid, internal_degree);
  auto it = summands_.find(key);
  if (it != summands_.end()) return it->second ? &*it->second : nullptr;
  auto& slot = summands_[key];
  slot = build_summand_impl(graphs_.at(gid).graph, graphs_.at(gid).cert, internal_degree, op_,
                            opt_.jobs);
  return slot ? &*slot : nullptr;
}

// ---------------------------------------------------------------------------

void Complex::ensure_terms(int gid) {
  if (graphs_.at(gid).terms_built) return;
  const ModularGraph g = graphs_.at(gid).graph;  // copy: graphs_ may grow below
  auto edges = g.g.edges();
  int E = (int)edges.size();
  orientation::Orientation o0 = orientation::Orientation::standard(E);

  // candidate nests: single edges, plus odd genus-0 polygons for the Massey
  // operations
  std::vector<std::vector<int>> candidates;
  for (int e = 0; e < E; ++e) candidates.push_back({e});
  if (op_ == Operad::HLie) {
    for (const auto& nest : graph::enumerate_nests(g)) {
      if (nest.edge_indices.size() < 3 || nest.edge_indices.size() % 2 == 0) continue;
      if (!graph::nest_is_polygon(g, nest)) continue;
      bool all_g0 = true;
      for (int v : graph::nest_vertices(g, nest))
        if (g.genus[v] != 0) all_g0 = false;
      if (all_g0) candidates.push_back(nest.edge_indices);
    }
  }

  std::vector<NestTerm> terms;
  for (const auto& nest_edges : candidates) {
    Nest nest{nest_edges};
    int e = (int)nest_edges.size();

    NestTerm t;
    t.nest_edges = nest_edges;
    t.e = e;

    if (e == 1) {
      auto [f1, f2] = edges[nest_edges[0]];
      int u = g.g.adjacency[f1], w = g.g.adjacency[f2];
      if (u == w) {
        if (g.genus[u] >= 1) continue;       // genus-2 label: zero
        if (op_ == Operad::Com) continue;    // creates a genus-1 vertex
        t.kind = NestTerm::Loop;
      } else {
        int gsum = g.genus[u] + g.genus[w];
        if (gsum >= 2) continue;
        if (gsum == 1) {
          if (op_ == Operad::Com) continue;
          t.kind = NestTerm::EdgeG0G1;
        } else {
          t.kind = NestTerm::EdgeG0G0;
        }
      }
    } else {
      t.kind = NestTerm::Polygon;
    }

    auto contraction = graph::contract_nest(g, nest);
    const ModularGraph& q = contraction.quotient;
    if (!vertex_genus_admissible(q, op_)) continue;

    auto cf = graph::canonical_form(q);
    int tgid;
    auto it = by_cert_.find(cf.certificate);
    if (it != by_cert_.end()) {
      tgid = it->second;
    } else {
      tgid = (int)graphs_.size();
      graphs_.push_back(GraphEntry{cf.canonical, cf.certificate, false, {}});
      by_cert_.emplace(cf.certificate, tgid);
    }
    t.target_gid = tgid;
    const ModularGraph& target = graphs_.at(tgid).graph;

    // orientation: shuffle sign times the witness pushforward of the
    // surviving edge order against the target's standard order
    auto fact = orientation::contraction_orientation(o0, nest_edges);
    auto qedges = q.g.edges();
    std::map<int, int> q_index;
    for (size_t k = 0; k < qedges.size(); ++k) q_index[qedges[k].first] = (int)k;
    auto psi_edges = cf.witness.edge_map(q, target);
    std::vector<int> pushed;
    for (int eid : fact.quotient_order) {
      auto [f1, f2] = edges[eid];
      int qf = std::min(contraction.flag_map[f1], contraction.flag_map[f2]);
      pushed.push_back(psi_edges[q_index.at(qf)]);
    }
    t.static_sign = fact.sign * permutation_sign(pushed);

    std::vector<int> src_g1, tgt_g1;
    for (int v = 0; v < g.g.vertex_count; ++v)
      if (g.genus[v] == 1) src_g1.push_back(v);
    for (int v = 0; v < target.g.vertex_count; ++v)
      if (target.genus[v] == 1) tgt_g1.push_back(v);

    auto target_letter = [&](int src_flag) {
      int tf = cf.witness.flag_map[contraction.flag_map[src_flag]];
      int tv = target.g.adjacency[tf];
      return letter_of(target.g.flags_at(tv), tf);
    };
    auto target_pos_of = [&](int tv) {
      return (int)(std::lower_bound(tgt_g1.begin(), tgt_g1.end(), tv) - tgt_g1.begin());
    };

    int merged_tv = cf.witness.vertex_map[contraction.merged_vertex];
    t.merged_arity = target.g.valence(merged_tv);

    std::set<int> nest_vs;
    for (int v : graph::nest_vertices(g, nest)) nest_vs.insert(v);

    for (size_t p = 0; p < src_g1.size(); ++p) {
      int v = src_g1[p];
      if (nest_vs.count(v)) continue;  // consumed by the operation (EdgeG0G1)
      auto vflags = g.g.flags_at(v);
      std::vector<int> lmap(vflags.size());
      for (size_t i = 0; i < vflags.size(); ++i) lmap[i] = target_letter(vflags[i]);
      int tv = cf.witness.vertex_map[contraction.vertex_map[v]];
      t.carried.emplace_back((int)p, target_pos_of(tv), std::move(lmap));
    }

    if (t.kind != NestTerm::EdgeG0G0) t.merged_target_pos = target_pos_of(merged_tv);

    if (t.kind == NestTerm::EdgeG0G1) {
      auto [f1, f2] = edges[nest_edges[0]];
      int u = g.g.adjacency[f1];
      int g1v = g.genus[u] == 1 ? u : g.g.adjacency[f2];
      int glue_flag = g.genus[u] == 1 ? f1 : f2;
      t.g1_pos = (int)(std::lower_bound(src_g1.begin(), src_g1.end(), g1v) - src_g1.begin());
      auto vflags = g.g.flags_at(g1v);
      t.glue_letter = letter_of(vflags, glue_flag);
      t.g1_letter_map.assign(vflags.size(), 1);
      for (size_t i = 0; i < vflags.size(); ++i)
        if ((int)vflags[i] != glue_flag) t.g1_letter_map[i] = target_letter(vflags[i]);
    }

    if (t.kind == NestTerm::Polygon) {
      // deterministic walk of the cycle
      auto nvs = graph::nest_vertices(g, nest);
      std::map<int, std::vector<int>> incident;
      for (int eid : nest_edges) {
        incident[g.g.adjacency[edges[eid].first]].push_back(eid);
        incident[g.g.adjacency[edges[eid].second]].push_back(eid);
      }
      int start = nvs.front();
      std::vector<int> walk_vertices{start};
      std::vector<int> walk_edges;
      int cur = start, in_edge = -1;
      for (int step = 0; step < e; ++step) {
        int next_edge = -1;
        for (int cand : incident[cur])
          if (cand != in_edge && (next_edge == -1 || cand < next_edge)) next_edge = cand;
        walk_edges.push_back(next_edge);
        auto [f1, f2] = edges[next_edge];
        int a = g.g.adjacency[f1], b = g.g.adjacency[f2];
        cur = (a == cur) ? b : a;
        in_edge = next_edge;
        if (step + 1 < e) walk_vertices.push_back(cur);
      }
      std::vector<int> pos_in_walk(E, -1);
      for (size_t k = 0; k < walk_edges.size(); ++k) pos_in_walk[walk_edges[k]] = (int)k;
      std::vector<int> rel;
      for (int eid : fact.nest_order) rel.push_back(pos_in_walk[eid]);
      t.static_sign *= permutation_sign(rel);

      std::set<int> nest_flags;
      for (int eid : nest_edges) {
        nest_flags.insert(edges[eid].first);
        nest_flags.insert(edges[eid].second);
      }
      hlie::LabeledPolygon poly;
      for (int v : walk_vertices) {
        std::vector<int> legs;
        for (int f : g.g.flags_at(v))
          if (!nest_flags.count(f)) legs.push_back(f);
        poly.legs_at.push_back(std::move(legs));
      }
      GenusOneClass cls = hlie::massey_polygon(poly);
      if (cls.is_zero()) continue;
      // class letters = merged quotient letters; push through the witness
      auto mflags = q.g.flags_at(contraction.merged_vertex);
      auto tflags = target.g.flags_at(merged_tv);
      std::vector<int> lmap(mflags.size());
      for (size_t i = 0; i < mflags.size(); ++i)
        lmap[i] = letter_of(tflags, cf.witness.flag_map[mflags[i]]);
      t.polygon_class = hlie::relabel(cls, lmap, t.merged_arity);
      if (t.polygon_class.is_zero()) continue;
    }

    terms.push_back(std::move(t));
  }
  graphs_.at(gid).terms = std::move(terms);
  graphs_.at(gid).terms_built = true;
}

// ---------------------------------------------------------------------------

Chain& chain_add(Chain& c, const ChainKey& k, const Rational& v) {
  if (v == 0) return c;
  auto it = c.find(k);
  if (it == c.end()) {
    c.emplace(k, v);
  } else {
    it->second += v;
    if (it->second == 0) c.erase(it);
  }
  return c;
}

Chain Complex::apply_terms(const ChainKey& key, int max_nest_edges,
                           std::optional<int> target_gid, std::vector<TermReport>* reports,
                           int target_degree) {
  auto [gid, s, k] = key;
  ensure_terms(gid);
  const Summand* src = summand(gid, s);
  if (!src || k >= src->dim()) throw std::out_of_range("differential: bad chain key");
  const SparseVec& u = src->basis[k];

  Chain out;
  for (const auto& t : graphs_.at(gid).terms) {
    if (t.e > max_nest_edges) continue;
    if (target_gid && t.target_gid != *target_gid) continue;
    int s_target = s + t.e - 1;
    if (target_gid && target_degree >= 0 && s_target != target_degree) continue;
    const Summand* dst = summand(t.target_gid, s_target);
    if (!dst || dst->dim() == 0) {
      if (reports && target_gid) reports->push_back(TermReport{t.nest_edges, {}});
      continue;
    }

    SparseVec raw_out;
    for (const auto& [idx, c] : u) {
      const auto& shape = src->raw[idx];
      std::vector<GenusOneClass> per_pos(dst->genus1_vertices.size());
      for (const auto& [sp, tp, lmap] : t.carried) {
        int val = src->graph.g.valence(src->genus1_vertices[sp]);
        GenusOneClass cls = hlie::zero_class(val, (int)shape[sp].size());
        cls.coords.emplace(shape[sp], Rational(1));
        per_pos[tp] = hlie::relabel(cls, lmap, dst->graph.g.valence(dst->genus1_vertices[tp]));
      }
      switch (t.kind) {
        case NestTerm::EdgeG0G0:
          break;
        case NestTerm::Loop:
          per_pos[t.merged_target_pos] = hlie::h0_class(t.merged_arity);
          break;
        case NestTerm::Polygon:
          per_pos[t.merged_target_pos] = t.polygon_class;
          break;
        case NestTerm::EdgeG0G1: {
          int val = src->graph.g.valence(src->genus1_vertices[t.g1_pos]);
          GenusOneClass cls = hlie::zero_class(val, (int)shape[t.g1_pos].size());
          cls.coords.emplace(shape[t.g1_pos], Rational(1));
          per_pos[t.merged_target_pos] =
              hlie::compose_glue(cls, t.glue_letter, t.g1_letter_map, t.merged_arity);
          break;
        }
      }
      std::vector<std::vector<int>> out_shape(dst->genus1_vertices.size());
      tensor_expand(per_pos, 0, out_shape, c, dst->raw_index, raw_out);
    }
    std::vector<Rational> coords = dst->coords(raw_out);
    bool nonzero = false;
    for (auto& cc : coords) {
      cc *= t.static_sign;
      if (cc != 0) nonzero = true;
    }
    if (reports) reports->push_back(TermReport{t.nest_edges, coords});
    if (!nonzero) continue;
    for (size_t i = 0; i < coords.size(); ++i)
      chain_add(out, ChainKey{t.target_gid, s_target, (int)i}, coords[i]);
  }
  return out;
}

const Chain& Complex::differential_of(const ChainKey& key, int max_nest_edges) {
  auto cache_key = std::make_pair(key, max_nest_edges);
  auto it = diff_cache_.find(cache_key);
  if (it != diff_cache_.end()) return it->second;
  Chain c = apply_terms(key, max_nest_edges, std::nullopt, nullptr);
  return diff_cache_.emplace(cache_key, std::move(c)).first->second;
}

Chain Complex::differential(const Chain& c) {
  Chain out;
  for (const auto& [key, coeff] : c)
    for (const auto& [tk, tv] : differential_of(key, 1 << 20)) chain_add(out, tk, tv * coeff);
  return out;
}

Chain Complex::d1(const Chain& c) {
  Chain out;
  for (const auto& [key, coeff] : c)
    for (const auto& [tk, tv] : differential_of(key, 1)) chain_add(out, tk, tv * coeff);
  return out;
}

std::vector<Rational> Complex::project(const Chain& c, const ModularGraph& gamma,
                                       int internal_degree) {
  int gid = graph_id(gamma);
  const Summand* s = summand(gid, internal_degree);
  if (!s) return {};
  std::vector<Rational> out(s->dim(), Rational(0));
  for (const auto& [key, coeff] : c) {
    auto [kg, ks, kk] = key;
    if (kg == gid && ks == internal_degree) out[kk] += coeff;
  }
  return out;
}

std::vector<Complex::TermReport> Complex::differential_terms_to(const ChainKey& key,
                                                                int target_gid,
                                                                int target_degree) {
  std::vector<TermReport> reports;
  apply_terms(key, 1 << 20, target_gid, &reports, target_degree);
  return reports;
}

void Complex::build_all() {
  if (built_) return;
  graph::EnumOptions eopt;
  eopt.no_loops = opt_.no_loops;
  eopt.no_simple_loops = opt_.no_simple_loops;
  eopt.jobs = opt_.jobs;
  if (op_ == Operad::Com) eopt.all_genus_zero = true;
  if (op_ == Operad::HLie) eopt.max_vertex_genus = 1;
  auto gs = graph::enumerate_graphs(g_, n_, eopt);

  std::vector<int> gids;
  for (const auto& g : gs) gids.push_back(graph_id(g));

  std::vector<std::pair<int, int>> pairs;
  for (int gid : gids)
    for (int s : internal_degrees(gid)) pairs.push_back({gid, s});
  std::vector<std::optional<Summand>> built(pairs.size());
  parallel_for(pairs.size(), opt_.jobs, [&](size_t i) {
    built[i] = build_summand_impl(graphs_.at(pairs[i].first).graph,
                                  graphs_.at(pairs[i].first).cert, pairs[i].second, op_, 1);
  });
  for (size_t i = 0; i < pairs.size(); ++i)
    summands_[{pairs[i].first, pairs[i].second}] = std::move(built[i]);

  for (int gid : gids)
    for (int s : internal_degrees(gid)) {
      const Summand* sm = summand(gid, s);
      if (!sm) continue;
      for (int k = 0; k < sm->dim(); ++k) keys_.push_back(ChainKey{gid, s, k});
    }
  built_ = true;
}

std::optional<ChainKey> Complex::check_d_squared(int max_nest_edges) {
  build_all();
  // close the registry under contraction so both applications find their
  // terms and summands prepared
  size_t processed = 0;
  while (processed < graphs_.size()) {
    ensure_terms((int)processed);
    ++processed;
  }

  std::vector<ChainKey> all;
  for (int gid = 0; gid < (int)graphs_.size(); ++gid)
    for (int s : internal_degrees(gid)) {
      const Summand* sm = summand(gid, s);
      if (!sm) continue;
      for (int k = 0; k < sm->dim(); ++k) all.push_back(ChainKey{gid, s, k});
    }
  // prebuild every term-target summand so the parallel section is read-only
  for (int gid = 0; gid < (int)graphs_.size(); ++gid)
    for (int s : internal_degrees(gid))
      for (const auto& t : graphs_.at(gid).terms) summand(t.target_gid, s + t.e - 1);

  std::map<ChainKey, int> index;
  for (size_t i = 0; i < all.size(); ++i) index[all[i]] = (int)i;
  std::vector<Chain> diffs(all.size());
  parallel_for(all.size(), opt_.jobs, [&](size_t i) {
    diffs[i] = apply_terms(all[i], max_nest_edges, std::nullopt, nullptr);
  });

  for (size_t i = 0; i < all.size(); ++i) {
    Chain sq;
    for (const auto& [tk, tv] : diffs[i]) {
      auto it = index.find(tk);
      if (it == index.end()) throw std::logic_error("check_d_squared: missing key");
      for (const auto& [tk2, tv2] : diffs[it->second]) chain_add(sq, tk2, tv2 * tv);
    }
    if (!sq.empty()) return all[i];
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Chain omega(Complex& cx, int j) {
  ModularGraph w = graph::make_wheel(2 * j + 1);
  auto cf = graph::canonical_form(w);
  int gid = cx.graph_id(w);
  const Summand* s = cx.summand(gid, 0);
  if (!s || s->dim() != 1) throw std::runtime_error("omega: wheel summand is not 1-dimensional");
  orientation::Orientation std_o = orientation::Orientation::standard(w.edge_count());
  int sign = orientation::iso_sign(cf.witness, w, cx.graph_of(gid), std_o, std_o);
  Chain c;
  chain_add(c, ChainKey{gid, 0, 0}, Rational(sign));
  return c;
}

Chain beta(Complex& cx, int j) {
  ModularGraph th = graph::make_theta(2 * j - 2);
  auto cf = graph::canonical_form(th);
  int gid = cx.graph_id(th);
  const Summand* s = cx.summand(gid, 2 * j);
  if (!s) throw std::runtime_error("beta: theta summand is empty");

  // x on the letters of the raw theta's genus-1 vertex: non-loop flags first
  // (ascending), then the loop pairs, matching the construction of x
  GenusOneClass x = hlie::x_class(j);
  const ModularGraph& target = cx.graph_of(gid);
  auto vflags = th.g.flags_at(1);
  int tv = cf.witness.vertex_map[1];
  auto tflags = target.g.flags_at(tv);
  std::vector<int> lmap(vflags.size());
  for (size_t i = 0; i < vflags.size(); ++i)
    lmap[i] = letter_of(tflags, cf.witness.flag_map[vflags[i]]);
  GenusOneClass pushed = hlie::relabel(x, lmap, (int)tflags.size());

  orientation::Orientation std_o = orientation::Orientation::standard(th.edge_count());
  int sign = orientation::iso_sign(cf.witness, th, target, std_o, std_o);

  linalg::SparseVec raw;
  for (const auto& [wedge, v] : pushed.coords) {
    std::vector<std::vector<int>> shape{wedge};
    auto it = s->raw_index.find(shape);
    if (it == s->raw_index.end()) throw std::logic_error("beta: shape missing");
    raw.emplace(it->second, v * sign);
  }
  auto coords = s->coords(raw);
  Chain c;
  for (size_t i = 0; i < coords.size(); ++i)
    chain_add(c, ChainKey{gid, 2 * j, (int)i}, coords[i]);
  return c;
}

int theta_summand_dimension(Complex& cx, int j) {
  ModularGraph th = graph::make_theta(2 * j - 2);
  int gid = cx.graph_id(th);
  const Summand* s = cx.summand(gid, 2 * j);
  return s ? s->dim() : 0;
}

Gc2Slice gc2_slice(Complex& cx, int min_edges, int max_edges) {
  if (cx.operad() != Operad::Com || !cx.options().no_loops)
    throw std::invalid_argument("gc2_slice: requires a loopless Com complex");
  cx.build_all();
  Gc2Slice out;
  out.genus = cx.genus();
  out.min_edges = min_edges;
  int width = max_edges - min_edges + 1;
  out.bases.assign(width, {});
  std::map<ChainKey, std::pair<int, int>> position;
  for (const auto& key : cx.all_keys()) {
    auto [gid, s, k] = key;
    int e = cx.graph_of(gid).edge_count();
    if (e < min_edges || e > max_edges) continue;
    position[key] = {e - min_edges, (int)out.bases[e - min_edges].size()};
    out.bases[e - min_edges].push_back(key);
  }
  out.slice.lo = min_edges;
  for (int i = 0; i < width; ++i) out.slice.dims.push_back((int)out.bases[i].size());
  for (int i = 0; i + 1 < width; ++i) {
    linalg::RationalMatrix m((int)out.bases[i].size(), (int)out.bases[i + 1].size());
    for (int col = 0; col < (int)out.bases[i + 1].size(); ++col) {
      const Chain& d = cx.differential_of(out.bases[i + 1][col], 1 << 20);
      for (const auto& [tk, tv] : d) {
        auto it = position.find(tk);
        if (it == position.end()) continue;  // loop-carrying target: quotient complex
        if (it->second.first != i) throw std::logic_error("gc2_slice: degree leak");
        m.add(it->second.second, col, tv);
      }
    }
    out.slice.bounds.push_back(std::move(m));
  }
  return out;
}

}  // namespace gcx::feynman
