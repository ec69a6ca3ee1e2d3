#include "gcx/hlie.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace gcx::hlie {

GenusOneClass& GenusOneClass::operator*=(const Rational& c) {
  if (c == 0) {
    coords.clear();
    return *this;
  }
  for (auto& [k, v] : coords) v *= c;
  return *this;
}

GenusOneClass& GenusOneClass::operator+=(const GenusOneClass& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    arity = o.arity;
    degree = o.degree;
  }
  if (arity != o.arity || degree != o.degree)
    throw std::invalid_argument("GenusOneClass: adding incompatible classes");
  for (const auto& [k, v] : o.coords) {
    auto it = coords.find(k);
    if (it == coords.end()) {
      coords.emplace(k, v);
    } else {
      it->second += v;
      if (it->second == 0) coords.erase(it);
    }
  }
  return *this;
}

std::string GenusOneClass::serialize() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : coords) {
    if (!first) os << "; ";
    first = false;
    os << "{";
    for (size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
    os << "}: " << v.str();
  }
  return os.str();
}

int model_dimension(int n, int i) {
  if (i < 0 || i % 2 != 0 || i > n - 1) return 0;
  long long dim = 1;
  for (int t = 0; t < i; ++t) dim = dim * (n - 1 - t) / (t + 1);
  return (int)dim;
}

GenusOneClass zero_class(int arity, int degree) { return GenusOneClass{arity, degree, {}}; }

// Insert a letter into a sorted wedge; returns 0 on repeats, else the sign of
// moving the letter into place.
static int wedge_insert(std::vector<int>& s, int letter) {
  auto it = std::lower_bound(s.begin(), s.end(), letter);
  if (it != s.end() && *it == letter) return 0;
  int pos = (int)(it - s.begin());
  s.insert(it, letter);
  return (s.size() - 1 - pos) % 2 == 0 ? 1 : -1;
}

static void add_term(GenusOneClass& c, const std::vector<int>& key, const Rational& v) {
  if (v == 0) return;
  auto it = c.coords.find(key);
  if (it == c.coords.end()) {
    c.coords.emplace(key, v);
  } else {
    it->second += v;
    if (it->second == 0) c.coords.erase(it);
  }
}

// Rewrites every wedge containing `q` via e_q = -(sum of other letters).
static GenusOneClass substitute_letter(const GenusOneClass& c, int q) {
  GenusOneClass out = zero_class(c.arity, c.degree);
  for (const auto& [key, v] : c.coords) {
    auto it = std::lower_bound(key.begin(), key.end(), q);
    if (it == key.end() || *it != q) {
      add_term(out, key, v);
      continue;
    }
    std::vector<int> rest(key.begin(), it);
    rest.insert(rest.end(), it + 1, key.end());
    int pos_sign = (key.end() - it - 1) % 2 == 0 ? 1 : -1;  // move q to the back
    for (int l = 1; l <= c.arity; ++l) {
      if (l == q) continue;
      std::vector<int> s = rest;
      int ins = wedge_insert(s, l);
      if (ins == 0) continue;
      // e_q at the back replaced by -e_l, then e_l sorted in
      add_term(out, s, v * Rational(-pos_sign * ins));
    }
  }
  return out;
}

GenusOneClass eliminate_letter(const GenusOneClass& c, int q) { return substitute_letter(c, q); }

static GenusOneClass normalize(GenusOneClass c) {
  bool dirty = false;
  for (const auto& [key, v] : c.coords)
    if (!key.empty() && key.back() == c.arity) dirty = true;
  if (!dirty) return c;
  return substitute_letter(c, c.arity);
}

GenusOneClass wedge_class(int arity, const std::vector<int>& letters) {
  GenusOneClass c = zero_class(arity, (int)letters.size());
  std::vector<int> s;
  int sign = 1;
  for (int l : letters) {
    if (l < 1 || l > arity) throw std::invalid_argument("wedge_class: letter out of range");
    int ins = wedge_insert(s, l);
    if (ins == 0) return c;
    sign *= ins;
  }
  c.coords.emplace(s, Rational(sign));
  return normalize(std::move(c));
}

GenusOneClass h0_class(int arity) {
  GenusOneClass c = zero_class(arity, 0);
  c.coords.emplace(std::vector<int>{}, Rational(1));
  return c;
}

GenusOneClass alpha(int j) {
  std::vector<int> letters(2 * j);
  for (int i = 0; i < 2 * j; ++i) letters[i] = i + 1;
  return wedge_class(2 * j + 1, letters);
}

GenusOneClass relabel(const GenusOneClass& c, const std::vector<int>& letter_map, int new_arity) {
  GenusOneClass out = zero_class(new_arity, c.degree);
  for (const auto& [key, v] : c.coords) {
    std::vector<int> s;
    int sign = 1;
    bool dead = false;
    for (int l : key) {
      int nl = letter_map[l - 1];
      if (nl < 1 || nl > new_arity) throw std::invalid_argument("relabel: bad letter map");
      int ins = wedge_insert(s, nl);
      if (ins == 0) {
        dead = true;
        break;
      }
      sign *= ins;
    }
    if (!dead) add_term(out, s, v * sign);
  }
  return normalize(std::move(out));
}

GenusOneClass act(const GenusOneClass& c, const std::vector<int>& perm) {
  if ((int)perm.size() != c.arity) throw std::invalid_argument("act: permutation size mismatch");
  return relabel(c, perm, c.arity);
}

GenusOneClass compose_plug(const GenusOneClass& c, int q, int t) {
  // t = 1 is the formal identity gluing (used only by the relation checks;
  // no (0,2) vertex ever appears in a complex)
  if (t < 1) throw std::invalid_argument("compose_plug: t >= 1 required");
  GenusOneClass freed = eliminate_letter(c, q);
  std::vector<int> map(c.arity);
  for (int l = 1; l <= c.arity; ++l) map[l - 1] = l < q ? l : l + t - 1;
  return relabel(freed, map, c.arity + t - 1);
}

GenusOneClass compose_glue(const GenusOneClass& c, int glue, const std::vector<int>& letter_map,
                           int new_arity) {
  GenusOneClass freed = eliminate_letter(c, glue);
  return relabel(freed, letter_map, new_arity);
}

GenusOneClass x_class(int j) {
  GenusOneClass c = alpha(j);
  for (int q = 2 * j + 1; q >= 4; --q) c = compose_plug(c, q, 2);
  return c;
}

// ---------------------------------------------------------------------------

OperadElement com_element(int arity, const Rational& c) {
  OperadElement e;
  e.genus = 0;
  e.arity = arity;
  e.scalar = c;
  return e;
}

OperadElement genus_one_element(GenusOneClass c) {
  OperadElement e;
  e.genus = 1;
  e.arity = c.arity;
  e.cls = std::move(c);
  return e;
}

OperadElement compose_edge(const OperadElement& a, int qa, const OperadElement& b, int qb) {
  if (qa < 1 || qa > a.arity || qb < 1 || qb > b.arity)
    throw std::invalid_argument("compose_edge: slot out of range");
  int arity = a.arity + b.arity - 2;
  if (a.genus + b.genus >= 2) {
    OperadElement z;
    z.genus = 1;
    z.arity = arity;
    z.cls = zero_class(arity, a.internal_degree() + b.internal_degree());
    return z;
  }
  if (a.genus == 0 && b.genus == 0) return com_element(arity, a.scalar * b.scalar);

  // one side genus 1: letters of the genus-1 side below its glue slot keep
  // their names; the genus-0 letters fill the gap; higher letters shift.
  const OperadElement& g1 = a.genus == 1 ? a : b;
  const OperadElement& g0 = a.genus == 1 ? b : a;
  int q1 = a.genus == 1 ? qa : qb;
  int t = g0.arity - 1;
  GenusOneClass c = compose_plug(g1.cls, q1, t);
  c *= g0.scalar;
  return genus_one_element(std::move(c));
}

OperadElement contract_loop(const OperadElement& a, int q1, int q2) {
  if (q1 == q2 || q1 < 1 || q2 < 1 || q1 > a.arity || q2 > a.arity)
    throw std::invalid_argument("contract_loop: bad slots");
  int arity = a.arity - 2;
  if (a.genus >= 1) {
    OperadElement z;
    z.genus = 1;
    z.arity = arity;
    z.cls = zero_class(arity, a.internal_degree());
    return z;
  }
  GenusOneClass c = h0_class(arity);
  c *= a.scalar;
  return genus_one_element(std::move(c));
}

// ---------------------------------------------------------------------------
// Massey products.

std::vector<int> LabeledPolygon::all_letters() const {
  std::vector<int> out;
  for (const auto& ls : legs_at) out.insert(out.end(), ls.begin(), ls.end());
  std::sort(out.begin(), out.end());
  return out;
}

GenusOneClass massey_polygon(const LabeledPolygon& p) {
  int len = p.length();
  std::vector<int> letters = p.all_letters();
  int N = (int)letters.size();
  auto rank = [&](int l) {
    return (int)(std::lower_bound(letters.begin(), letters.end(), l) - letters.begin()) + 1;
  };
  if (len % 2 == 0 || len < 3) return zero_class(N, len - 1);

  // fat vertex: blow it up, contract recursively, then glue its corolla back
  for (int k = 0; k < len; ++k) {
    if ((int)p.legs_at[k].size() <= 1) continue;
    int fresh = letters.back() + 1;
    LabeledPolygon blown = p;
    blown.legs_at[k] = {fresh};
    GenusOneClass inner = massey_polygon(blown);  // on blown letter ranks
    // letters of the blown polygon, sorted; fresh is last
    std::vector<int> blown_letters;
    for (const auto& ls : blown.legs_at)
      blown_letters.insert(blown_letters.end(), ls.begin(), ls.end());
    std::sort(blown_letters.begin(), blown_letters.end());
    int glue_rank = (int)blown_letters.size();  // fresh is the largest
    std::vector<int> map(blown_letters.size());
    for (size_t i = 0; i < blown_letters.size(); ++i)
      map[i] = blown_letters[i] == fresh ? 0 : rank(blown_letters[i]);
    GenusOneClass freed = eliminate_letter(inner, glue_rank);
    map[glue_rank - 1] = 1;  // placeholder; glue letter no longer occurs
    return relabel(freed, map, N);
  }

  // trivalent base case: legs in walk order give the relabeled top wedge
  std::vector<int> walk(len);
  for (int k = 0; k < len; ++k) walk[k] = rank(p.legs_at[k][0]);
  std::vector<int> top(walk.begin(), walk.end() - 1);
  return wedge_class(N, top);
}

// ---------------------------------------------------------------------------
// The graph-level dispatch.

namespace {

int rank_in(const std::vector<int>& sorted, int value) {
  return (int)(std::lower_bound(sorted.begin(), sorted.end(), value) - sorted.begin()) + 1;
}

OperadElement zero_output(const graph::ModularGraph& g,
                          const std::vector<OperadElement>& labels) {
  OperadElement z;
  z.genus = std::min(g.total_genus(), 1);
  z.arity = g.n_legs();
  int s = 0;
  for (const auto& l : labels) s += l.internal_degree();
  if (z.genus == 1) z.cls = zero_class(z.arity, s + g.edge_count() - 1);
  return z;
}

// relabel an element's letters through flag -> output letter
OperadElement relabel_element(const OperadElement& e, const std::vector<int>& letter_map,
                              int arity) {
  if (e.genus == 0) {
    OperadElement out = e;
    out.arity = arity;
    return out;
  }
  return genus_one_element(relabel(e.cls, letter_map, arity));
}

}  // namespace

OperadElement mu(const graph::ModularGraph& g, const std::vector<OperadElement>& labels,
                 const orientation::Orientation& o) {
  g.validate();
  if ((int)labels.size() != g.g.vertex_count)
    throw std::invalid_argument("mu: one label per vertex required");
  int n = g.n_legs();
  int E = g.edge_count();
  if (g.total_genus() >= 2) return zero_output(g, labels);
  for (int v = 0; v < g.g.vertex_count; ++v)
    if (labels[v].is_zero()) return zero_output(g, labels);

  // output letter of a surviving flag = its leg label
  auto leg_letter = [&](int flag) {
    for (int i = 0; i < n; ++i)
      if (g.leg_labels[i] == flag) return i + 1;
    throw std::logic_error("mu: flag is not a leg");
  };

  if (E == 1) {
    auto [f1, f2] = g.g.edges()[0];
    int u = g.g.adjacency[f1], w = g.g.adjacency[f2];
    if (u == w) {
      auto flags = g.g.flags_at(u);
      OperadElement inner = contract_loop(labels[u], rank_in(flags, std::min(f1, f2)),
                                          rank_in(flags, std::max(f1, f2)));
      if (inner.is_zero()) return zero_output(g, labels);
      std::vector<int> map;
      for (int f : flags)
        if (f != f1 && f != f2) map.push_back(leg_letter(f));
      return relabel_element(inner, map, n);
    }
    auto uf = g.g.flags_at(u), wf = g.g.flags_at(w);
    OperadElement inner =
        compose_edge(labels[u], rank_in(uf, f1), labels[w], rank_in(wf, f2));
    if (inner.is_zero()) return zero_output(g, labels);
    // output letters: w's flags below the glue, then u's flags, then w's above
    std::vector<int> map;
    for (int f : wf)
      if (f < f2) map.push_back(leg_letter(f));
    for (int f : uf)
      if (f != f1) map.push_back(leg_letter(f));
    for (int f : wf)
      if (f > f2) map.push_back(leg_letter(f));
    return relabel_element(inner, map, n);
  }

  // multi-edge: only an odd genus-0 polygon with commutative labels is nonzero
  graph::Nest all;
  for (int e = 0; e < E; ++e) all.edge_indices.push_back(e);
  if (E < 3 || E % 2 == 0 || !graph::nest_is_polygon(g, all)) return zero_output(g, labels);
  Rational scale = 1;
  for (int v = 0; v < g.g.vertex_count; ++v) {
    if (g.genus[v] != 0 || labels[v].genus != 0) return zero_output(g, labels);
    scale *= labels[v].scalar;
  }
  // deterministic walk, as in the differential engine
  auto edges = g.g.edges();
  std::map<int, std::vector<int>> incident;
  for (int e = 0; e < E; ++e) {
    incident[g.g.adjacency[edges[e].first]].push_back(e);
    incident[g.g.adjacency[edges[e].second]].push_back(e);
  }
  int start = incident.begin()->first;
  std::vector<int> walk_vertices{start}, walk_edges;
  int cur = start, in_edge = -1;
  for (int step = 0; step < E; ++step) {
    int next_edge = -1;
    for (int cand : incident[cur])
      if (cand != in_edge && (next_edge == -1 || cand < next_edge)) next_edge = cand;
    walk_edges.push_back(next_edge);
    auto [a, b] = edges[next_edge];
    int av = g.g.adjacency[a], bv = g.g.adjacency[b];
    cur = (av == cur) ? bv : av;
    in_edge = next_edge;
    if (step + 1 < E) walk_vertices.push_back(cur);
  }
  LabeledPolygon poly;
  for (int v : walk_vertices) {
    std::vector<int> legs;
    for (int f : g.g.flags_at(v))
      if (g.g.involution[f] == f) legs.push_back(f);
    poly.legs_at.push_back(std::move(legs));
  }
  GenusOneClass cls = massey_polygon(poly);
  if (cls.is_zero()) return zero_output(g, labels);
  // sign of o against the walk order
  std::vector<int> pos(E);
  for (int k = 0; k < E; ++k) pos[walk_edges[k]] = k;
  std::vector<int> rel;
  for (int e : o.edge_order) rel.push_back(pos[e]);
  cls *= scale * permutation_sign(rel);
  // letters of cls are ranked leg flags; map to leg labels
  std::vector<int> leg_flags;
  for (const auto& ls : poly.legs_at) leg_flags.insert(leg_flags.end(), ls.begin(), ls.end());
  std::sort(leg_flags.begin(), leg_flags.end());
  std::vector<int> map;
  for (int f : leg_flags) map.push_back(leg_letter(f));
  return genus_one_element(relabel(cls, map, n));
}

OperadElement mu_differential_condition(const graph::ModularGraph& g,
                                        const std::vector<OperadElement>& labels) {
  orientation::Orientation o = orientation::Orientation::standard(g.edge_count());
  OperadElement acc = zero_output(g, labels);
  for (const auto& nest : graph::enumerate_nests(g)) {
    auto fact = orientation::contraction_orientation(o, nest.edge_indices);
    auto contraction = graph::contract_nest(g, nest);
    auto hat = graph::nest_hat(g, nest);
    auto nvs = graph::nest_vertices(g, nest);

    // labels of the nest-hat: original labels with letters re-ranked; the
    // hat keeps the original flag order, so ranks are unchanged
    std::vector<OperadElement> hat_labels;
    for (int v : nvs) hat_labels.push_back(labels[v]);
    orientation::Orientation o_nest;
    o_nest.degree = (int)nest.edge_indices.size();
    // nest edges renumbered by ascending first flag keep their relative order
    std::map<int, int> nest_rank;
    for (size_t i = 0; i < nest.edge_indices.size(); ++i)
      nest_rank[nest.edge_indices[i]] = (int)i;
    for (int e : fact.nest_order) o_nest.edge_order.push_back(nest_rank[e]);
    OperadElement inner = mu(hat, hat_labels, o_nest);

    // inner's letters are the hat's leg labels = merged-vertex letter order
    if (!inner.is_zero()) {
      const auto& q = contraction.quotient;
      std::vector<OperadElement> qlabels(q.g.vertex_count);
      for (int v = 0; v < g.g.vertex_count; ++v) {
        if (std::binary_search(nvs.begin(), nvs.end(), v)) continue;
        qlabels[contraction.vertex_map[v]] = labels[v];
      }
      qlabels[contraction.merged_vertex] = inner;
      orientation::Orientation o_quot;
      o_quot.degree = (int)fact.quotient_order.size();
      auto qedges = q.g.edges();
      std::map<int, int> q_index;
      for (size_t k = 0; k < qedges.size(); ++k) q_index[qedges[k].first] = (int)k;
      auto edges = g.g.edges();
      for (int e : fact.quotient_order) {
        int qf = std::min(contraction.flag_map[edges[e].first],
                          contraction.flag_map[edges[e].second]);
        o_quot.edge_order.push_back(q_index.at(qf));
      }
      OperadElement outer = mu(q, qlabels, o_quot);
      if (!outer.is_zero()) {
        outer.scalar *= fact.sign;
        outer.cls *= fact.sign;
        if (acc.genus == 0) {
          acc.scalar += outer.scalar;
        } else {
          acc.cls += outer.cls;
        }
      }
    }
  }
  return acc;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<int>> subsets_lex(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if ((int)cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

linalg::RationalMatrix relation_basis(int n, int i) {
  auto basis = subsets_lex(n, i);
  std::map<std::vector<int>, int> index;
  for (size_t t = 0; t < basis.size(); ++t) index[basis[t]] = (int)t;
  auto tails = subsets_lex(n, i - 1);
  linalg::RationalMatrix rel(i >= 1 ? (int)tails.size() : 0, (int)basis.size());
  if (i < 1) return rel;
  for (size_t r = 0; r < tails.size(); ++r) {
    for (int x = 1; x <= n; ++x) {
      std::vector<int> s = tails[r];
      int sign = wedge_insert(s, x);
      if (sign == 0) continue;
      rel.add((int)r, index[s], Rational(sign));
    }
  }
  std::vector<linalg::SparseVec> rows;
  for (int r = 0; r < rel.rows(); ++r)
    if (!rel.row(r).empty()) rows.push_back(rel.row(r));
  auto [reduced, pivots] = linalg::rref_rows(std::move(rows));
  linalg::RationalMatrix out((int)reduced.size(), (int)basis.size());
  for (size_t r = 0; r < reduced.size(); ++r)
    for (const auto& [c, v] : reduced[r]) out.set((int)r, c, v);
  return out;
}

}  // namespace gcx::hlie
