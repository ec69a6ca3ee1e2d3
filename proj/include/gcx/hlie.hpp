#pragma once

#include <map>
#include <vector>

#include "gcx/graph.hpp"
#include "gcx/linalg.hpp"
#include "gcx/orientation.hpp"
#include "gcx/rational.hpp"

namespace gcx::hlie {

// A degree-i class of the genus-1 operad space at arity n, realized as the
// i-th exterior power of the n-letter permutation representation modulo the
// all-ones vector. Wedge coordinates are kept in normal form: the last letter
// n is eliminated via e_n = -(e_1 + ... + e_{n-1}), so the stored subsets
// range over {1..n-1} and the space has dimension C(n-1, i).
struct GenusOneClass {
  int arity = 0;
  int degree = 0;
  std::map<std::vector<int>, Rational> coords;  // sorted subsets of {1..n-1}

  bool is_zero() const { return coords.empty(); }
  bool operator==(const GenusOneClass& o) const = default;

  GenusOneClass& operator*=(const Rational& c);
  GenusOneClass& operator+=(const GenusOneClass& o);

  // Sorted "subset: rational" serialization of the reduced normal form.
  std::string serialize() const;
};

int model_dimension(int n, int i);  // C(n-1, i) for even 0 <= i <= n-1, else 0

GenusOneClass zero_class(int arity, int degree);

// Class of a single wedge (letters need not be sorted; sorting contributes
// the sign, repeated letters give zero). Normalizes away letter `arity`.
GenusOneClass wedge_class(int arity, const std::vector<int>& letters);

// The degree-0 generator (empty wedge) at the given arity.
GenusOneClass h0_class(int arity);

// alpha_{2j+1}: the top-wedge generator [1 ∧ ... ∧ 2j] at arity 2j+1.
GenusOneClass alpha(int j);

// Letter substitution e_q -> -(sum of all other letters); the result is
// supported on q-free wedges. This is the normal-form step behind every
// one-edge composition.
GenusOneClass eliminate_letter(const GenusOneClass& c, int q);

// Relabel letters through an injective map into {1..new_arity}. letter_map
// is 1-based: letter l goes to letter_map[l-1]; entries for letters absent
// from every wedge are still required (use the natural correspondence).
GenusOneClass relabel(const GenusOneClass& c, const std::vector<int>& letter_map, int new_arity);

// Apply a permutation of {1..n} (the S_n action).
GenusOneClass act(const GenusOneClass& c, const std::vector<int>& perm);

// Glue the arity-(t+1) commutative corolla into letter q with the standard
// insertion relabeling: letters < q keep their names, the t new letters take
// q..q+t-1, letters > q shift up by t-1.
GenusOneClass compose_plug(const GenusOneClass& c, int q, int t);

// General one-edge gluing used by the differential: eliminate the glue
// letter, then push the surviving letters through an explicit injection.
// letter_map[l-1] gives the target letter of l (ignored at l == glue).
GenusOneClass compose_glue(const GenusOneClass& c, int glue, const std::vector<int>& letter_map,
                           int new_arity);

// x_{2j+1} = (...((alpha ∘_{2j+1} m_2) ∘_{2j} m_2)...) ∘_4 m_2, at arity 4j-1.
GenusOneClass x_class(int j);

// ---------------------------------------------------------------------------
// Operad elements and the one-edge / Massey operations (the spec surface used
// by tests and the CLI; the differential engine calls the primitives above).

// Genus-0 spaces are one-dimensional (a scalar multiple of the commutative
// product of the right arity); genus-1 spaces are GenusOneClass; everything
// of genus >= 2 is zero.
struct OperadElement {
  int genus = 0;  // 0 or 1; arity counts all flags of the vertex
  int arity = 0;
  Rational scalar = 0;   // genus-0 content
  GenusOneClass cls;     // genus-1 content

  bool is_zero() const { return genus == 0 ? scalar == 0 : cls.is_zero(); }
  int internal_degree() const { return genus == 0 ? 0 : cls.degree; }
};

OperadElement com_element(int arity, const Rational& c = 1);
OperadElement genus_one_element(GenusOneClass c);

// Glue slot qa of a to slot qb of b. Result letters: b's letters below qb,
// then a's surviving letters in order, then b's letters above qb. Genus adds;
// total genus >= 2 gives zero.
OperadElement compose_edge(const OperadElement& a, int qa, const OperadElement& b, int qb);

// Contract a loop joining slots q1 < q2 of a single element (genus goes up
// by one; on a genus-0 element this lands on the degree-0 genus-1 generator,
// normalized so the commutative product maps to the generator itself).
OperadElement contract_loop(const OperadElement& a, int q1, int q2);

// ---------------------------------------------------------------------------
// Massey products on odd polygons.

// A polygon with external letter ids: vertex k carries the (sorted) letters
// legs_at[k]; edge k joins vertices k and k+1 (mod size). The reference edge
// order for the sign is (edge 0, edge 1, ...).
struct LabeledPolygon {
  std::vector<std::vector<int>> legs_at;

  int length() const { return (int)legs_at.size(); }
  std::vector<int> all_letters() const;  // sorted union
};

// mu of the polygon against its reference edge order, as a class on the
// letters {1..N} ranked by ascending external id. Even length returns zero.
// Non-trivalent vertices are reduced by blow-up; the result is independent
// of the reduction order and of the cyclic starting point.
GenusOneClass massey_polygon(const LabeledPolygon& p);

// The operation attached to a whole modular graph: one-edge graphs give the
// strict compositions, odd genus-0 polygons the Massey product, everything
// else zero. labels[v] uses letters ranked by v's ascending flag ids; the
// output letters are the leg labels 1..n.
OperadElement mu(const graph::ModularGraph& g, const std::vector<OperadElement>& labels,
                 const orientation::Orientation& o);

// The sum over all nests of mu(quotient) ∘ mu(nest-hat), which must vanish
// for every admissible graph; exposed so tests can check the identity
// directly against the public operations.
OperadElement mu_differential_condition(const graph::ModularGraph& g,
                                        const std::vector<OperadElement>& labels);

// ---------------------------------------------------------------------------
// Relation subspace in full wedge coordinates (before normal-form reduction):
// the span of u ∧ Λ^{i-1}, u the all-ones vector. Rows are returned in
// reduced echelon form over the lex-ordered i-subsets of {1..n}.
linalg::RationalMatrix relation_basis(int n, int i);

// Lex rank utilities for i-subsets of {1..n} (shared with the relation and
// matrix code).
std::vector<std::vector<int>> subsets_lex(int n, int k);

}  // namespace gcx::hlie
