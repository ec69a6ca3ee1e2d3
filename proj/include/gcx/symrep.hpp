#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gcx/rational.hpp"

namespace gcx::symrep {

// A partition is a weakly decreasing vector of positive parts.
using Partition = std::vector<int>;

// Character of an S_n representation: cycle type -> integer value.
using CharacterVector = std::map<Partition, long long>;

bool is_partition(const Partition& p);
int weight(const Partition& p);

// All partitions of n, in a fixed deterministic order (reverse lexicographic).
std::vector<Partition> partitions_of(int n);

// |conjugacy class of cycle type mu| in S_n.
BigInt class_size(const Partition& mu, int n);

// Murnaghan-Nakayama: the value chi_lambda(mu). Memoized internally.
long long mn_character(const Partition& lambda, const Partition& mu);

// Full character of the irreducible V_p.
CharacterVector character(const Partition& p);

long long dimension(const Partition& p);

// dim V_{x,1^y} = C(x+y-1, y); used as an independent oracle in tests.
BigInt hook_dimension(int x, int y);

// <chi1, chi2> over S_n, exact.
BigInt inner_product(const CharacterVector& c1, const CharacterVector& c2, int n);

// Littlewood-Richardson coefficient c^p_{alpha,beta} by direct enumeration of
// LR skew tableaux of shape p/alpha and content beta.
long long lr_coefficient(const Partition& p, const Partition& alpha, const Partition& beta);

// Decomposition of Res_{S_a x S_b} V_p as a multiset of (alpha, beta) with
// multiplicities, via the LR rule.
std::map<std::pair<Partition, Partition>, long long> lr_restrict(const Partition& p, int a, int b);

// Same decomposition computed by character inner products; an independent
// code path kept for cross-checking.
long long restrict_multiplicity_by_characters(const Partition& p, const Partition& alpha,
                                              const Partition& beta);

// An element of S_2 wr S_q, embedded in S_{2q} on the blocks
// {1,2},{3,4},...,{2q-1,2q}: tau permutes blocks, then alpha_i flips within
// block tau(i). L_q sends the element to sgn(tau).
struct WreathElement {
  std::vector<int> block_perm;  // tau, 0-based, size q
  uint32_t flips;               // bit i set = flip within block tau(i)... (see embed)

  std::vector<int> embed(int q) const;  // permutation of {0..2q-1}
  int sign_L() const;                   // sgn(tau)
};

std::vector<WreathElement> wreath_elements(int q);

// Cycle type of a permutation given in one-line form (0-based).
Partition cycle_type(const std::vector<int>& perm);

// Multiplicity of L_q in Res_{S_2 wr S_q}^{S_2q}(V_hook), hook = (x,1^y),
// x + y = 2q. Computed by an explicit character sum over all 2^q q! elements.
long long wreath_hook_multiplicity(const Partition& hook, int q);

// Multiplicity of L_q ⊠ V_beta in the restriction of the hook V_{r,1^n}
// (a partition of n+r) to (S_2 wr S_q) x S_{n+r-2q}.
long long full_restriction_multiplicity(const Partition& hook, int q, const Partition& beta);

// Multiplicity of the Z_{2n} character W_i (generator acts by e^{i*pi/n}
// raised to i) in the restriction of V_p, p a partition of 2n. Exact integer
// arithmetic via Ramanujan sums; no floating point.
long long cyclic_multiplicity(const Partition& p, int i);

// Ramanujan sum c_m(x): sum of x-th powers of the primitive m-th roots of
// unity, as an exact integer.
long long ramanujan_sum(int m, int x);

// Dimension of the span of the S_{t+2j}-orbit of
//   z = (id + sum_i (i,t+1)) (m_t ⊗ alpha_{2j+1})
// inside the wedge-coordinate induced module. Equals dim V_{t+1,1^{2j-1}}.
int relation_span_dimension(int t, int j);

// Trace of each cycle type on that orbit span (the span is an S_n
// subrepresentation); used to confirm its isomorphism type.
CharacterVector relation_span_character(int t, int j);

}  // namespace gcx::symrep
