#include "gcx/symrep.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "gcx/linalg.hpp"

namespace gcx::symrep {

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

static void gen_partitions(int n, int maxpart, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, maxpart); k >= 1; --k) {
    cur.push_back(k);
    gen_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(n, n, cur, out);
  return out;
}

static BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

BigInt class_size(const Partition& mu, int n) {
  if (weight(mu) != n) throw std::invalid_argument("class_size: wrong weight");
  BigInt z = 1;
  std::map<int, int> mult;
  for (int part : mu) mult[part]++;
  for (const auto& [part, m] : mult) {
    for (int i = 0; i < m; ++i) z *= part;
    z *= factorial(m);
  }
  return factorial(n) / z;
}

// Border-strip removal on beta-sets. A strip of length L removed from lambda
// corresponds to replacing some b in the beta-set by b-L; the height of the
// strip is the number of beta values strictly between.
static Partition beta_to_partition(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  int m = (int)beta.size();
  Partition p;
  for (int i = 0; i < m; ++i) {
    int part = beta[i] - (m - 1 - i);
    if (part > 0) p.push_back(part);
  }
  return p;
}

static long long mn_rec(const Partition& lambda, const Partition& mu, size_t idx,
                        std::map<std::pair<Partition, size_t>, long long>& memo) {
  if (idx == mu.size()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, idx);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  int L = mu[idx];
  int m = (int)lambda.size();
  std::vector<int> beta(m);
  for (int i = 0; i < m; ++i) beta[i] = lambda[i] + (m - 1 - i);

  long long total = 0;
  for (int i = 0; i < m; ++i) {
    int target = beta[i] - L;
    if (target < 0) continue;
    bool occupied = false;
    int height = 0;
    for (int k = 0; k < m; ++k) {
      if (k == i) continue;
      if (beta[k] == target) occupied = true;
      if (beta[k] > target && beta[k] < beta[i]) height++;
    }
    if (occupied) continue;
    std::vector<int> nb = beta;
    nb[i] = target;
    long long sub = mn_rec(beta_to_partition(nb), mu, idx + 1, memo);
    total += (height % 2 == 0 ? sub : -sub);
  }
  memo[key] = total;
  return total;
}

long long mn_character(const Partition& lambda, const Partition& mu) {
  if (weight(lambda) != weight(mu)) throw std::invalid_argument("mn_character: weights differ");
  static std::map<std::pair<Partition, Partition>, long long> memo;
  static std::mutex memo_mutex;
  auto key = std::make_pair(lambda, mu);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  std::map<std::pair<Partition, size_t>, long long> local;
  long long val = mn_rec(lambda, mu, 0, local);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo[key] = val;
  }
  return val;
}

CharacterVector character(const Partition& p) {
  CharacterVector cv;
  for (const auto& mu : partitions_of(weight(p))) cv[mu] = mn_character(p, mu);
  return cv;
}

long long dimension(const Partition& p) {
  Partition ones(weight(p), 1);
  return mn_character(p, ones);
}

BigInt hook_dimension(int x, int y) { return binomial(x + y - 1, y); }

BigInt inner_product(const CharacterVector& c1, const CharacterVector& c2, int n) {
  BigInt acc = 0;
  for (const auto& mu : partitions_of(n)) {
    auto i1 = c1.find(mu), i2 = c2.find(mu);
    long long v1 = i1 == c1.end() ? 0 : i1->second;
    long long v2 = i2 == c2.end() ? 0 : i2->second;
    acc += class_size(mu, n) * BigInt(v1) * BigInt(v2);
  }
  BigInt fact = factorial(n);
  if (acc % fact != 0) throw std::runtime_error("inner_product: non-integral result");
  return acc / fact;
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson rule by direct tableau enumeration.

namespace {

struct LRState {
  const std::vector<int>& shape;   // outer shape p
  const std::vector<int>& inner;   // alpha, padded to p's length
  std::vector<std::vector<int>> fill;  // 0 = empty; entries 1..len(beta)
  std::vector<int> remaining;          // how many of each entry left (1-based)
  std::vector<int> word_count;         // lattice word counts per entry
};

// Cells are processed in reverse reading order: rows top to bottom, within a
// row right to left. This makes the lattice condition checkable on the fly.
long long lr_count(LRState& s, int row, int col) {
  int nrows = (int)s.shape.size();
  while (row < nrows && (col < s.inner[row])) {
    ++row;
    if (row >= nrows) break;
    col = s.shape[row] - 1;
  }
  if (row >= nrows) return 1;

  long long total = 0;
  for (int v = 1; v <= (int)s.remaining.size(); ++v) {
    if (s.remaining[v - 1] == 0) continue;
    if (v > 1 && s.word_count[v - 1] + 1 > s.word_count[v - 2]) continue;
    if (col + 1 < s.shape[row] && s.fill[row][col + 1] != 0 && s.fill[row][col + 1] < v)
      continue;
    if (row > 0 && col < s.shape[row - 1] && col >= s.inner[row - 1] &&
        s.fill[row - 1][col] >= v)
      continue;
    s.fill[row][col] = v;
    s.remaining[v - 1]--;
    s.word_count[v - 1]++;
    int nrow = row, ncol = col - 1;
    if (ncol < s.inner[row]) {
      nrow = row + 1;
      ncol = nrow < nrows ? s.shape[nrow] - 1 : -1;
    }
    total += lr_count(s, nrow, ncol);
    s.fill[row][col] = 0;
    s.remaining[v - 1]++;
    s.word_count[v - 1]--;
  }
  return total;
}

}  // namespace

long long lr_coefficient(const Partition& p, const Partition& alpha, const Partition& beta) {
  if (weight(alpha) + weight(beta) != weight(p)) return 0;
  std::vector<int> inner(p.size(), 0);
  if (alpha.size() > p.size()) return 0;
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] > p[i]) return 0;
    inner[i] = alpha[i];
  }
  LRState s{p, inner, {}, {}, {}};
  s.fill.assign(p.size(), {});
  for (size_t i = 0; i < p.size(); ++i) s.fill[i].assign(p[i], 0);
  s.remaining.assign(beta.begin(), beta.end());
  s.word_count.assign(beta.size(), 0);
  int row = 0, col = p.empty() ? -1 : p[0] - 1;
  return lr_count(s, row, col);
}

std::map<std::pair<Partition, Partition>, long long> lr_restrict(const Partition& p, int a,
                                                                 int b) {
  if (a + b != weight(p)) throw std::invalid_argument("lr_restrict: a+b must equal |p|");
  std::map<std::pair<Partition, Partition>, long long> out;
  for (const auto& alpha : partitions_of(a))
    for (const auto& beta : partitions_of(b)) {
      long long c = lr_coefficient(p, alpha, beta);
      if (c != 0) out[{alpha, beta}] = c;
    }
  return out;
}

long long restrict_multiplicity_by_characters(const Partition& p, const Partition& alpha,
                                              const Partition& beta) {
  int a = weight(alpha), b = weight(beta);
  if (a + b != weight(p)) return 0;
  BigInt acc = 0;
  for (const auto& la : partitions_of(a)) {
    for (const auto& mu : partitions_of(b)) {
      Partition joint = la;
      joint.insert(joint.end(), mu.begin(), mu.end());
      std::sort(joint.rbegin(), joint.rend());
      acc += class_size(la, a) * class_size(mu, b) * BigInt(mn_character(p, joint)) *
             BigInt(mn_character(alpha, la)) * BigInt(mn_character(beta, mu));
    }
  }
  BigInt denom = factorial(a) * factorial(b);
  if (acc % denom != 0) throw std::runtime_error("restrict multiplicity: non-integral");
  return (long long)(acc / denom);
}

// ---------------------------------------------------------------------------
// Wreath products.

std::vector<int> WreathElement::embed(int q) const {
  std::vector<int> perm(2 * q);
  for (int i = 0; i < q; ++i) {
    int t = block_perm[i];
    bool flip = (flips >> i) & 1;
    perm[2 * i] = 2 * t + (flip ? 1 : 0);
    perm[2 * i + 1] = 2 * t + (flip ? 0 : 1);
  }
  return perm;
}

int WreathElement::sign_L() const { return permutation_sign(block_perm); }

std::vector<WreathElement> wreath_elements(int q) {
  std::vector<WreathElement> out;
  std::vector<int> tau(q);
  std::iota(tau.begin(), tau.end(), 0);
  do {
    for (uint32_t f = 0; f < (1u << q); ++f) out.push_back({tau, f});
  } while (std::next_permutation(tau.begin(), tau.end()));
  return out;
}

Partition cycle_type(const std::vector<int>& perm) {
  int n = (int)perm.size();
  std::vector<bool> seen(n, false);
  Partition type;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = perm[j];
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

long long wreath_hook_multiplicity(const Partition& hook, int q) {
  if (weight(hook) != 2 * q) throw std::invalid_argument("wreath_hook_multiplicity: weight");
  BigInt acc = 0;
  for (const auto& w : wreath_elements(q)) {
    Partition type = cycle_type(w.embed(q));
    acc += BigInt(mn_character(hook, type)) * w.sign_L();
  }
  BigInt order = factorial(q);
  for (int i = 0; i < q; ++i) order *= 2;
  if (acc % order != 0) throw std::runtime_error("wreath multiplicity: non-integral");
  return (long long)(acc / order);
}

long long full_restriction_multiplicity(const Partition& hook, int q, const Partition& beta) {
  int total = weight(hook);
  int m = total - 2 * q;
  if (m < 0 || weight(beta) != m)
    throw std::invalid_argument("full_restriction_multiplicity: sizes inconsistent");
  BigInt acc = 0;
  auto parts_m = partitions_of(m);
  for (const auto& w : wreath_elements(q)) {
    Partition wtype = cycle_type(w.embed(q));
    for (const auto& mu : parts_m) {
      Partition joint = wtype;
      joint.insert(joint.end(), mu.begin(), mu.end());
      std::sort(joint.rbegin(), joint.rend());
      acc += class_size(mu, m) * BigInt(mn_character(hook, joint)) * w.sign_L() *
             BigInt(mn_character(beta, mu));
    }
  }
  BigInt order = factorial(q) * factorial(m);
  for (int i = 0; i < q; ++i) order *= 2;
  if (acc % order != 0) throw std::runtime_error("full restriction: non-integral");
  return (long long)(acc / order);
}

// ---------------------------------------------------------------------------
// Cyclic restriction via Ramanujan sums.

static int moebius(int n) {
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

long long ramanujan_sum(int m, int x) {
  x = ((x % m) + m) % m;
  int g = std::gcd(m, x == 0 ? m : x);
  long long acc = 0;
  for (int d = 1; d <= g; ++d) {
    if (g % d != 0) continue;
    if (m % d != 0) continue;
    acc += (long long)d * moebius(m / d);
  }
  return acc;
}

long long cyclic_multiplicity(const Partition& p, int i) {
  int N = weight(p);
  if (N % 2 != 0) throw std::invalid_argument("cyclic_multiplicity: weight must be even");
  BigInt acc = 0;
  for (int d = 1; d <= N; ++d) {
    if (N % d != 0) continue;
    int cyclen = N / d;
    Partition type(d, cyclen);
    acc += BigInt(mn_character(p, type)) * ramanujan_sum(cyclen, i);
  }
  if (acc % N != 0) throw std::runtime_error("cyclic multiplicity: non-integral");
  return (long long)(acc / N);
}

// ---------------------------------------------------------------------------
// The orbit span of the composition relation, in wedge coordinates.

namespace {

// Lexicographic enumeration and ranking of k-subsets of {1..n}.
std::vector<std::vector<int>> k_subsets(int n, int k) {
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

}  // namespace

int relation_span_dimension(int t, int j) {
  if (t < 1 || j < 1) throw std::invalid_argument("relation_span_dimension: need t,j >= 1");
  int n = t + 2 * j, k = 2 * j;
  auto basis = k_subsets(n, k);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = (int)i;

  auto tails = k_subsets(n, k - 1);
  linalg::RationalMatrix rel((int)tails.size(), (int)basis.size());
  for (size_t r = 0; r < tails.size(); ++r) {
    const auto& T = tails[r];
    for (int x = 1; x <= n; ++x) {
      if (std::binary_search(T.begin(), T.end(), x)) continue;
      std::vector<int> s = T;
      int pos = (int)(std::lower_bound(s.begin(), s.end(), x) - s.begin());
      s.insert(s.begin() + pos, x);
      int sign = pos % 2 == 0 ? 1 : -1;
      rel.add((int)r, index[s], Rational(sign));
    }
  }
  return rel.rank();
}

CharacterVector relation_span_character(int t, int j) {
  // The span is u ∧ Λ^{k-1}(Q^n) for u the all-ones vector, so its trace at a
  // cycle type is an alternating sum of traces on exterior powers of the
  // permutation representation, read off Π_cycles (1 - (-x)^len).
  int n = t + 2 * j, k = 2 * j;
  CharacterVector cv;
  for (const auto& mu : partitions_of(n)) {
    std::vector<long long> poly(n + 1, 0);
    poly[0] = 1;
    for (int len : mu) {
      std::vector<long long> next(n + 1, 0);
      long long c = (len % 2 == 0) ? -1 : 1;  // 1 - (-x)^len
      for (int d = 0; d <= n; ++d) {
        if (poly[d] == 0) continue;
        next[d] += poly[d];
        if (d + len <= n) next[d + len] += c * poly[d];
      }
      poly = next;
    }
    long long val = 0;
    for (int m = 0; m <= k - 1; ++m) {
      long long term = poly[m];
      val += ((k - 1 - m) % 2 == 0) ? term : -term;
    }
    cv[mu] = val;
  }
  return cv;
}

}  // namespace gcx::symrep
