// Acceptance suite: one line per criterion, nonzero exit on any failure.
// The long-running j=3 additions are enabled with --opt-in-slow (or GCX_SLOW=1).

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <vector>

#include "gcx/enumerate.hpp"
#include "gcx/feynman.hpp"
#include "gcx/hlie.hpp"
#include "gcx/parallel.hpp"
#include "gcx/symrep.hpp"
#include "gcx/verify.hpp"

using namespace gcx;
using Clock = std::chrono::steady_clock;

static int failures = 0;

static void report(int criterion, const std::string& what, bool pass, Clock::time_point t0) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  std::cout << "CRITERION " << criterion << ": " << (pass ? "PASS" : "FAIL") << " - " << what
            << " (" << ms << " ms)" << std::endl;
  if (!pass) ++failures;
}

int main(int argc, char** argv) {
  bool slow = std::getenv("GCX_SLOW") != nullptr;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--opt-in-slow") == 0) slow = true;
  int jobs = hardware_jobs();

  // 1. d^2 = 0 with Massey terms
  {
    auto t0 = Clock::now();
    bool pass = true;
    for (int n : {3, 4, 5, 6})
      pass = pass && verify::verify_dsquared(feynman::Operad::HLie, 1, n, jobs).pass;
    pass = pass && verify::verify_dsquared(feynman::Operad::HLie, 3, 0, jobs).pass;
    for (int g : {3, 4, 5})
      pass = pass && verify::verify_dsquared(feynman::Operad::Com, g, 0, jobs).pass;
    report(1, "d∘d = 0 on B(HLie)(1,3..6), B(HLie)(3,0), B(Com)(3..5,0)", pass, t0);
  }

  // 2. hook-model dimensions
  {
    auto t0 = Clock::now();
    bool pass = true;
    for (int n = 1; n <= 9; ++n)
      for (int i = 0; i <= n - 1; i += 2)
        pass = pass && BigInt(hlie::model_dimension(n, i)) == symrep::hook_dimension(n - i, i);
    report(2, "dim model(n,i) = C(n-1,i) for n <= 9", pass, t0);
  }

  // 3. composition relation: z in the kernel, orbit span of hook dimension
  {
    auto t0 = Clock::now();
    bool pass = true;
    for (auto [t, j] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 1}, {1, 2}, {2, 2}}) {
      int n = t + 2 * j;
      auto composed = hlie::compose_plug(hlie::alpha(j), 2 * j + 1, t);
      std::vector<int> to_standard(n);
      for (int l = 1; l <= 2 * j; ++l) to_standard[l - 1] = t + l;
      for (int l = 2 * j + 1; l <= n; ++l) to_standard[l - 1] = l - 2 * j;
      auto y = hlie::relabel(composed, to_standard, n);
      pass = pass && !y.is_zero();
      hlie::GenusOneClass z = y;
      for (int i = 1; i <= t; ++i) {
        std::vector<int> perm(n);
        for (int l = 1; l <= n; ++l) perm[l - 1] = l;
        std::swap(perm[i - 1], perm[t]);
        z += hlie::act(y, perm);
      }
      pass = pass && z.is_zero();
      int span = symrep::relation_span_dimension(t, j);
      symrep::Partition target{t + 1};
      for (int i = 0; i < 2 * j - 1; ++i) target.push_back(1);
      pass = pass && (long long)span == symrep::dimension(target);
    }
    report(3, "relation z ∈ ker(∘_e), orbit span = dim V_{t+1,1^(2j-1)}", pass, t0);
  }

  // 4. wreath and full restriction multiplicities
  {
    auto t0 = Clock::now();
    bool pass = true;
    for (int q = 1; q <= 5; ++q)
      for (int x = 1; x <= 2 * q; ++x) {
        symrep::Partition hook{x};
        for (int i = 0; i < 2 * q - x; ++i) hook.push_back(1);
        long long expected = (x == q + 1) ? 1 : 0;
        pass = pass && symrep::wreath_hook_multiplicity(hook, q) == expected;
      }
    for (int r = 2; r <= 5; ++r)
      for (int n = r + 1; n + r <= 12; ++n) {
        symrep::Partition hook{r};
        for (int i = 0; i < n; ++i) hook.push_back(1);
        int q = r - 1, m = n + r - 2 * q;
        for (const auto& beta : symrep::partitions_of(m)) {
          symrep::Partition expected(m, 1);
          long long want = beta == expected ? 1 : 0;
          pass = pass && symrep::full_restriction_multiplicity(hook, q, beta) == want;
        }
        for (int q2 = r; 2 * q2 <= n + r; ++q2)
          for (const auto& beta : symrep::partitions_of(n + r - 2 * q2))
            pass = pass && symrep::full_restriction_multiplicity(hook, q2, beta) == 0;
      }
    report(4, "wreath hook multiplicities (q<=5) and unique L_{r-1} summand (n+r<=12)", pass, t0);
  }

  // 5. cyclic computations
  {
    auto t0 = Clock::now();
    bool pass = true;
    for (int n = 2; n <= 4; ++n) {
      symrep::Partition v2{2};
      for (int i = 0; i < 2 * n - 2; ++i) v2.push_back(1);
      pass = pass && symrep::cyclic_multiplicity(v2, n) == 0;
      symrep::Partition triv{2 * n}, std_rep{2 * n - 1, 1};
      for (int i = 0; i < 2 * n; ++i)
        pass = pass && symrep::cyclic_multiplicity(triv, i) +
                               symrep::cyclic_multiplicity(std_rep, i) ==
                           1;
    }
    report(5, "Z_2n: W_n absent from V_{2,1^(2n-2)}, permutation rep = ⊕W_i (n=2,3,4)", pass,
           t0);
  }

  // 6. theta summand is 1-dimensional, j = 1, 2, 3
  {
    auto t0 = Clock::now();
    bool pass = true;
    for (int j : {1, 2, 3}) {
      feynman::Complex cx(feynman::Operad::HLie, 2 * j + 1, 0,
                          feynman::Options{false, false, jobs});
      pass = pass && feynman::theta_summand_dimension(cx, j) == 1;
    }
    report(6, "theta summand in bidegree (2j+1, 2j) is 1-dimensional, j = 1,2,3", pass, t0);
  }

  // 7. theta projection of d(omega) nonzero; kernel identity
  {
    auto t0 = Clock::now();
    bool pass = verify::verify_theta_coefficient(1, jobs).pass &&
                verify::verify_theta_coefficient(2, jobs).pass;
    std::string what = "project(d(omega), theta) != 0 and (2j-2)v - 3w ∈ ker, j = 1,2";
    if (slow) {
      pass = pass && verify::verify_theta_coefficient(3, jobs).pass;
      what += ",3";
    } else {
      what += " (j=3 behind --opt-in-slow)";
    }
    report(7, what, pass, t0);
  }

  // 8. theta row of the restricted differential vanishes
  {
    auto t0 = Clock::now();
    std::string detail;
    bool pass = true;
    for (int j : {1, 2}) {
      auto p = verify::verify_propzero(j, jobs, true);
      auto d = verify::verify_deg0(j, jobs);
      pass = pass && p.pass && d.pass;
      detail += " [j=" + std::to_string(j) + ": propzero " + (p.pass ? "ok" : "NONZERO(" +
                 p.witness["nonzero_theta_entries"].dump() + " entries)") + ", deg0 " +
                (d.pass ? "ok" : "NONZERO") + "]";
    }
    // sanity inversion: without the filter the theta row is nonzero; the
    // borderline graph needs a loop slot, so this starts at j = 2
    pass = pass && verify::verify_propzero(2, jobs, false).pass;
    report(8, "theta row zero on the simple-loop-free slices (j = 1,2) + j=2 inversion" + detail,
           pass, t0);
  }

  // 9. brute-force nontriviality at j = 1
  {
    auto t0 = Clock::now();
    auto cert = verify::verify_nontriviality(1, false, jobs);
    report(9, "genus-3 loopless slice: omega_3 is a cycle and not a boundary", cert.pass, t0);
  }

  // supplementary (not a numbered criterion): the same brute force at genus 5
  // confirms the wheel class independently of the theta-row checks above
  {
    auto t0 = Clock::now();
    auto cert = verify::verify_nontriviality(2, false, jobs);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    std::cout << "SUPPLEMENT: " << (cert.pass ? "PASS" : "FAIL")
              << " - genus-5 loopless slice: omega_5 is a cycle and not a boundary (" << ms
              << " ms)" << std::endl;
    if (!cert.pass) ++failures;
  }

  // 10. dim P by enumeration of X-labeled polygons
  {
    auto t0 = Clock::now();
    bool pass = true;
    for (int j : {2, 3}) {
      int n = 4 * j - 1;
      long long expected = j == 2 ? 24 : 1152;
      // fat vertex: one a-letter and one representative of each loop; its
      // cycle neighbors carry the other two a's; the rest carry the
      // complementary representatives, one each
      std::map<graph::Certificate, int> classes;
      std::vector<int> others(2 * j - 2);
      for (int a = 1; a <= 3; ++a) {
        std::vector<int> rest;
        for (int l = 1; l <= 3; ++l)
          if (l != a) rest.push_back(l);
        for (int reps = 0; reps < (1 << (2 * j - 2)); ++reps) {
          std::vector<int> fat_legs{a};
          std::vector<int> comp;
          for (int i = 1; i <= 2 * j - 2; ++i) {
            int r1 = 2 * i + 2, r2 = 2 * i + 3;
            bool pick = (reps >> (i - 1)) & 1;
            fat_legs.push_back(pick ? r2 : r1);
            comp.push_back(pick ? r1 : r2);
          }
          std::sort(comp.begin(), comp.end());
          std::vector<int> order(comp);
          do {
            for (int lr = 0; lr < 2; ++lr) {
              // cyclic order: fat, L, path..., R
              int len = 2 * j + 1;
              std::vector<std::vector<int>> legs_at(len);
              legs_at[0] = fat_legs;
              std::sort(legs_at[0].begin(), legs_at[0].end());
              legs_at[1] = {rest[lr]};
              legs_at[len - 1] = {rest[1 - lr]};
              for (int i = 0; i < 2 * j - 2; ++i) legs_at[2 + i] = {order[i]};
              // build the modular graph
              graph::ModularGraph p;
              p.g.vertex_count = len;
              p.genus.assign(len, 0);
              int F = 2 * len + n;
              p.g.adjacency.resize(F);
              p.g.involution.resize(F);
              for (int i = 0; i < len; ++i) {
                p.g.adjacency[2 * i] = i;
                p.g.adjacency[2 * i + 1] = (i + 1) % len;
                p.g.involution[2 * i] = 2 * i + 1;
                p.g.involution[2 * i + 1] = 2 * i;
              }
              p.leg_labels.assign(n, -1);
              int next = 2 * len;
              for (int i = 0; i < len; ++i)
                for (int lab : legs_at[i]) {
                  p.g.adjacency[next] = i;
                  p.g.involution[next] = next;
                  p.leg_labels[lab - 1] = next;
                  ++next;
                }
              p.validate();
              classes[graph::canonical_form(p).certificate] = 1;
            }
          } while (std::next_permutation(order.begin(), order.end()));
        }
      }
      pass = pass && (long long)classes.size() == expected;
    }
    report(10, "dim P = 3!(2j-2)!2^(2j-2)/2 by polygon enumeration (24, 1152)", pass, t0);
  }

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT") << std::endl;
  return failures == 0 ? 0 : 1;
}
