#pragma once

#include <string>

#include <json.hpp>

#include "gcx/feynman.hpp"

namespace gcx::verify {

using Json = nlohmann::ordered_json;

// Machine-readable outcome of one verification claim. The witness data is
// enough to re-derive the verdict.
struct Certificate {
  std::string claim;
  Json params;
  bool pass = false;
  Json witness;
  long long ms = 0;
};

Json to_json(const Certificate& c);

// d(omega_{2j+1}) = 0 in B(Com)(2j+1, 0).
Certificate verify_wheel_cycle(int j, int jobs = 1);

// The theta projection of d(omega_{2j+1}) is a nonzero multiple of beta, the
// per-nesting contributions agree, and the kernel identities
// (2j-2)v - 3w ∈ ker, v ∉ ker hold in the hook model (j >= 2).
Certificate verify_theta_coefficient(int j, int jobs = 1);

// The theta row of the one-edge differential on bidegree (2j+2, 2j) of the
// simple-loop-free complex is zero. with_filter = false runs the sanity
// inversion: the same row is nonzero without the simple-loop exclusion.
Certificate verify_propzero(int j, int jobs = 1, bool with_filter = true);

// Every positive internal degree s projects to zero on the theta summand.
Certificate verify_deg0(int j, int jobs = 1);

// pipeline = false: brute force (j = 1 only) -- the wheel vector is a cycle
// and not a boundary in the loopless genus-3 slice. pipeline = true: the
// conjunction of the four lemma-level certificates.
Certificate verify_nontriviality(int j, bool pipeline, int jobs = 1);

// Full differential squares to zero on B(operad)(g, n).
Certificate verify_dsquared(feynman::Operad op, int g, int n, int jobs = 1);

}  // namespace gcx::verify
