// Benchmark: serial reference vs OpenMP-parallel kernels. Both paths must
// produce identical results; the checks here fail loudly if they ever drift.

#include <chrono>
#include <iostream>

#include "gcx/enumerate.hpp"
#include "gcx/feynman.hpp"
#include "gcx/parallel.hpp"

using namespace gcx;
using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
  int genus = argc > 1 ? std::atoi(argv[1]) : 4;
  int jobs = hardware_jobs();
  std::cout << "kernel,serial_s,parallel_s,speedup,items\n";

  {
    // graph enumeration + canonical deduplication
    graph::EnumOptions serial, parallel;
    serial.jobs = 1;
    parallel.jobs = jobs;
    serial.all_genus_zero = parallel.all_genus_zero = true;
    auto t0 = Clock::now();
    auto a = graph::enumerate_graphs(genus, 0, serial);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    auto b = graph::enumerate_graphs(genus, 0, parallel);
    double tp = seconds_since(t0);
    if (a.size() != b.size()) {
      std::cerr << "MISMATCH: enumeration differs between serial and parallel\n";
      return 1;
    }
    for (size_t i = 0; i < a.size(); ++i)
      if (graph::canonical_form(a[i]).certificate != graph::canonical_form(b[i]).certificate) {
        std::cerr << "MISMATCH: enumeration order differs\n";
        return 1;
      }
    std::cout << "enumerate_graphs(" << genus << ";0)," << ts << "," << tp << "," << ts / tp
              << "," << a.size() << "\n";
  }

  {
    // complex construction + full differential of every basis vector
    auto run = [&](int j) {
      feynman::Options opt;
      opt.jobs = j;
      feynman::Complex cx(feynman::Operad::HLie, 1, 5, opt);
      auto t0 = Clock::now();
      cx.build_all();
      auto offender = cx.check_d_squared();
      if (offender) {
        std::cerr << "MISMATCH: d-squared failed in benchmark\n";
        exit(1);
      }
      return std::make_pair(seconds_since(t0), (int)cx.all_keys().size());
    };
    auto [ts, na] = run(1);
    auto [tp, nb] = run(jobs);
    if (na != nb) {
      std::cerr << "MISMATCH: basis sizes differ between serial and parallel\n";
      return 1;
    }
    std::cout << "complex+dsquared(hlie;1;5)," << ts << "," << tp << "," << ts / tp << "," << na
              << "\n";
  }

  return 0;
}
