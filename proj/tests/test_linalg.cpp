#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gcx/linalg.hpp"

using namespace gcx;
using linalg::RationalMatrix;

// Textbook dense Gaussian elimination over Q, kept independent of the sparse
// implementation as an oracle.
static int dense_rank(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols(), Rational(0)));
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) a[r][c] = v;
  int rank = 0;
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    int sel = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (a[r][c] != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[rank], a[sel]);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[rank][c];
      for (int k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

TEST_CASE("rank basics") {
  RationalMatrix z(4, 7);
  CHECK(z.rank() == 0);

  RationalMatrix id(5, 5);
  for (int i = 0; i < 5; ++i) id.set(i, i, 1);
  CHECK(id.rank() == 5);

  RationalMatrix m(2, 3);
  m.set(0, 0, 1);
  m.set(0, 1, 2);
  m.set(1, 0, 2);
  m.set(1, 1, 4);
  CHECK(m.rank() == 1);
}

TEST_CASE("rank agrees with dense elimination on random sparse matrices") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + (int)(rng() % 12), cols = 1 + (int)(rng() % 12);
    RationalMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        int roll = (int)(rng() % 10);
        if (roll < 3) m.set(r, c, Rational((int)(rng() % 7) - 3));
      }
    CHECK(m.rank() == dense_rank(m));
    CHECK(m.rank() == m.transpose().rank());
  }
}

TEST_CASE("rank invariant under row and column permutation") {
  std::mt19937 rng(7);
  RationalMatrix m(6, 6);
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c)
      if (rng() % 3 == 0) m.set(r, c, Rational((int)(rng() % 9) - 4));
  int base = m.rank();
  std::vector<int> rp{3, 1, 5, 0, 4, 2}, cp{2, 0, 5, 1, 3, 4};
  RationalMatrix p(6, 6);
  for (int r = 0; r < 6; ++r)
    for (const auto& [c, v] : m.row(r)) p.set(rp[r], cp[c], v);
  CHECK(p.rank() == base);
}

TEST_CASE("kernel basis") {
  RationalMatrix id(4, 4);
  for (int i = 0; i < 4; ++i) id.set(i, i, 1);
  CHECK(id.kernel_basis().empty());

  // repeated column: difference vector in the kernel
  RationalMatrix m(3, 2);
  for (int r = 0; r < 3; ++r) {
    m.set(r, 0, r + 1);
    m.set(r, 1, r + 1);
  }
  auto kb = m.kernel_basis();
  REQUIRE(kb.size() == 1);
  CHECK(kb[0][0] == -kb[0][1]);

  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    int rows = 1 + (int)(rng() % 8), cols = 1 + (int)(rng() % 8);
    RationalMatrix a(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        if (rng() % 3 == 0) a.set(r, c, Rational((int)(rng() % 7) - 3));
    auto basis = a.kernel_basis();
    CHECK((int)basis.size() == cols - a.rank());
    for (const auto& v : basis) {
      auto y = a.apply(v);
      for (const auto& e : y) CHECK(e == 0);
    }
  }
}

TEST_CASE("in_span") {
  RationalMatrix m(3, 2);
  m.set(0, 0, 1);
  m.set(1, 0, 2);
  m.set(2, 0, 3);
  m.set(0, 1, 1);
  m.set(2, 1, 1);
  CHECK(m.in_span({1, 2, 3}));
  CHECK(m.in_span({0, 0, 0}));
  CHECK(m.in_span({2, 2, 4}));
  CHECK(!m.in_span({0, 0, 1}));
  CHECK_THROWS(m.in_span({1, 2}));
}

TEST_CASE("chain complex slice homology") {
  // zero differentials: homology = dimension
  linalg::ChainComplexSlice s;
  s.lo = 0;
  s.dims = {2, 3, 1};
  s.bounds = {RationalMatrix(2, 3), RationalMatrix(3, 1)};
  CHECK(s.homology_rank(1) == 3);

  // identity two-term complex: no homology
  linalg::ChainComplexSlice t;
  t.lo = 0;
  t.dims = {1, 1};
  RationalMatrix one(1, 1);
  one.set(0, 0, 1);
  t.bounds = {one};
  CHECK(t.homology_rank(0) == 0);
  CHECK(t.homology_rank(1) == 0);

  // d∘d != 0 must be rejected
  linalg::ChainComplexSlice bad;
  bad.lo = 0;
  bad.dims = {1, 1, 1};
  bad.bounds = {one, one};
  CHECK_THROWS(bad.homology_rank(1));
}

TEST_CASE("coordinate text export is sorted and exact") {
  RationalMatrix m(2, 2);
  m.set(1, 0, Rational(-1, 3));
  m.set(0, 1, Rational(5));
  CHECK(m.to_coord_text() == "0 1 5\n1 0 -1/3\n");
}
