#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcx/rational.hpp"

namespace gcx::linalg {

// Sparse vector with rational entries; zero entries are never stored.
using SparseVec = std::map<int, Rational>;

inline void add_scaled(SparseVec& dst, const SparseVec& src, const Rational& c) {
  if (c == 0) return;
  for (const auto& [k, v] : src) {
    auto it = dst.find(k);
    if (it == dst.end()) {
      dst.emplace(k, v * c);
    } else {
      it->second += v * c;
      if (it->second == 0) dst.erase(it);
    }
  }
}

// Sparse exact rational matrix. Entries are stored row-wise; structural
// zeros are dropped on insertion.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void set(int r, int c, const Rational& v) {
    check_index(r, c);
    if (v == 0)
      data_[r].erase(c);
    else
      data_[r][c] = v;
  }

  void add(int r, int c, const Rational& v) {
    check_index(r, c);
    auto it = data_[r].find(c);
    if (it == data_[r].end()) {
      if (v != 0) data_[r].emplace(c, v);
    } else {
      it->second += v;
      if (it->second == 0) data_[r].erase(it);
    }
  }

  Rational get(int r, int c) const {
    check_index(r, c);
    auto it = data_[r].find(c);
    return it == data_[r].end() ? Rational(0) : it->second;
  }

  const SparseVec& row(int r) const { return data_[r]; }

  size_t nonzeros() const {
    size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
  }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (const auto& [c, v] : data_[r]) t.data_[c][r] = v;
    return t;
  }

  // y = M x, with x given as a dense vector of length cols().
  std::vector<Rational> apply(const std::vector<Rational>& x) const;

  // Exact rank over Q.
  int rank() const;

  // Basis of the null space {v : Mv = 0}, as dense vectors of length cols().
  // Deterministic: reduced echelon form with columns in natural order.
  std::vector<std::vector<Rational>> kernel_basis() const;

  // True iff v lies in the column space of the matrix.
  bool in_span(const std::vector<Rational>& v) const;

  // Coordinate-list text: "row col numerator/denominator" lines, sorted.
  std::string to_coord_text() const;

 private:
  void check_index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("RationalMatrix index out of range");
  }

  int rows_, cols_;
  std::vector<SparseVec> data_;
};

// Matrix product (used by the d-squared checks; sizes here are modest).
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

// Reduced row echelon form of a list of sparse rows. Returns the nonzero
// rows sorted by pivot column, plus the pivot columns. Deterministic.
std::pair<std::vector<SparseVec>, std::vector<int>> rref_rows(std::vector<SparseVec> rows);

// A window of a chain complex: boundary matrices d[k] : C_k -> C_{k-1}
// for k = lo+1 .. hi, together with the dimensions of each C_k.
struct ChainComplexSlice {
  int lo = 0;  // lowest degree present
  std::vector<int> dims;              // dims[i] = dim C_{lo+i}
  std::vector<RationalMatrix> bounds; // bounds[i] : C_{lo+i+1} -> C_{lo+i}

  int degree_index(int degree) const { return degree - lo; }

  // Verifies d∘d = 0 on the stored window; throws if violated.
  void check_composition() const;

  // dim ker(d : C_degree -> C_{degree-1}) - rank(d : C_{degree+1} -> C_degree).
  // When `degree` sits at the window edge the missing map is treated as zero,
  // which matches how slices are built here (windows are padded by one degree).
  int homology_rank(int degree) const;
};

}  // namespace gcx::linalg
