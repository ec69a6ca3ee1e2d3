#include "gcx/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gcx::linalg {

namespace {

// Integer sparse row with meaning "values / (implicit positive scale)".
// Row scale is irrelevant for rank and echelon structure, so elimination
// works on gcd-normalized integer rows: fraction-free updates
//   r' = p * r - r_pc * prow
// followed by content removal. Pivots are chosen Markowitz-style to limit
// fill-in; the matrices arising from graph complexes are sparse and
// {-1,0,1}-dominated, and this keeps intermediate growth mild.
struct IntRow {
  std::vector<std::pair<int, BigInt>> e;  // sorted by column
};

IntRow to_int_row(const SparseVec& row) {
  BigInt lcm = 1;
  for (const auto& [c, v] : row) {
    BigInt den = boost::multiprecision::denominator(v);
    lcm = boost::multiprecision::lcm(lcm, den);
  }
  IntRow r;
  r.e.reserve(row.size());
  for (const auto& [c, v] : row) {
    BigInt num = boost::multiprecision::numerator(v);
    BigInt den = boost::multiprecision::denominator(v);
    r.e.emplace_back(c, num * (lcm / den));
  }
  return r;
}

void normalize_content(IntRow& r) {
  if (r.e.empty()) return;
  BigInt g = 0;
  for (const auto& [c, v] : r.e) g = boost::multiprecision::gcd(g, v);
  if (g > 1)
    for (auto& [c, v] : r.e) v /= g;
  if (r.e.front().second < 0)
    for (auto& [c, v] : r.e) v = -v;
}

const BigInt* find_col(const IntRow& r, int col) {
  auto it = std::lower_bound(r.e.begin(), r.e.end(), col,
                             [](const auto& p, int c) { return p.first < c; });
  if (it == r.e.end() || it->first != col) return nullptr;
  return &it->second;
}

// dst = a*dst + b*src, dropping zeros.
void row_combine(IntRow& dst, const BigInt& a, const IntRow& src, const BigInt& b) {
  IntRow out;
  out.e.reserve(dst.e.size() + src.e.size());
  size_t i = 0, j = 0;
  while (i < dst.e.size() || j < src.e.size()) {
    if (j == src.e.size() || (i < dst.e.size() && dst.e[i].first < src.e[j].first)) {
      out.e.emplace_back(dst.e[i].first, a * dst.e[i].second);
      ++i;
    } else if (i == dst.e.size() || src.e[j].first < dst.e[i].first) {
      out.e.emplace_back(src.e[j].first, b * src.e[j].second);
      ++j;
    } else {
      BigInt v = a * dst.e[i].second + b * src.e[j].second;
      if (v != 0) out.e.emplace_back(dst.e[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

// Forward elimination to row echelon form. Returns the pivot columns in the
// order they were selected, with `rows` left in eliminated state.
std::vector<int> echelonize(std::vector<IntRow>& rows) {
  std::vector<int> pivot_cols;
  std::vector<bool> done(rows.size(), false);
  for (auto& r : rows) normalize_content(r);

  for (;;) {
    // Markowitz-style choice: among active rows, minimize
    // (row nnz - 1) * (pivot column population - 1), tie-broken
    // deterministically by (column, row).
    std::map<int, int> colpop;
    for (size_t i = 0; i < rows.size(); ++i)
      if (!done[i])
        for (const auto& [c, v] : rows[i].e) colpop[c]++;
    long best = -1;
    int best_row = -1, best_col = -1;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (done[i] || rows[i].e.empty()) continue;
      for (const auto& [c, v] : rows[i].e) {
        long cost = (long)(rows[i].e.size() - 1) * (long)(colpop[c] - 1);
        if (best == -1 || cost < best ||
            (cost == best && (c < best_col || (c == best_col && (int)i < best_row)))) {
          best = cost;
          best_row = (int)i;
          best_col = c;
        }
      }
    }
    if (best_row < 0) break;

    done[best_row] = true;
    pivot_cols.push_back(best_col);
    const BigInt p = *find_col(rows[best_row], best_col);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (done[i] || rows[i].e.empty()) continue;
      const BigInt* x = find_col(rows[i], best_col);
      if (!x) continue;
      BigInt coeff = -*x;
      row_combine(rows[i], p, rows[best_row], coeff);
      normalize_content(rows[i]);
    }
  }
  return pivot_cols;
}

}  // namespace

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& x) const {
  if ((int)x.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  std::vector<Rational> y(rows_, Rational(0));
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) y[r] += v * x[c];
  return y;
}

int RationalMatrix::rank() const {
  std::vector<IntRow> rows;
  rows.reserve(rows_);
  for (int r = 0; r < rows_; ++r) rows.push_back(to_int_row(data_[r]));
  return (int)echelonize(rows).size();
}

std::vector<std::vector<Rational>> RationalMatrix::kernel_basis() const {
  // Reduced rational echelon form with natural column order; the kernel basis
  // is read off the free columns. Deterministic by construction.
  std::vector<SparseVec> rr;
  for (int r = 0; r < rows_; ++r)
    if (!data_[r].empty()) rr.push_back(data_[r]);

  std::vector<int> pivot_col_of_row;
  std::vector<int> pivot_row_of_col(cols_, -1);
  size_t lead = 0;
  for (int c = 0; c < cols_ && lead < rr.size(); ++c) {
    size_t sel = rr.size();
    for (size_t i = lead; i < rr.size(); ++i)
      if (rr[i].count(c)) { sel = i; break; }
    if (sel == rr.size()) continue;
    std::swap(rr[lead], rr[sel]);
    Rational inv = Rational(1) / rr[lead][c];
    for (auto& [k, v] : rr[lead]) v *= inv;
    for (size_t i = 0; i < rr.size(); ++i) {
      if (i == lead) continue;
      auto it = rr[i].find(c);
      if (it == rr[i].end()) continue;
      Rational f = -it->second;
      add_scaled(rr[i], rr[lead], f);
    }
    pivot_col_of_row.push_back(c);
    pivot_row_of_col[c] = (int)lead;
    ++lead;
  }

  std::vector<std::vector<Rational>> basis;
  for (int c = 0; c < cols_; ++c) {
    if (pivot_row_of_col[c] >= 0) continue;
    std::vector<Rational> v(cols_, Rational(0));
    v[c] = 1;
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
      auto it = rr[r].find(c);
      if (it != rr[r].end()) v[pivot_col_of_row[r]] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool RationalMatrix::in_span(const std::vector<Rational>& v) const {
  if ((int)v.size() != rows_)
    throw std::invalid_argument("in_span: dimension mismatch");
  RationalMatrix aug(rows_, cols_ + 1);
  for (int r = 0; r < rows_; ++r) {
    for (const auto& [c, x] : data_[r]) aug.set(r, c, x);
    if (v[r] != 0) aug.set(r, cols_, v[r]);
  }
  return aug.rank() == rank();
}

std::string RationalMatrix::to_coord_text() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r])
      os << r << " " << c << " " << v.str() << "\n";
  return os.str();
}

std::pair<std::vector<SparseVec>, std::vector<int>> rref_rows(std::vector<SparseVec> rows) {
  std::vector<SparseVec> reduced;
  for (auto& row : rows) {
    SparseVec cur = std::move(row);
    for (const auto& done : reduced) {
      int pc = done.begin()->first;
      auto it = cur.find(pc);
      if (it != cur.end()) add_scaled(cur, done, -it->second);
    }
    if (cur.empty()) continue;
    Rational inv = Rational(1) / cur.begin()->second;
    for (auto& [k, v] : cur) v *= inv;
    for (auto& done : reduced) {
      auto it = done.find(cur.begin()->first);
      if (it != done.end()) add_scaled(done, cur, -it->second);
    }
    reduced.push_back(std::move(cur));
  }
  std::sort(reduced.begin(), reduced.end(), [](const SparseVec& a, const SparseVec& b) {
    return a.begin()->first < b.begin()->first;
  });
  std::vector<int> pivots;
  pivots.reserve(reduced.size());
  for (const auto& r : reduced) pivots.push_back(r.begin()->first);
  return {std::move(reduced), std::move(pivots)};
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (const auto& [k, av] : a.row(r))
      for (const auto& [c, bv] : b.row(k)) out.add(r, c, av * bv);
  return out;
}

void ChainComplexSlice::check_composition() const {
  for (size_t i = 0; i + 1 < bounds.size(); ++i) {
    RationalMatrix prod = multiply(bounds[i], bounds[i + 1]);
    if (prod.nonzeros() != 0)
      throw std::runtime_error("chain complex: boundary composition is not zero at degree " +
                               std::to_string(lo + (int)i + 2));
  }
}

int ChainComplexSlice::homology_rank(int degree) const {
  check_composition();
  int i = degree_index(degree);
  if (i < 0 || i >= (int)dims.size()) throw std::out_of_range("homology_rank: degree outside slice");
  int dim = dims[i];
  int rank_out = (i - 1 >= 0 && i - 1 < (int)bounds.size()) ? bounds[i - 1].rank() : 0;
  int rank_in = (i < (int)bounds.size()) ? bounds[i].rank() : 0;
  return dim - rank_out - rank_in;
}

}  // namespace gcx::linalg
