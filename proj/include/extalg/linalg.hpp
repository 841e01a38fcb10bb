#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace extalg {

template <class K>
using Vec = std::vector<K>;

/// Row-major dense matrix over an exact field scalar.
template <class K>
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  K& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
  const K& at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

private:
  int rows_ = 0, cols_ = 0;
  std::vector<K> data_;
};

/// Reduced row echelon form with the accumulated row transform T (T*A = R),
/// so that Ax = b solves via Rx = Tb.
template <class K>
struct Rref {
  DenseMatrix<K> R;
  DenseMatrix<K> T;
  std::vector<int> pivot_col_of_row;  // size = rank
  std::vector<int> row_of_col;        // -1 for free columns
  int rank = 0;
};

/// Gauss-Jordan elimination, columns processed left to right, pivot = first
/// nonzero row.  F is a field descriptor providing from_long.
template <class F, class K = typename F::Scalar>
Rref<K> rref(const F& field, DenseMatrix<K> A) {
  Rref<K> out;
  const K one = field.from_long(1);
  int rows = A.rows(), cols = A.cols();
  DenseMatrix<K> T(rows, rows);
  for (int i = 0; i < rows; ++i) T.at(i, i) = one;

  out.row_of_col.assign(cols, -1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!A.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < cols; ++j) std::swap(A.at(piv, j), A.at(r, j));
      for (int j = 0; j < rows; ++j) std::swap(T.at(piv, j), T.at(r, j));
    }
    K inv = one / A.at(r, c);
    for (int j = c; j < cols; ++j)
      if (!A.at(r, j).is_zero()) A.at(r, j) = A.at(r, j) * inv;
    for (int j = 0; j < rows; ++j)
      if (!T.at(r, j).is_zero()) T.at(r, j) = T.at(r, j) * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || A.at(i, c).is_zero()) continue;
      K f = A.at(i, c);
      for (int j = c; j < cols; ++j)
        if (!A.at(r, j).is_zero()) A.at(i, j) -= f * A.at(r, j);
      for (int j = 0; j < rows; ++j)
        if (!T.at(r, j).is_zero()) T.at(i, j) -= f * T.at(r, j);
    }
    out.pivot_col_of_row.push_back(c);
    out.row_of_col[c] = r;
    ++r;
  }
  out.rank = r;
  out.R = std::move(A);
  out.T = std::move(T);
  return out;
}

/// Particular solution of Ax = b with free variables set to zero, or nullopt
/// when inconsistent.
template <class K>
std::optional<Vec<K>> solve(const Rref<K>& f, const Vec<K>& b) {
  int rows = f.R.rows(), cols = f.R.cols();
  if (static_cast<int>(b.size()) != rows) throw std::invalid_argument("solve: size mismatch");
  Vec<K> tb(rows);
  for (int i = 0; i < rows; ++i) {
    K acc{};
    for (int j = 0; j < rows; ++j)
      if (!f.T.at(i, j).is_zero() && !b[j].is_zero()) acc += f.T.at(i, j) * b[j];
    tb[i] = std::move(acc);
  }
  for (int i = f.rank; i < rows; ++i)
    if (!tb[i].is_zero()) return std::nullopt;
  Vec<K> x(cols);
  for (int r = 0; r < f.rank; ++r) x[f.pivot_col_of_row[r]] = std::move(tb[r]);
  return x;
}

/// Kernel basis of Ax = 0: one vector per free column, unit at the free
/// column, pivot columns compensating.
template <class F, class K = typename F::Scalar>
std::vector<Vec<K>> kernel_basis(const F& field, const Rref<K>& f) {
  const K one = field.from_long(1);
  int cols = f.R.cols();
  std::vector<Vec<K>> out;
  for (int c = 0; c < cols; ++c) {
    if (f.row_of_col[c] >= 0) continue;
    Vec<K> v(cols);
    v[c] = one;
    for (int r = 0; r < f.rank; ++r)
      if (!f.R.at(r, c).is_zero()) v[f.pivot_col_of_row[r]] = -f.R.at(r, c);
    out.push_back(std::move(v));
  }
  return out;
}

/// Canonical reduced basis of the span of `rows`: reduced row echelon,
/// leading entries one, sorted by leading index.  Purely in-place Gaussian
/// elimination; the input vectors all share one length.
template <class F, class K = typename F::Scalar>
std::vector<Vec<K>> rref_rows(const F& field, std::vector<Vec<K>> rows) {
  const K one = field.from_long(1);
  std::vector<Vec<K>> basis;           // echelon vectors
  std::vector<int> leads;              // their leading indices
  for (auto& v : rows) {
    // reduce v against the current basis
    for (size_t i = 0; i < basis.size(); ++i) {
      const K& c = v[leads[i]];
      if (c.is_zero()) continue;
      K f = c;
      for (size_t j = 0; j < v.size(); ++j)
        if (!basis[i][j].is_zero()) v[j] -= f * basis[i][j];
    }
    int lead = -1;
    for (size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) {
        lead = static_cast<int>(j);
        break;
      }
    if (lead < 0) continue;
    K inv = one / v[lead];
    for (auto& x : v)
      if (!x.is_zero()) x = x * inv;
    // back-substitute into existing basis rows
    for (size_t i = 0; i < basis.size(); ++i) {
      const K& c = basis[i][lead];
      if (c.is_zero()) continue;
      K f = c;
      for (size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) basis[i][j] -= f * v[j];
    }
    basis.push_back(std::move(v));
    leads.push_back(lead);
  }
  // sort by leading index ascending
  std::vector<int> idx(basis.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return leads[a] < leads[b]; });
  std::vector<Vec<K>> out;
  out.reserve(basis.size());
  for (int i : idx) out.push_back(std::move(basis[i]));
  return out;
}

/// Reduce `v` against an rref basis (as produced by rref_rows); returns the
/// residue.
template <class K>
Vec<K> reduce_against(const std::vector<Vec<K>>& basis, Vec<K> v) {
  for (const auto& b : basis) {
    int lead = -1;
    for (size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) {
        lead = static_cast<int>(j);
        break;
      }
    if (lead < 0) continue;
    const K& c = v[lead];
    if (c.is_zero()) continue;
    K f = c;
    for (size_t j = 0; j < v.size(); ++j)
      if (!b[j].is_zero()) v[j] -= f * b[j];
  }
  return v;
}

template <class K>
bool vec_is_zero(const Vec<K>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace extalg
