// Dense matrices over F_q with plain Gaussian elimination: RREF, rank,
// canonical right-kernel bases, determinants and linear solves.
#pragma once

#include <optional>
#include <vector>

#include "polsolve/field.hpp"

namespace polsolve {

class MatrixF {
 public:
  MatrixF(const Field& f, size_t rows, size_t cols)
      : field_(&f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static MatrixF identity(const Field& f, size_t n) {
    MatrixF m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  // L x t Vandermonde: entry (l, i) = points[l]^i, i = 0..t-1.
  static MatrixF vandermonde(const Field& f, const std::vector<uint64_t>& points, size_t t) {
    if (t < 1) throw FieldError("vandermonde needs t >= 1");
    MatrixF m(f, points.size(), t);
    for (size_t l = 0; l < points.size(); ++l) {
      uint64_t pw = 1;
      for (size_t i = 0; i < t; ++i) {
        m.at(l, i) = pw;
        pw = f.mul(pw, points[l]);
      }
    }
    return m;
  }

  const Field& field() const { return *field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  uint64_t& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  uint64_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  bool operator==(const MatrixF& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  // In-place reduced row echelon form; returns the pivot columns.
  std::vector<size_t> rref() {
    const Field& f = *field_;
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
      size_t sel = row;
      while (sel < rows_ && at(sel, col) == 0) ++sel;
      if (sel == rows_) continue;
      if (sel != row)
        for (size_t c = col; c < cols_; ++c) std::swap(at(row, c), at(sel, c));
      const uint64_t piv_inv = f.inv(at(row, col));
      for (size_t c = col; c < cols_; ++c) at(row, c) = f.mul(at(row, c), piv_inv);
      for (size_t r = 0; r < rows_; ++r) {
        if (r == row) continue;
        const uint64_t factor = at(r, col);
        if (factor == 0) continue;
        for (size_t c = col; c < cols_; ++c)
          at(r, c) = f.sub(at(r, c), f.mul(factor, at(row, c)));
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  size_t rank() const {
    MatrixF copy = *this;
    return copy.rref().size();
  }

  // Canonical basis of {v : M v = 0}: one vector per free column in ascending
  // order, each with value 1 at its free column (its last nonzero entry) and
  // zeros at the other free columns.
  std::vector<std::vector<uint64_t>> right_kernel_basis() const {
    const Field& f = *field_;
    MatrixF r = *this;
    std::vector<size_t> pivots = r.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<uint64_t>> basis;
    for (size_t free_col = 0; free_col < cols_; ++free_col) {
      if (is_pivot[free_col]) continue;
      std::vector<uint64_t> v(cols_, 0);
      v[free_col] = 1;
      for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r.at(i, free_col));
      basis.push_back(std::move(v));
    }
    return basis;
  }

  std::vector<uint64_t> apply(const std::vector<uint64_t>& v) const {
    if (v.size() != cols_) throw FieldError("dimension mismatch");
    const Field& f = *field_;
    std::vector<uint64_t> out(rows_, 0);
    for (size_t r = 0; r < rows_; ++r) {
      uint64_t acc = 0;
      for (size_t c = 0; c < cols_; ++c) acc = f.add(acc, f.mul(at(r, c), v[c]));
      out[r] = acc;
    }
    return out;
  }

  // Solves M x = b exactly; nullopt when inconsistent. With a nontrivial
  // kernel the free variables are set to zero.
  std::optional<std::vector<uint64_t>> solve(const std::vector<uint64_t>& b) const {
    if (b.size() != rows_) throw FieldError("dimension mismatch");
    MatrixF aug(*field_, rows_, cols_ + 1);
    for (size_t r = 0; r < rows_; ++r) {
      for (size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
      aug.at(r, cols_) = b[r];
    }
    std::vector<size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<uint64_t> x(cols_, 0);
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, cols_);
    return x;
  }

  uint64_t determinant() const {
    if (rows_ != cols_) throw FieldError("determinant of non-square matrix");
    const Field& f = *field_;
    MatrixF m = *this;
    uint64_t det = 1;
    for (size_t col = 0; col < cols_; ++col) {
      size_t sel = col;
      while (sel < rows_ && m.at(sel, col) == 0) ++sel;
      if (sel == rows_) return 0;
      if (sel != col) {
        for (size_t c = 0; c < cols_; ++c) std::swap(m.at(col, c), m.at(sel, c));
        det = f.neg(det);
      }
      det = f.mul(det, m.at(col, col));
      const uint64_t inv = f.inv(m.at(col, col));
      for (size_t r = col + 1; r < rows_; ++r) {
        const uint64_t factor = f.mul(m.at(r, col), inv);
        if (factor == 0) continue;
        for (size_t c = col; c < cols_; ++c)
          m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(col, c)));
      }
    }
    return det;
  }

 private:
  const Field* field_;
  size_t rows_, cols_;
  std::vector<uint64_t> a_;
};

}  // namespace polsolve
