#include "sagecirc/linalg.hpp"

#include <stdexcept>

namespace sagecirc {

RationalMatrix::RationalMatrix(
    std::initializer_list<std::initializer_list<Rational>> init) {
  rows_ = init.size();
  cols_ = rows_ == 0 ? 0 : init.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : init) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix init");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows,
                                         std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  RationalVector v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
  return v;
}

void RationalMatrix::append_row(const RationalVector& v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalVector add(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RationalVector subtract(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RationalVector scale(const RationalVector& a, const Rational& s) {
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

RationalVector negate(const RationalVector& a) { return scale(a, Rational(-1)); }

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  Rational r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

bool is_zero(const RationalVector& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

RationalVector zero_vector(std::size_t n) { return RationalVector(n); }

RationalVector unit_vector(std::size_t n, std::size_t i) {
  RationalVector v(n);
  v.at(i) = 1;
  return v;
}

RationalVector ones_vector(std::size_t n) { return RationalVector(n, Rational(1)); }

RationalVector matvec(const RationalMatrix& m, const RationalVector& x) {
  if (x.size() != m.cols()) throw std::invalid_argument("dimension mismatch");
  RationalVector y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m.at(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

std::vector<std::size_t> rref_in_place(RationalMatrix& m) {
  std::vector<std::size_t> pivot_cols;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    // First nonzero pivot in column order keeps the reduction deterministic.
    std::size_t sel = pivot_row;
    while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row) {
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(sel, j), m.at(pivot_row, j));
    }
    const Rational inv = Rational(1) / m.at(pivot_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || m.at(i, col) == 0) continue;
      const Rational factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) -= factor * m.at(pivot_row, j);
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  return pivot_cols;
}

std::size_t rank(RationalMatrix m) { return rref_in_place(m).size(); }

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  RationalMatrix r = m;
  const std::vector<std::size_t> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    RationalVector v(m.cols());
    v[free_col] = 1;
    for (std::size_t p = 0; p < pivots.size(); ++p)
      v[pivots[p]] = -r.at(p, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve_unique(const RationalMatrix& m,
                                           const RationalVector& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("dimension mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i];
  }
  const std::vector<std::size_t> pivots = rref_in_place(aug);
  // Inconsistent if the augmented column is a pivot.
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  if (pivots.size() != m.cols()) return std::nullopt;
  RationalVector x(m.cols());
  for (std::size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = aug.at(p, m.cols());
  return x;
}

bool affinely_independent(const std::vector<RationalVector>& points) {
  if (points.size() <= 1) return true;
  const std::size_t dim = points[0].size();
  for (const auto& p : points)
    if (p.size() != dim) throw std::invalid_argument("dimension mismatch");
  RationalMatrix diffs(points.size() - 1, dim);
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j)
      diffs.at(i - 1, j) = points[i][j] - points[0][j];
  return rank(diffs) == points.size() - 1;
}

bool lex_less(const RationalVector& a, const RationalVector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

}  // namespace sagecirc
