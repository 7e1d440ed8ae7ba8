#pragma once

#include "sagecirc/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace sagecirc {

/// Dense matrix of exact rationals. All reductions use Gaussian elimination
/// with the first nonzero pivot in column order, so outputs are deterministic.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> init);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows,
                                  std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  RationalVector row(std::size_t r) const;
  void append_row(const RationalVector& v);

  RationalMatrix transposed() const;

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Elementwise vector helpers shared by the polyhedral and circuit code.
RationalVector add(const RationalVector& a, const RationalVector& b);
RationalVector subtract(const RationalVector& a, const RationalVector& b);
RationalVector scale(const RationalVector& a, const Rational& s);
RationalVector negate(const RationalVector& a);
Rational dot(const RationalVector& a, const RationalVector& b);
bool is_zero(const RationalVector& a);
RationalVector zero_vector(std::size_t n);
RationalVector unit_vector(std::size_t n, std::size_t i);
RationalVector ones_vector(std::size_t n);

/// y = M x.
RationalVector matvec(const RationalMatrix& m, const RationalVector& x);

/// Reduces `m` to reduced row echelon form in place and returns the pivot
/// column of every pivot row.
std::vector<std::size_t> rref_in_place(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

/// Basis of { v : Mv = 0 }. Vectors are independent and span the kernel;
/// rank(M) + kernel size = cols(M). Empty list for a trivial kernel.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// Unique solution of Mx = rhs, or nullopt when the system is inconsistent
/// or underdetermined.
std::optional<RationalVector> solve_unique(const RationalMatrix& m,
                                           const RationalVector& rhs);

/// True iff no point is an affine combination of the others. The singleton
/// and empty lists count as affinely independent. Throws on mixed dimensions.
bool affinely_independent(const std::vector<RationalVector>& points);

/// Lexicographic order, used wherever generator lists must be deterministic.
bool lex_less(const RationalVector& a, const RationalVector& b);

}  // namespace sagecirc
