#pragma once

#include <map>
#include <optional>
#include <vector>

#include "twisthom/field.hpp"

namespace twisthom::exactfield {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over an exact field.  All entries must lie in a
/// common field (joins happen entrywise as values are written).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix diagonal(const Vector& d);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const {
    return e_[static_cast<size_t>(r) * cols_ + c];
  }

  Vector row(int r) const;
  Vector column(int c) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix operator*(const Scalar& s) const;
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transposed() const;
  bool is_zero() const;

  /// Kronecker product, blocks ordered by the left factor.
  static Matrix kronecker(const Matrix& a, const Matrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> e_;
};

/// Result of Gauss-Jordan elimination with the fixed pivot rule
/// (leftmost nonzero column, topmost remaining row).
struct Echelon {
  Matrix mat;                   // reduced row-echelon form
  std::vector<int> pivot_cols;  // one per nonzero row, increasing
};

/// Pivots are searched in columns [0, pivot_col_limit) only (all columns
/// when the limit is negative); trailing columns are carried along, which
/// supports augmented systems.
Echelon reduced_row_echelon(Matrix m, int pivot_col_limit = -1);

int rank(const Matrix& m);

/// Basis of the right null space, one vector per free column, in increasing
/// free-column order.  cols = rank + kernel dimension.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Some x with m x = b, or nullopt when the system is inconsistent.
/// Deterministic: free variables are set to zero.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Throws SingularMatrixError when m is not invertible.
Matrix inverse(const Matrix& m);

Scalar determinant(Matrix m);

/// Maintains a row space in echelon form; used for incremental rank
/// computations that can stop early.
class IncrementalRank {
 public:
  /// Reduces v against the current rows and absorbs the remainder.
  /// Returns true when the rank grew.
  bool add(Vector v);
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::map<int, Vector> rows_;  // leading column -> row, unit leading entry
};

Vector zero_vector(int n);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
bool is_zero(const Vector& v);

}  // namespace twisthom::exactfield
