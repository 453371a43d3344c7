#include "twisthom/matrix.hpp"

namespace twisthom::exactfield {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i)
    m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw ValidationError("ragged row list");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) {
  const int c = static_cast<int>(cols.size());
  const int r = c == 0 ? 0 : static_cast<int>(cols[0].size());
  Matrix m(r, c);
  for (int j = 0; j < c; ++j) {
    if (static_cast<int>(cols[j].size()) != r)
      throw ValidationError("ragged column list");
    for (int i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vector Matrix::row(int r) const {
  Vector v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(r, j);
  return v;
}

Vector Matrix::column(int c) const {
  Vector v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ValidationError("matrix shape mismatch in +");
  Matrix m(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ValidationError("matrix shape mismatch in -");
  Matrix m(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw ValidationError("matrix shape mismatch in *");
  Matrix m(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (b.is_zero()) continue;
        m.at(i, j) += a * b;
      }
    }
  return m;
}

Vector Matrix::operator*(const Vector& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw ValidationError("matrix/vector shape mismatch");
  Vector r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Scalar& a = at(i, j);
      if (!a.is_zero() && !v[j].is_zero()) r[i] += a * v[j];
    }
  return r;
}

Matrix Matrix::operator*(const Scalar& s) const {
  Matrix m(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * s;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

bool Matrix::is_zero() const {
  for (const Scalar& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::kronecker(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) {
          if (b.at(k, l).is_zero()) continue;
          m.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    }
  return m;
}

Echelon reduced_row_echelon(Matrix m, int pivot_col_limit) {
  Echelon e;
  const int limit = pivot_col_limit < 0 ? m.cols() : pivot_col_limit;
  int next_row = 0;
  for (int col = 0; col < limit && next_row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = next_row; r < m.rows(); ++r) {
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != next_row)
      for (int j = col; j < m.cols(); ++j)
        std::swap(m.at(pivot, j), m.at(next_row, j));
    const Scalar inv = m.at(next_row, col).inverse();
    for (int j = col; j < m.cols(); ++j) m.at(next_row, j) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == next_row) continue;
      const Scalar f = m.at(r, col);
      if (f.is_zero()) continue;
      for (int j = col; j < m.cols(); ++j) {
        if (m.at(next_row, j).is_zero()) continue;
        m.at(r, j) -= f * m.at(next_row, j);
      }
    }
    e.pivot_cols.push_back(col);
    ++next_row;
  }
  e.mat = std::move(m);
  return e;
}

int rank(const Matrix& m) {
  return static_cast<int>(reduced_row_echelon(m).pivot_cols.size());
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const Echelon e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = Scalar(1);
    for (size_t r = 0; r < e.pivot_cols.size(); ++r)
      v[e.pivot_cols[r]] = -e.mat.at(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw ValidationError("solve: right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  const Echelon e = reduced_row_echelon(std::move(aug));
  Vector x(m.cols());
  for (size_t r = 0; r < e.pivot_cols.size(); ++r) {
    if (e.pivot_cols[r] == m.cols()) return std::nullopt;  // 0 = 1 row
    x[e.pivot_cols[r]] = e.mat.at(static_cast<int>(r), m.cols());
  }
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw SingularMatrixError("inverse of non-square");
  const int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar(1);
  }
  const Echelon e = reduced_row_echelon(std::move(aug));
  if (static_cast<int>(e.pivot_cols.size()) < n || e.pivot_cols[n - 1] != n - 1)
    throw SingularMatrixError("matrix is singular");
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = e.mat.at(i, n + j);
  return inv;
}

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols())
    throw ValidationError("determinant of non-square matrix");
  Scalar det(1);
  const int n = m.rows();
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Scalar(0);
    if (pivot != col) {
      for (int j = col; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    const Scalar inv = m.at(col, col).inverse();
    for (int r = col + 1; r < n; ++r) {
      const Scalar f = m.at(r, col) * inv;
      if (f.is_zero()) continue;
      for (int j = col; j < n; ++j) {
        if (m.at(col, j).is_zero()) continue;
        m.at(r, j) -= f * m.at(col, j);
      }
    }
  }
  return det;
}

bool IncrementalRank::add(Vector v) {
  for (auto& [lead, row] : rows_) {
    if (lead >= static_cast<int>(v.size())) break;
    if (v[lead].is_zero()) continue;
    const Scalar f = v[lead];
    for (size_t j = lead; j < v.size(); ++j) {
      if (row[j].is_zero()) continue;
      v[j] -= f * row[j];
    }
  }
  int lead = -1;
  for (size_t j = 0; j < v.size(); ++j) {
    if (!v[j].is_zero()) {
      lead = static_cast<int>(j);
      break;
    }
  }
  if (lead < 0) return false;
  const Scalar inv = v[lead].inverse();
  for (size_t j = lead; j < v.size(); ++j) v[j] *= inv;
  rows_.emplace(lead, std::move(v));
  return true;
}

Vector zero_vector(int n) { return Vector(static_cast<size_t>(n)); }

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ValidationError("vector length mismatch");
  Vector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ValidationError("vector length mismatch");
  Vector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

bool is_zero(const Vector& v) {
  for (const Scalar& s : v)
    if (!s.is_zero()) return false;
  return true;
}

}  // namespace twisthom::exactfield
