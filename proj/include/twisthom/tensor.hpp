#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "twisthom/matrix.hpp"

namespace twisthom::schur {

using exactfield::Field;
using exactfield::Matrix;
using exactfield::Scalar;
using exactfield::Vector;

struct HarmonicContext;  // internal cache, see schur.cpp

/// Finite-dimensional space with a nondegenerate symmetric bilinear form,
/// given by its Gram matrix over an exact field.  Immutable; shared between
/// the tensors that live on it.
class QuadraticSpace : public std::enable_shared_from_this<QuadraticSpace> {
 public:
  static std::shared_ptr<const QuadraticSpace> from_gram(Matrix gram,
                                                         Field field);
  /// Signature (n,1) space of dimension n+1 with Gram diag(1,...,1,-1).
  static std::shared_ptr<const QuadraticSpace> standard_lorentz(int n,
                                                                Field field);

  int dim() const { return dim_; }
  const Matrix& gram() const { return gram_; }
  const Matrix& gram_inverse() const { return gram_inv_; }
  const Field& field() const { return field_; }
  /// Form value on basis vectors.
  const Scalar& pair(int i, int j) const { return gram_.at(i, j); }

  bool same_space(const QuadraticSpace& o) const;

  /// Cached data for harmonic projection in a fixed tensor degree.
  std::shared_ptr<const HarmonicContext> harmonic_context(int degree) const;

 private:
  QuadraticSpace(Matrix gram, Matrix gram_inv, Field field);

  int dim_;
  Matrix gram_, gram_inv_;
  Field field_;
  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::shared_ptr<const HarmonicContext>> cache_;
};

using SpacePtr = std::shared_ptr<const QuadraticSpace>;

/// Multi-index (a_1,...,a_d) with 0 <= a_j < dim; addresses the basis tensor
/// e_{a_1} x ... x e_{a_d}.
using MultiIndex = std::vector<int>;

/// Permutation of {0,...,d-1}; p[i] is the image of slot i.
using Permutation = std::vector<int>;

/// Sparse degree-d tensor over a quadratic space.  Absent multi-indices mean
/// coefficient zero; stored coefficients are nonzero after normalize().
class Tensor {
 public:
  Tensor(SpacePtr space, int degree);

  static Tensor basis_vector(SpacePtr space, int i);
  static Tensor from_vector(SpacePtr space, const Vector& v);
  static Tensor scalar(SpacePtr space, Scalar value);
  static Tensor product(const Tensor& a, const Tensor& b);
  /// k-fold tensor power; k = 0 gives the scalar 1.
  static Tensor power(const Tensor& t, long k);

  const SpacePtr& space() const { return space_; }
  int degree() const { return degree_; }
  const std::map<MultiIndex, Scalar>& coefficients() const { return c_; }
  Scalar coefficient(const MultiIndex& idx) const;
  void add_term(const MultiIndex& idx, const Scalar& v);

  bool is_zero() const { return c_.empty(); }
  /// The value of a degree-0 tensor.
  Scalar scalar_value() const;
  /// The coordinates of a degree-1 tensor.
  Vector to_vector() const;

  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  Tensor operator*(const Scalar& s) const;
  Tensor operator-() const { return *this * Scalar(-1); }
  bool operator==(const Tensor& o) const;
  bool operator!=(const Tensor& o) const { return !(*this == o); }

  std::string str() const;

 private:
  SpacePtr space_;
  int degree_;
  std::map<MultiIndex, Scalar> c_;

  void normalize();
};

/// d-fold tensor extension of the bilinear form; bilinear, not conjugate
/// linear.  Degrees and spaces must agree.
Scalar bilinear_pair(const Tensor& s, const Tensor& t);

/// Contraction in slots (i,j), 1-based, 1 <= i < j <= degree: pairs the two
/// slots with the form and removes them, keeping the order of the rest.
Tensor contract(const Tensor& t, int i, int j);

/// Insertion of the inverse-Gram 2-tensor into slots (i,j) of the result,
/// 1-based, 1 <= i < j <= degree + 2.  Adjoint to contract for the form.
Tensor insert(const Tensor& t, int i, int j);

/// Slot permutation: the vector in slot s moves to slot p[s].  An isometry
/// of bilinear_pair.
Tensor sym_act(const Permutation& p, const Tensor& t);

/// Diagonal action of a matrix on every slot.
Tensor apply_matrix(const Matrix& g, const Tensor& t);

/// Witt basis (u_1,...,u_m,v_m,...,v_1) of the standard signature-(n,1)
/// space: u_i = e_i - i e_{m+i}, v_i = e_i + i e_{m+i}, except that for odd
/// n the last pair is u_m = e_m - e_{n+1}, v_m = e_m + e_{n+1}.  Requires a
/// field containing i when any complex combination is needed.
std::vector<Tensor> witt_basis(SpacePtr space, int n);

}  // namespace twisthom::schur
