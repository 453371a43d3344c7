#pragma once

#include "twisthom/tensor.hpp"
#include "twisthom/weights.hpp"

namespace twisthom::schur {

using weights::Partition;

/// Young diagram of shape mu with the standard row-by-row filling
/// (1,...,b_1 in the first row and continuing).  Slots are 0-based.
class StandardTableau {
 public:
  explicit StandardTableau(Partition shape);

  const Partition& shape() const { return shape_; }
  int size() const { return size_; }  // |mu| = d
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  const std::vector<std::vector<int>>& cols() const { return cols_; }

 private:
  Partition shape_;
  int size_;
  std::vector<std::vector<int>> rows_, cols_;
};

/// All permutations preserving each row of T (the row group P).
std::vector<Permutation> row_group(const StandardTableau& T);
/// All permutations preserving each column of T with their signs (Q).
std::vector<std::pair<Permutation, int>> column_group(const StandardTableau& T);
/// |Q| = prod_j (mu'_j)!.
long column_group_order(const Partition& mu);

/// Normalized row symmetrizer: (1/|P|) sum_{p in P} p . t.  Idempotent.
Tensor row_symmetrize(const StandardTableau& T, const Tensor& t);

/// Normalized column antisymmetrizer: (1/|Q|) sum_{q in Q} eps(q) q . t.
/// Idempotent and self-adjoint for bilinear_pair.
Tensor col_antisymmetrize(const StandardTableau& T, const Tensor& t);

/// Orthogonal projection onto the harmonic d-tensors (the joint kernel of
/// all contractions), computed by one exact linear solve against the span
/// of the form insertions.
Tensor harmonic_project(const Tensor& t);

/// True when t is killed by every contraction.
bool is_harmonic(const Tensor& t);

/// The invariant tensor QPH(x_1^{b_1} x ... x x_k^{b_k}) attached to a
/// vector tuple and a partition.  mu may have at most k nonzero parts.
Tensor tau(SpacePtr space, const std::vector<Vector>& x, const Partition& mu);

/// bilinear_pair(tau(x,mu), tau(y,mu)).
Scalar pair_invariants(SpacePtr space, const std::vector<Vector>& x,
                       const std::vector<Vector>& y, const Partition& mu);

/// Column criterion: the harmonic Schur module for mu is nonzero on a
/// space of dimension dimV iff mu'_1 + mu'_2 <= dimV.
bool schur_module_nonzero(const Partition& mu, int dimV);

/// True when the diagonal slot action of the isometry g fixes t exactly.
/// Throws ValidationError when g does not preserve the form.
bool invariance_check(const Tensor& t, const Matrix& g);

}  // namespace twisthom::schur
