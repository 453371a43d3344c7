#pragma once

#include "twisthom/complex.hpp"
#include "twisthom/matrix.hpp"

namespace twisthom::localsys {

using exactfield::Field;
using exactfield::Matrix;
using exactfield::Scalar;
using exactfield::Vector;

/// Flat coefficient system on a simplicial complex, presented by an
/// invertible transport matrix per edge.  tau(a,b) carries the fiber at a
/// to the fiber at b for a < b; reverse transport is the inverse.  Triangle
/// compatibility tau(b,c) tau(a,b) = tau(a,c) is validated on every
/// 2-simplex, which makes transport path-independent within simplices.
class LocalSystem {
 public:
  LocalSystem(const SimplicialComplex& K, int rank, Field field,
              std::map<std::pair<int, int>, Matrix> edge_transports);

  static LocalSystem trivial(const SimplicialComplex& K, int rank,
                             Field field = Field::rationals());

  int rank() const { return rank_; }
  const Field& field() const { return field_; }

  /// Transport matrix along the edge from one vertex to an adjacent one.
  const Matrix& transport(int from, int to) const;
  Vector apply(int from, int to, const Vector& v) const;
  Vector transport_along(const std::vector<int>& path, Vector v) const;

  const std::map<std::pair<int, int>, Matrix>& edges() const { return fwd_; }

  /// Dual system: inverse-transpose transports, so that the evaluation
  /// pairing with the original system is parallel.
  LocalSystem dual(const SimplicialComplex& K) const;
  /// Tensor-product system with blockwise Kronecker transports.
  LocalSystem tensor(const SimplicialComplex& K,
                     const LocalSystem& other) const;

 private:
  int rank_;
  Field field_;
  std::map<std::pair<int, int>, Matrix> fwd_, inv_;
};

/// Parallel bilinear pairing nu: E x F -> G, one rank_g x (rank_e * rank_f)
/// matrix in the vertex trivializations; the basis of E x F is ordered with
/// the F index fastest.  Parallelism tau_G nu = nu (tau_E (x) tau_F) is
/// validated on every edge.
class PairingRule {
 public:
  PairingRule(const SimplicialComplex& K, const LocalSystem& E,
              const LocalSystem& F, const LocalSystem& G, Matrix nu);

  int rank_e() const { return rank_e_; }
  int rank_f() const { return rank_f_; }
  int rank_g() const { return rank_g_; }
  const Matrix& matrix() const { return nu_; }

  Vector apply(const Vector& e, const Vector& f) const;

  /// nu(e,f) = e*f for three rank-1 systems (transports must commute,
  /// which holds for rank 1).
  static PairingRule scalar_multiply(const SimplicialComplex& K,
                                     const LocalSystem& E,
                                     const LocalSystem& F,
                                     const LocalSystem& G);
  /// Evaluation E x E* -> trivial rank 1.
  static PairingRule evaluation(const SimplicialComplex& K,
                                const LocalSystem& E,
                                const LocalSystem& E_dual,
                                const LocalSystem& G);
  /// nu with the two inputs swapped: nu'(f,e) = nu(e,f).
  PairingRule flipped(const SimplicialComplex& K, const LocalSystem& F,
                      const LocalSystem& E, const LocalSystem& G) const;

 private:
  PairingRule() = default;
  int rank_e_ = 0, rank_f_ = 0, rank_g_ = 0;
  Matrix nu_;
};

}  // namespace twisthom::localsys
