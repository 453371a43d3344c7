#pragma once

#include "twisthom/localsystem.hpp"

namespace twisthom::localsys {

/// Twisted p-chain: finitely many simplices with a coefficient vector in
/// the fiber at their first vertex.  Keyed by simplex id in dimension p.
struct Chain {
  int degree = 0;
  std::map<int, Vector> terms;

  bool is_zero() const;
  Chain& add(int simplex_id, const Vector& v);
};

Chain operator+(const Chain& a, const Chain& b);
Chain operator-(const Chain& a, const Chain& b);
Chain operator*(const Scalar& s, const Chain& c);
bool operator==(const Chain& a, const Chain& b);

/// Twisted p-cochain: a fiber vector at the first vertex of every
/// p-simplex (zero values allowed; the assignment is total).
struct Cochain {
  int degree = 0;
  std::vector<Vector> values;  // one per simplex id

  static Cochain zero(const SimplicialComplex& K, const LocalSystem& L,
                      int degree);
  /// Constant 1 on every vertex; meaningful for rank-1 trivial systems.
  static Cochain unit(const SimplicialComplex& K, const LocalSystem& L);
};

Cochain operator+(const Cochain& a, const Cochain& b);
Cochain operator-(const Cochain& a, const Cochain& b);
Cochain operator*(const Scalar& s, const Cochain& c);
bool operator==(const Cochain& a, const Cochain& b);

/// Twisted simplicial boundary: the 0th face is transported along its
/// missing edge, the rest alternate in sign.
Chain boundary(const SimplicialComplex& K, const LocalSystem& L,
               const Chain& c);

/// Coboundary, defined as the Kronecker adjoint of the boundary:
/// (d a)(s) = tau(v1,v0) a(s_0) + sum_{i>=1} (-1)^i a(s_i).
Cochain coboundary(const SimplicialComplex& K, const LocalSystem& L,
                   const Cochain& a);

/// Matrix of boundary_p : C_p -> C_{p-1} in the simplex-id block bases.
Matrix boundary_matrix(const SimplicialComplex& K, const LocalSystem& L,
                       int p);
/// Matrix of coboundary_p : C^p -> C^{p+1}.
Matrix coboundary_matrix(const SimplicialComplex& K, const LocalSystem& L,
                         int p);

struct HomologyResult {
  int dim = 0;
  std::vector<Chain> representatives;  // cycles spanning the homology
};

struct CohomologyResult {
  int dim = 0;
  std::vector<Cochain> representatives;  // cocycles spanning the cohomology
};

HomologyResult homology(const SimplicialComplex& K, const LocalSystem& L,
                        int p);
CohomologyResult cohomology(const SimplicialComplex& K, const LocalSystem& L,
                            int p);

/// Euler characteristic of the complex.
long euler_characteristic(const SimplicialComplex& K);

/// Kronecker pairing of a p-cochain with a p-chain through nu, transported
/// to the fiber of G at the basepoint along BFS edge paths.  Canonical when
/// G has trivial monodromy.
Vector kronecker(const SimplicialComplex& K, const LocalSystem& G,
                 const PairingRule& nu, const Cochain& a, const Chain& c,
                 int basepoint);

/// Front-face/back-face cup product; the back-face value is transported to
/// the front vertex along the edge (v_0, v_p).
Cochain cup(const SimplicialComplex& K, const LocalSystem& F,
            const PairingRule& nu, const Cochain& a, const Cochain& b);

/// Cap product H^p x C_m -> C_{m-p}: the cochain eats the back p-face,
/// the front face survives; satisfies <a cup b, c> = <a, b cap c>.
Chain cap(const SimplicialComplex& K, const LocalSystem& E,
          const PairingRule& nu, const Cochain& a, const Chain& c);

/// Fundamental cycle sum_t orientation(t) * (t (x) 1) over the trivial
/// rank-1 system; requires the fundamental-class invariants.
Chain fundamental_class(const SimplicialComplex& K);

/// Cap with the fundamental class: H^p(X,E) -> H_{n-p}(X,E).
Chain cap_fundamental(const SimplicialComplex& K, const LocalSystem& E,
                      const Cochain& a);

/// The cohomology class alpha with [alpha cap [X]] = [c], as a
/// representative cocycle; exact linear solve on homology bases.
Cochain poincare_dual(const SimplicialComplex& K, const LocalSystem& E,
                      const Chain& c);

/// Coordinates of the class of cycle z in the representative basis of
/// homology(K, L, z.degree).
Vector homology_class_coordinates(const SimplicialComplex& K,
                                  const LocalSystem& L, const Chain& z);

bool same_homology_class(const SimplicialComplex& K, const LocalSystem& L,
                         const Chain& z1, const Chain& z2);

/// Flattened coefficient vector of a chain / cochain (blocks by simplex id).
Vector chain_to_vector(const SimplicialComplex& K, const LocalSystem& L,
                       const Chain& c);
Chain chain_from_vector(const SimplicialComplex& K, const LocalSystem& L,
                        int degree, const Vector& v);
Vector cochain_to_vector(const SimplicialComplex& K, const LocalSystem& L,
                         const Cochain& a);
Cochain cochain_from_vector(const SimplicialComplex& K, const LocalSystem& L,
                            int degree, const Vector& v);

}  // namespace twisthom::localsys
