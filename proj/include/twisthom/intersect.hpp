#pragma once

#include "twisthom/homology.hpp"

namespace twisthom::localsys {

/// Closed oriented p-dimensional subcomplex of an ambient complex, carrying
/// a seed vector at a basepoint.  The seed is meant to extend to a parallel
/// section over the subcomplex; that extension is checked when the cycle is
/// materialized as a chain.
struct DecomposableCycle {
  int dim = 0;
  std::vector<int> simplex_ids;   // ids into the ambient p-simplices
  std::vector<int> orientation;   // +-1 per listed simplex
  int basepoint = 0;
  Vector seed;
};

/// Validates the subcomplex geometry: closed (facets in exactly two listed
/// simplices, orientations cancel) and basepoint inside the carrier.
DecomposableCycle make_decomposable_cycle(const SimplicialComplex& K, int dim,
                                          std::vector<int> simplex_ids,
                                          std::vector<int> orientation,
                                          int basepoint, Vector seed);

/// All simplices of the carrier of a cycle (the listed simplices and their
/// faces), grouped by dimension.
std::vector<std::vector<Simplex>> carrier(const SimplicialComplex& K,
                                          const DecomposableCycle& Y);

/// Parallel extension of the seed over the carrier's vertices; throws
/// MonodromyObstruction when the monodromy of the subcomplex moves the
/// seed.  The zero seed always extends.
std::map<int, Vector> parallel_section(const SimplicialComplex& K,
                                       const LocalSystem& L,
                                       const DecomposableCycle& Y);

/// The twisted chain sum_i orientation_i * sigma_i (x) s(first vertex).
Chain to_chain(const SimplicialComplex& K, const LocalSystem& L,
               const DecomposableCycle& Y);

struct TransverseIntersectionData {
  bool in_general_position = true;
  /// Common simplices of the two carriers (dimension, simplex).
  std::vector<std::pair<int, Simplex>> common;
  /// Simplices violating dim <= p + q - n.
  std::vector<std::pair<int, Simplex>> violations;
  /// For complementary dimension: isolated intersection vertices with
  /// their local signs (0 records a non-crossing touch).
  std::vector<std::pair<int, int>> points;
};

/// Enumerates the common simplices of the two carriers and applies the
/// general-position dimension test; never throws on violations.
TransverseIntersectionData check_general_position(const SimplicialComplex& K,
                                                  const DecomposableCycle& Y1,
                                                  const DecomposableCycle& Y2);

/// Local intersection sign at an isolated common vertex, complementary
/// dimensions p + q = dim K.  Frame concatenation at the star of the
/// vertex; on surfaces the frames are read off the oriented link circle.
/// Returns +1/-1 for a transverse crossing, 0 for a touch.
int intersection_sign(const SimplicialComplex& K, int vertex,
                      const DecomposableCycle& Y1,
                      const DecomposableCycle& Y2);

/// Geometric intersection product of transverse decomposable cycles of
/// complementary dimension: sum over intersection points of
/// sign * (point (x) nu(s1, s2)).  Agrees with the cup-product class
/// D(PD(b) cup PD(a)).
Chain intersect_cycles(const SimplicialComplex& K, const LocalSystem& E,
                       const LocalSystem& F, const PairingRule& nu,
                       const DecomposableCycle& Y1,
                       const DecomposableCycle& Y2);

}  // namespace twisthom::localsys
