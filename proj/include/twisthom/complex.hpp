#pragma once

#include <map>
#include <optional>
#include <vector>

#include "twisthom/errors.hpp"

namespace twisthom::localsys {

/// Ordered simplex: strictly increasing vertex ids.  The sorted order is
/// the chosen ordering of every simplex.
using Simplex = std::vector<int>;

/// Finite simplicial complex, closed under taking faces.  Simplices are
/// stored per dimension in lexicographic order, which fixes the simplex ids
/// used by chains and cochains.  Optionally carries orientation signs for
/// the top-dimensional simplices; when the fundamental-class invariants
/// hold (pure, closed, boundaries cancel) the complex can serve as a closed
/// oriented manifold.
class SimplicialComplex {
 public:
  SimplicialComplex(int num_vertices, std::vector<std::vector<Simplex>> by_dim,
                    std::optional<std::vector<int>> top_orientation);

  /// Builds the downward closure of the given simplices.
  static SimplicialComplex from_maximal(
      int num_vertices, const std::vector<Simplex>& maximal,
      std::optional<std::vector<int>> top_orientation = std::nullopt);

  int num_vertices() const { return num_vertices_; }
  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  int count(int p) const {
    return p < 0 || p > dim() ? 0
                              : static_cast<int>(by_dim_[static_cast<size_t>(p)].size());
  }
  const std::vector<Simplex>& simplices(int p) const;
  const Simplex& simplex(int p, int id) const;
  /// Id of a simplex within its dimension, or -1 when absent.
  int id_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return id_of(s) >= 0; }

  const std::optional<std::vector<int>>& top_orientation() const {
    return orientation_;
  }

  /// Checks purity, the two-cofaces condition and boundary cancellation
  /// for the stored orientation; throws ValidationError on failure.
  void require_fundamental_class() const;
  bool has_fundamental_class() const;

  /// Orientation signs making top boundaries cancel, when the complex is a
  /// closed orientable pseudomanifold.  Deterministic: the first top
  /// simplex gets +1 on each connected component.
  std::optional<std::vector<int>> compute_orientation() const;

  /// BFS edge path between two vertices in the 1-skeleton; throws when the
  /// vertices are not connected.
  std::vector<int> edge_path(int from, int to) const;

  /// i-th face (vertex i omitted).
  static Simplex face(const Simplex& s, int i);

 private:
  int num_vertices_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, int>> index_;
  std::optional<std::vector<int>> orientation_;
  std::vector<std::vector<int>> vertex_neighbors_;

  void check_faces_present() const;
};

}  // namespace twisthom::localsys
