#pragma once

#include <map>
#include <vector>

#include "twisthom/matrix.hpp"

namespace twisthom::barcomplex {

using exactfield::Field;
using exactfield::Matrix;
using exactfield::Scalar;
using exactfield::Vector;

/// Finite group given by its multiplication table.  Associativity, the
/// identity and inverses are validated on construction.
class FiniteGroup {
 public:
  FiniteGroup(int order, std::vector<int> table);

  static FiniteGroup cyclic(int n);
  /// Symmetric group on n letters (n small), elements in lexicographic
  /// one-line order.
  static FiniteGroup symmetric(int n);

  int order() const { return order_; }
  int mul(int g, int h) const {
    return table_[static_cast<size_t>(g) * order_ + h];
  }
  int inverse(int g) const { return inv_[static_cast<size_t>(g)]; }
  int identity() const { return identity_; }
  const std::vector<int>& table() const { return table_; }

 private:
  int order_;
  std::vector<int> table_;
  int identity_ = -1;
  std::vector<int> inv_;
};

/// Exact matrix representation of a finite group; the homomorphism
/// property is validated exhaustively.
class GroupRep {
 public:
  GroupRep(const FiniteGroup& group, int rank, Field field,
           std::vector<Matrix> matrices);

  static GroupRep trivial(const FiniteGroup& group, int rank,
                          Field field = Field::rationals());

  int rank() const { return rank_; }
  const Field& field() const { return field_; }
  const Matrix& matrix(int g) const { return mats_[static_cast<size_t>(g)]; }
  Vector act(int g, const Vector& v) const { return matrix(g) * v; }

 private:
  int rank_;
  Field field_;
  std::vector<Matrix> mats_;
};

/// Chain of the (unnormalized) bar complex: formal sum of p-tuples of group
/// elements with module coefficients.  Degree-0 chains are module vectors,
/// keyed by the empty tuple.
struct BarChain {
  int degree = 0;
  std::map<std::vector<int>, Vector> terms;

  bool is_zero() const;
  BarChain& add(const std::vector<int>& tuple, const Vector& v);
};

BarChain operator+(const BarChain& a, const BarChain& b);
BarChain operator-(const BarChain& a, const BarChain& b);
BarChain operator*(const Scalar& s, const BarChain& c);
bool operator==(const BarChain& a, const BarChain& b);

/// The bar differential: first face acts on the coefficient, middle faces
/// multiply adjacent entries, last face drops the final entry.
BarChain bar_boundary(const FiniteGroup& G, const GroupRep& rho,
                      const BarChain& c);

/// dim H_p of the bar complex over the exact field.  The chain groups have
/// dimension |G|^p * rank, so degrees above the cap are rejected.
int group_homology(const FiniteGroup& G, const GroupRep& rho, int p,
                   int degree_cap = 4);

struct DecomposableCheck {
  bool accepted = false;
  BarChain chain;     // (gamma) (x) v when accepted
  Vector residual;    // rho(gamma) v - v when rejected
};

/// The 1-cycle gamma (x) v when rho(gamma) v = v; otherwise the residual.
DecomposableCheck decomposable_cycle(const FiniteGroup& G, const GroupRep& rho,
                                     int gamma, const Vector& v);

/// Group homomorphism between finite groups; validated exhaustively.
struct GroupHom {
  const FiniteGroup* source;
  const FiniteGroup* target;
  std::vector<int> image;  // per source element

  GroupHom(const FiniteGroup& src, const FiniteGroup& dst,
           std::vector<int> img);
  int operator()(int g) const { return image[static_cast<size_t>(g)]; }
};

/// Relabels every group element in every tuple through the homomorphism;
/// a chain map when the source module is the restriction of the target one.
BarChain pushforward(const GroupHom& f, const BarChain& c);

}  // namespace twisthom::barcomplex
