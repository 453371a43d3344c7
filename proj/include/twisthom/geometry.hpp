#pragma once

#include <cstdint>
#include <optional>

#include "twisthom/schur.hpp"

namespace twisthom::geometry {

using exactfield::Field;
using exactfield::Matrix;
using exactfield::Scalar;
using exactfield::Vector;
using schur::SpacePtr;
using weights::Partition;

/// The standard arithmetic quadratic form
///   f(x) = x_1^2 + ... + x_n^2 - sqrt(m) x_{n+1}^2
/// over Q(sqrt m), m square-free.  Signature (n,1) at the embedding
/// sqrt(m) -> +sqrt(m) and (n+1,0) at the other one.
struct RationalQuadraticForm {
  int n;
  long m;
  SpacePtr space;  // diag(1,...,1,-sqrt m) over Q(sqrt m)

  RationalQuadraticForm(int n, long m);
};

struct SignaturePair {
  std::pair<int, int> at_plus;   // sqrt(m) -> +sqrt(m)
  std::pair<int, int> at_minus;  // sqrt(m) -> -sqrt(m)
};

/// Exact sign counts of the diagonal at the two real embeddings.
SignaturePair signature_at_embeddings(const RationalQuadraticForm& f);

/// Sign of the form value (v,v) at the chosen embedding.
int norm_sign_at(const RationalQuadraticForm& f, const Vector& v,
                 int embedding_sign);

/// k-tuple of vectors spanning a k-dimensional subspace on which the form
/// is positive definite at the (n,1) embedding.
struct PositiveSubspace {
  std::vector<Vector> basis;

  PositiveSubspace(const RationalQuadraticForm& f, std::vector<Vector> x);
  int dim() const { return static_cast<int>(basis.size()); }
};

/// Gram matrix of a vector tuple for the form.
Matrix tuple_gram(const RationalQuadraticForm& f,
                  const std::vector<Vector>& x);
/// Positive definiteness at the (n,1) embedding via leading minors.
bool positive_definite_at_standard_embedding(const RationalQuadraticForm& f,
                                             const std::vector<Vector>& x);
int span_dimension(const std::vector<Vector>& x);

/// The isometric involution r_X: -1 on X, +1 on the orthogonal complement.
Matrix reflection(const RationalQuadraticForm& f, const PositiveSubspace& X);

/// Exact isometry fixing X pointwise, built by a Cayley transform
/// (I - A)(I + A)^{-1} from a seeded random form-antisymmetric A that
/// kills X.  Deterministic per seed; retries internally when I + A is
/// singular.
Matrix sample_pointwise_stabilizer(const RationalQuadraticForm& f,
                                   const PositiveSubspace& X, uint64_t seed);

/// One verified condition of a tuple search.
struct CheckRecord {
  std::string name;
  bool passed = false;
  std::string value;  // exact witness value, printable
};

struct SearchResult {
  bool found = false;
  long trials_used = 0;
  uint64_t seed = 0;
  std::vector<Vector> tuple;
  std::vector<CheckRecord> checks;  // for the returned witness
};

/// Exact re-verification of the three conditions on a candidate tuple y:
/// nonzero pairing (tau_x, tau_{y'}), full span dimension, positive
/// definiteness.  Static checking code, shared by the searches and tests.
std::vector<CheckRecord> verify_complementary_tuple(
    const RationalQuadraticForm& f, const std::vector<Vector>& x,
    const Partition& mu, const std::vector<Vector>& y);

/// Random search for a rational (n-k)-tuple y with
///   (tau_x, tau_{y'}) != 0,  dim span(x,y) = n,  (,)|span positive
/// definite, where y' is the first k entries of y.  Requires
/// i(mu) <= k <= floor(n/2); throws InfeasibleError otherwise and
/// TrialsExhaustedError when no witness appears.
SearchResult complementary_tuple_search(const RationalQuadraticForm& f,
                                        const std::vector<Vector>& x,
                                        const Partition& mu, long trials,
                                        uint64_t seed);

struct CupSearchResult {
  bool found = false;
  long trials_used = 0;
  uint64_t seed = 0;
  std::vector<Vector> tuple;
  std::vector<CheckRecord> checks;
  Scalar pairing1, pairing2;  // the two nonzero pairings of the witness
};

std::vector<CheckRecord> verify_cup_tuple(const RationalQuadraticForm& f,
                                          int q1, int q2, const Partition& mu1,
                                          const Partition& mu2,
                                          const std::vector<Vector>& w);

/// Search for an (n - q1 - q2)-tuple w with nonzero pairings
/// (tau_{x'}, tau_{w'}) and (tau_{y'}, tau_{w''}) plus span and positivity
/// conditions, where x = (e_1..e_{q1}), y = (e_{q1+1}..e_{q1+q2}).
/// Requires i(mu1) <= q1, i(mu2) <= q2, q1 + q2 <= floor(n/2).
CupSearchResult cup_tuple_search(const RationalQuadraticForm& f, int q1,
                                 int q2, const Partition& mu1,
                                 const Partition& mu2, long trials,
                                 uint64_t seed);

}  // namespace twisthom::geometry
