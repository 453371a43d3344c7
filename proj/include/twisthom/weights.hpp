#pragma once

#include <set>
#include <string>
#include <vector>

#include "twisthom/errors.hpp"

namespace twisthom::weights {

/// Partition: weakly decreasing nonnegative integers.  The normalized form
/// drops trailing zeros; the zero partition is the empty vector.
using Partition = std::vector<long>;

Partition normalized(Partition p);
bool is_partition(const Partition& p);
long partition_weight(const Partition& p);
Partition conjugate(const Partition& p);
std::string partition_str(const Partition& p);

/// Dominant weight (b_1,...,b_m) for SO(n,1), m = floor((n+1)/2),
/// restricted to integral nonnegative entries.
class DominantWeight {
 public:
  DominantWeight(int ambient_n, std::vector<long> entries);

  int ambient_n() const { return n_; }
  int m() const { return (n_ + 1) / 2; }
  const std::vector<long>& entries() const { return entries_; }
  Partition partition() const { return normalized(entries_); }

 private:
  int n_;
  std::vector<long> entries_;
};

/// Set of cohomology degrees; when nonempty it is the contiguous interval
/// [i(mu), n - i(mu)].
struct DegreeRange {
  std::vector<int> degrees;
  bool empty() const { return degrees.empty(); }
};

/// Number of nonzero entries i(mu).
int support_count(const DominantWeight& mu);
int support_count(const Partition& mu);

/// True when every twisted cohomology group vanishes for every cocompact
/// lattice: odd n with full support.
bool vanishes_identically(const DominantWeight& mu);

/// Empty when vanishes_identically(mu); otherwise [i(mu), n - i(mu)].
DegreeRange nonvanishing_range(const DominantWeight& mu);

/// R(q(lambda)) = i(lambda).  Throws NoCompatibleParabolic in the odd-n
/// full-support case, where no compatible theta-stable parabolic exists.
int levi_R(const DominantWeight& lambda);

/// The two cohomology degrees {i(lambda), n - i(lambda)} of the standard
/// module attached to lambda.  Same precondition as levi_R.
std::set<int> aq_degrees(const DominantWeight& lambda);

/// All partitions nu interlacing mu: b_1 >= c_1 >= b_2 >= c_2 >= ... >= 0,
/// in decreasing lexicographic order.
std::vector<Partition> branch(const Partition& mu);

}  // namespace twisthom::weights
