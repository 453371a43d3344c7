#include "twisthom/weights.hpp"

#include <algorithm>
#include <sstream>

namespace twisthom::weights {

Partition normalized(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

long partition_weight(const Partition& p) {
  long s = 0;
  for (long x : p) s += x;
  return s;
}

Partition conjugate(const Partition& p) {
  Partition q = normalized(p);
  if (q.empty()) return {};
  Partition c(static_cast<size_t>(q[0]), 0);
  for (long part : q)
    for (long j = 0; j < part; ++j) ++c[static_cast<size_t>(j)];
  return c;
}

std::string partition_str(const Partition& p) {
  std::ostringstream os;
  os << '(';
  const Partition q = normalized(p);
  if (q.empty()) {
    os << '0';
  } else {
    for (size_t i = 0; i < q.size(); ++i) {
      if (i) os << ',';
      os << q[i];
    }
  }
  os << ')';
  return os.str();
}

DominantWeight::DominantWeight(int ambient_n, std::vector<long> entries)
    : n_(ambient_n), entries_(std::move(entries)) {
  if (n_ < 1) throw ValidationError("ambient n must be positive");
  const int m = (n_ + 1) / 2;
  if (static_cast<int>(entries_.size()) != m)
    throw ValidationError("weight for SO(" + std::to_string(n_) +
                          ",1) needs exactly " + std::to_string(m) +
                          " entries");
  if (!is_partition(entries_))
    throw ValidationError("weight entries must be weakly decreasing and "
                          "nonnegative");
}

int support_count(const Partition& mu) {
  int c = 0;
  for (long x : mu)
    if (x != 0) ++c;
  return c;
}

int support_count(const DominantWeight& mu) {
  return support_count(mu.entries());
}

bool vanishes_identically(const DominantWeight& mu) {
  return mu.ambient_n() == 2 * mu.m() - 1 && support_count(mu) == mu.m();
}

DegreeRange nonvanishing_range(const DominantWeight& mu) {
  DegreeRange r;
  if (vanishes_identically(mu)) return r;
  const int i = support_count(mu);
  for (int p = i; p <= mu.ambient_n() - i; ++p) r.degrees.push_back(p);
  return r;
}

int levi_R(const DominantWeight& lambda) {
  if (vanishes_identically(lambda))
    throw NoCompatibleParabolic(
        "no theta-stable parabolic is compatible with a full-support weight "
        "when n = 2m-1");
  return support_count(lambda);
}

std::set<int> aq_degrees(const DominantWeight& lambda) {
  const int i = levi_R(lambda);
  return {i, lambda.ambient_n() - i};
}

namespace {

void branch_rec(const Partition& mu, size_t row, long upper, Partition& cur,
                std::vector<Partition>& out) {
  if (row == mu.size()) {
    out.push_back(normalized(cur));
    return;
  }
  const long lower = row + 1 < mu.size() ? mu[row + 1] : 0;
  for (long c = std::min(upper, mu[row]); c >= lower; --c) {
    cur.push_back(c);
    branch_rec(mu, row + 1, c, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> branch(const Partition& mu_in) {
  if (!is_partition(mu_in)) throw ValidationError("branch: not a partition");
  const Partition mu = normalized(mu_in);
  std::vector<Partition> out;
  Partition cur;
  branch_rec(mu, 0, mu.empty() ? 0 : mu[0], cur, out);
  std::sort(out.begin(), out.end(),
            [](const Partition& a, const Partition& b) { return a > b; });
  return out;
}

}  // namespace twisthom::weights
