#include "twisthom/barcomplex.hpp"

#include <algorithm>
#include <numeric>

namespace twisthom::barcomplex {

FiniteGroup::FiniteGroup(int order, std::vector<int> table)
    : order_(order), table_(std::move(table)) {
  if (order_ <= 0) throw ValidationError("group order must be positive");
  if (table_.size() != static_cast<size_t>(order_) * order_)
    throw ValidationError("multiplication table size mismatch");
  for (int v : table_)
    if (v < 0 || v >= order_)
      throw ValidationError("multiplication table entry out of range");
  for (int e = 0; e < order_; ++e) {
    bool left = true, right = true;
    for (int g = 0; g < order_; ++g) {
      left = left && mul(e, g) == g;
      right = right && mul(g, e) == g;
    }
    if (left && right) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw ValidationError("group has no identity");
  inv_.assign(static_cast<size_t>(order_), -1);
  for (int g = 0; g < order_; ++g) {
    for (int h = 0; h < order_; ++h)
      if (mul(g, h) == identity_ && mul(h, g) == identity_) {
        inv_[static_cast<size_t>(g)] = h;
        break;
      }
    if (inv_[static_cast<size_t>(g)] < 0)
      throw ValidationError("group element has no inverse");
  }
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      for (int c = 0; c < order_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw ValidationError("multiplication table is not associative");
}

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<size_t>(a) * n + b] = (a + b) % n;
  return FiniteGroup(n, std::move(table));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int order = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(
        std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<int> table(static_cast<size_t>(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      std::vector<int> comp(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i)
        comp[static_cast<size_t>(i)] =
            perms[static_cast<size_t>(a)]
                 [static_cast<size_t>(perms[static_cast<size_t>(b)]
                                          [static_cast<size_t>(i)])];
      table[static_cast<size_t>(a) * order + b] = index_of(comp);
    }
  return FiniteGroup(order, std::move(table));
}

GroupRep::GroupRep(const FiniteGroup& group, int rank, Field field,
                   std::vector<Matrix> matrices)
    : rank_(rank), field_(field), mats_(std::move(matrices)) {
  if (rank_ <= 0) throw ValidationError("representation rank must be positive");
  if (mats_.size() != static_cast<size_t>(group.order()))
    throw ValidationError("one matrix per group element required");
  for (const Matrix& m : mats_)
    if (m.rows() != rank_ || m.cols() != rank_)
      throw ValidationError("representation matrix size mismatch");
  if (mats_[static_cast<size_t>(group.identity())] != Matrix::identity(rank_))
    throw ValidationError("identity must act as the identity matrix");
  for (int g = 0; g < group.order(); ++g)
    for (int h = 0; h < group.order(); ++h)
      if (matrix(g) * matrix(h) != matrix(group.mul(g, h)))
        throw ValidationError("matrices do not define a homomorphism");
}

GroupRep GroupRep::trivial(const FiniteGroup& group, int rank, Field field) {
  std::vector<Matrix> mats(static_cast<size_t>(group.order()),
                           Matrix::identity(rank));
  return GroupRep(group, rank, field, std::move(mats));
}

bool BarChain::is_zero() const {
  for (const auto& [t, v] : terms)
    if (!exactfield::is_zero(v)) return false;
  return true;
}

BarChain& BarChain::add(const std::vector<int>& tuple, const Vector& v) {
  if (static_cast<int>(tuple.size()) != degree)
    throw ValidationError("bar chain tuple length mismatch");
  auto it = terms.find(tuple);
  if (it == terms.end()) {
    if (!exactfield::is_zero(v)) terms.emplace(tuple, v);
    return *this;
  }
  it->second = it->second + v;
  if (exactfield::is_zero(it->second)) terms.erase(it);
  return *this;
}

BarChain operator+(const BarChain& a, const BarChain& b) {
  if (a.degree != b.degree) throw ValidationError("bar chain degree mismatch");
  BarChain r = a;
  for (const auto& [t, v] : b.terms) r.add(t, v);
  return r;
}

BarChain operator-(const BarChain& a, const BarChain& b) {
  return a + Scalar(-1) * b;
}

BarChain operator*(const Scalar& s, const BarChain& c) {
  BarChain r;
  r.degree = c.degree;
  if (s.is_zero()) return r;
  for (const auto& [t, v] : c.terms) r.terms.emplace(t, s * v);
  return r;
}

bool operator==(const BarChain& a, const BarChain& b) {
  return a.degree == b.degree && (a - b).is_zero();
}

BarChain bar_boundary(const FiniteGroup& G, const GroupRep& rho,
                      const BarChain& c) {
  if (c.degree < 1)
    throw ValidationError("bar boundary needs degree >= 1");
  BarChain r;
  r.degree = c.degree - 1;
  for (const auto& [tuple, v] : c.terms) {
    {
      std::vector<int> face(tuple.begin() + 1, tuple.end());
      r.add(face, rho.act(tuple[0], v));
    }
    for (int i = 1; i < c.degree; ++i) {
      std::vector<int> face;
      face.reserve(tuple.size() - 1);
      for (int j = 0; j < i - 1; ++j) face.push_back(tuple[j]);
      // Adjacent entries compose in application order (the earlier entry
      // acts first); with the first face acting by gamma_1 on the left
      // this is the order that squares to zero.
      face.push_back(G.mul(tuple[i], tuple[i - 1]));
      for (size_t j = i + 1; j < tuple.size(); ++j) face.push_back(tuple[j]);
      r.add(face, (i % 2 == 0 ? Scalar(1) : Scalar(-1)) * v);
    }
    {
      std::vector<int> face(tuple.begin(), tuple.end() - 1);
      r.add(face, (c.degree % 2 == 0 ? Scalar(1) : Scalar(-1)) * v);
    }
  }
  return r;
}

namespace {

long power(long base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Tuple of the k-th basis chain of C_p, in lexicographic order.
std::vector<int> tuple_of_index(long k, int p, int order) {
  std::vector<int> t(static_cast<size_t>(p));
  for (int i = p - 1; i >= 0; --i) {
    t[static_cast<size_t>(i)] = static_cast<int>(k % order);
    k /= order;
  }
  return t;
}

Vector bar_column(const FiniteGroup& G, const GroupRep& rho, int p, long k,
                  int coord) {
  BarChain basis;
  basis.degree = p;
  Vector v = exactfield::zero_vector(rho.rank());
  v[static_cast<size_t>(coord)] = Scalar(1);
  basis.terms.emplace(tuple_of_index(k, p, G.order()), std::move(v));
  const BarChain b = bar_boundary(G, rho, basis);
  const long rows = power(G.order(), p - 1);
  Vector col = exactfield::zero_vector(static_cast<int>(rows) * rho.rank());
  for (const auto& [tuple, vec] : b.terms) {
    long idx = 0;
    for (int g : tuple) idx = idx * G.order() + g;
    for (int l = 0; l < rho.rank(); ++l)
      col[static_cast<size_t>(idx * rho.rank() + l)] =
          vec[static_cast<size_t>(l)];
  }
  return col;
}

}  // namespace

int group_homology(const FiniteGroup& G, const GroupRep& rho, int p,
                   int degree_cap) {
  if (p < 0) throw ValidationError("negative homology degree");
  if (p > degree_cap)
    throw ValidationError("degree " + std::to_string(p) +
                          " exceeds the configured cap " +
                          std::to_string(degree_cap) +
                          "; the bar complex grows as |G|^p");
  const long dim_p = power(G.order(), p) * rho.rank();

  int rank_dp = 0;
  long kernel_dim = dim_p;
  if (p >= 1) {
    Matrix dp(static_cast<int>(power(G.order(), p - 1)) * rho.rank(),
              static_cast<int>(dim_p));
    for (long k = 0; k < power(G.order(), p); ++k)
      for (int c = 0; c < rho.rank(); ++c) {
        const Vector col = bar_column(G, rho, p, k, c);
        for (size_t rix = 0; rix < col.size(); ++rix)
          dp.at(static_cast<int>(rix),
                static_cast<int>(k * rho.rank() + c)) = col[rix];
      }
    rank_dp = exactfield::rank(dp);
    kernel_dim = dim_p - rank_dp;
  }

  // rank of the next differential, fed column by column so we can stop as
  // soon as it reaches the kernel dimension it is bounded by.
  exactfield::IncrementalRank inc;
  for (long k = 0; k < power(G.order(), p + 1) && inc.rank() < kernel_dim;
       ++k)
    for (int c = 0; c < rho.rank(); ++c)
      inc.add(bar_column(G, rho, p + 1, k, c));
  return static_cast<int>(kernel_dim) - inc.rank();
}

DecomposableCheck decomposable_cycle(const FiniteGroup& G, const GroupRep& rho,
                                     int gamma, const Vector& v) {
  if (gamma < 0 || gamma >= G.order())
    throw ValidationError("group element out of range");
  DecomposableCheck out;
  const Vector moved = rho.act(gamma, v);
  const Vector residual = moved - v;
  if (exactfield::is_zero(residual)) {
    out.accepted = true;
    out.chain.degree = 1;
    out.chain.add({gamma}, v);
  } else {
    out.residual = residual;
  }
  return out;
}

GroupHom::GroupHom(const FiniteGroup& src, const FiniteGroup& dst,
                   std::vector<int> img)
    : source(&src), target(&dst), image(std::move(img)) {
  if (image.size() != static_cast<size_t>(src.order()))
    throw ValidationError("homomorphism must map every source element");
  for (int v : image)
    if (v < 0 || v >= dst.order())
      throw ValidationError("homomorphism image out of range");
  for (int a = 0; a < src.order(); ++a)
    for (int b = 0; b < src.order(); ++b)
      if (image[static_cast<size_t>(src.mul(a, b))] !=
          dst.mul(image[static_cast<size_t>(a)], image[static_cast<size_t>(b)]))
        throw ValidationError("not a group homomorphism");
}

BarChain pushforward(const GroupHom& f, const BarChain& c) {
  BarChain r;
  r.degree = c.degree;
  for (const auto& [tuple, v] : c.terms) {
    std::vector<int> image(tuple.size());
    for (size_t i = 0; i < tuple.size(); ++i) image[i] = f(tuple[i]);
    r.add(image, v);
  }
  return r;
}

}  // namespace twisthom::barcomplex
