#include "twisthom/schur.hpp"

#include <algorithm>
#include <functional>

namespace twisthom::schur {

StandardTableau::StandardTableau(Partition shape)
    : shape_(weights::normalized(std::move(shape))) {
  if (!weights::is_partition(shape_))
    throw ValidationError("tableau shape must be a partition");
  size_ = static_cast<int>(weights::partition_weight(shape_));
  int slot = 0;
  for (long part : shape_) {
    std::vector<int> row;
    for (long j = 0; j < part; ++j) row.push_back(slot++);
    rows_.push_back(std::move(row));
  }
  const long width = shape_.empty() ? 0 : shape_[0];
  for (long j = 0; j < width; ++j) {
    std::vector<int> col;
    for (size_t r = 0; r < shape_.size(); ++r)
      if (shape_[r] > j) col.push_back(rows_[r][static_cast<size_t>(j)]);
    cols_.push_back(std::move(col));
  }
}

namespace {

// Enumerate all permutations of {0..d-1} preserving the given blocks,
// as products of per-block permutations; signs multiply.
void block_permutations(int d, const std::vector<std::vector<int>>& blocks,
                        std::vector<std::pair<Permutation, int>>& out) {
  Permutation id(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) id[static_cast<size_t>(i)] = i;
  out.push_back({id, 1});
  for (const auto& block : blocks) {
    std::vector<int> arrangement = block;
    std::sort(arrangement.begin(), arrangement.end());
    std::vector<std::pair<Permutation, int>> grown;
    do {
      // Sign of this arrangement as a permutation of the sorted block.
      int sign = 1;
      for (size_t a = 0; a < arrangement.size(); ++a)
        for (size_t b = a + 1; b < arrangement.size(); ++b)
          if (arrangement[a] > arrangement[b]) sign = -sign;
      for (const auto& [base, base_sign] : out) {
        Permutation p = base;
        for (size_t a = 0; a < block.size(); ++a)
          p[static_cast<size_t>(block[a])] = arrangement[a];
        grown.push_back({std::move(p), base_sign * sign});
      }
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    out = std::move(grown);
  }
}

}  // namespace

std::vector<Permutation> row_group(const StandardTableau& T) {
  std::vector<std::pair<Permutation, int>> signed_perms;
  block_permutations(T.size(), T.rows(), signed_perms);
  std::vector<Permutation> out;
  out.reserve(signed_perms.size());
  for (auto& [p, sign] : signed_perms) out.push_back(std::move(p));
  return out;
}

std::vector<std::pair<Permutation, int>> column_group(
    const StandardTableau& T) {
  std::vector<std::pair<Permutation, int>> out;
  block_permutations(T.size(), T.cols(), out);
  return out;
}

long column_group_order(const Partition& mu) {
  long order = 1;
  for (long col_len : weights::conjugate(mu))
    for (long j = 2; j <= col_len; ++j) order *= j;
  return order;
}

Tensor row_symmetrize(const StandardTableau& T, const Tensor& t) {
  if (T.size() != t.degree())
    throw ValidationError("row_symmetrize: |mu| must equal the degree");
  const auto perms = row_group(T);
  Tensor sum(t.space(), t.degree());
  for (const auto& p : perms) sum = sum + sym_act(p, t);
  return sum * Scalar::rational(1, static_cast<long>(perms.size()));
}

Tensor col_antisymmetrize(const StandardTableau& T, const Tensor& t) {
  if (T.size() != t.degree())
    throw ValidationError("col_antisymmetrize: |mu| must equal the degree");
  const auto perms = column_group(T);
  Tensor sum(t.space(), t.degree());
  for (const auto& [p, sign] : perms) {
    Tensor term = sym_act(p, t);
    sum = sign > 0 ? sum + term : sum - term;
  }
  return sum * Scalar::rational(1, static_cast<long>(perms.size()));
}

// ---------------------------------------------------------------------------
// Harmonic projection.
//
// The trace subspace W of degree-d tensors is spanned by the insertions
// Psi_I(e_B) over all slot pairs I and basis multi-indices B of degree d-2.
// A tensor is harmonic iff it is orthogonal to W (insertion and contraction
// are adjoint), and the decomposition tensors = harmonics + W is direct and
// orthogonal, so projecting t onto W along the form is one consistent linear
// solve on the Gram matrix of the spanning set.  The elimination of that
// Gram matrix depends only on (space, degree) and is cached on the space.
// ---------------------------------------------------------------------------

struct HarmonicContext {
  int degree = 0;
  std::vector<Tensor> span;     // spanning tensors of W
  Matrix echelon;               // RREF of [Gram | transform]
  std::vector<int> pivot_cols;
  int gram_cols = 0;
};

namespace {

std::vector<std::pair<int, int>> slot_pairs(int d) {
  std::vector<std::pair<int, int>> ps;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) ps.push_back({i, j});
  return ps;
}

void enumerate_multi_indices(int dim, int degree,
                             const std::function<void(const MultiIndex&)>& f) {
  MultiIndex idx(static_cast<size_t>(degree), 0);
  while (true) {
    f(idx);
    int pos = degree - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == dim - 1) {
      idx[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
  }
}

std::shared_ptr<const HarmonicContext> build_harmonic_context(
    const SpacePtr& space, int degree) {
  auto ctx = std::make_shared<HarmonicContext>();
  ctx->degree = degree;
  if (degree < 2) return ctx;

  for (const auto& [i, j] : slot_pairs(degree)) {
    enumerate_multi_indices(space->dim(), degree - 2, [&](const MultiIndex& b) {
      Tensor base(space, degree - 2);
      base.add_term(b, Scalar(1));
      ctx->span.push_back(insert(base, i, j));
    });
  }
  const int s = static_cast<int>(ctx->span.size());
  ctx->gram_cols = s;
  Matrix aug(s, 2 * s);
  for (int a = 0; a < s; ++a) {
    for (int b = a; b < s; ++b) {
      Scalar g = bilinear_pair(ctx->span[static_cast<size_t>(a)],
                               ctx->span[static_cast<size_t>(b)]);
      aug.at(a, b) = g;
      aug.at(b, a) = std::move(g);
    }
    aug.at(a, s + a) = Scalar(1);
  }
  exactfield::Echelon e = exactfield::reduced_row_echelon(std::move(aug), s);
  ctx->echelon = std::move(e.mat);
  ctx->pivot_cols = std::move(e.pivot_cols);
  return ctx;
}

}  // namespace

std::shared_ptr<const HarmonicContext> QuadraticSpace::harmonic_context(
    int degree) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    const auto it = cache_.find(degree);
    if (it != cache_.end()) return it->second;
  }
  auto ctx = build_harmonic_context(shared_from_this(), degree);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return cache_.emplace(degree, std::move(ctx)).first->second;
}

Tensor harmonic_project(const Tensor& t) {
  const int d = t.degree();
  if (d < 2 || t.is_zero()) return t;
  const auto ctx = t.space()->harmonic_context(d);
  const int s = ctx->gram_cols;

  // Right-hand side (w_a, t), then the cached elimination transform.
  Vector rhs(static_cast<size_t>(s));
  for (int a = 0; a < s; ++a)
    rhs[static_cast<size_t>(a)] =
        bilinear_pair(ctx->span[static_cast<size_t>(a)], t);

  Vector reduced(static_cast<size_t>(s));
  for (int r = 0; r < s; ++r) {
    Scalar acc(0);
    for (int a = 0; a < s; ++a) {
      const Scalar& e = ctx->echelon.at(r, s + a);
      if (!e.is_zero() && !rhs[static_cast<size_t>(a)].is_zero())
        acc += e * rhs[static_cast<size_t>(a)];
    }
    reduced[static_cast<size_t>(r)] = std::move(acc);
  }

  // Gram c = rhs is consistent by the orthogonal decomposition of the
  // tensor space; a pivot past the Gram block cannot occur.  The check is
  // an internal invariant, kept on in every build.
  Vector coeff(static_cast<size_t>(s));
  for (size_t r = 0; r < ctx->pivot_cols.size(); ++r) {
    const int pc = ctx->pivot_cols[r];
    if (pc >= s) throw Error("internal: harmonic solve lost consistency");
    coeff[static_cast<size_t>(pc)] = reduced[r];
  }
  for (size_t r = ctx->pivot_cols.size(); r < static_cast<size_t>(s); ++r)
    if (!reduced[r].is_zero())
      throw Error("internal: harmonic solve lost consistency");

  Tensor w(t.space(), d);
  for (int a = 0; a < s; ++a) {
    const Scalar& c = coeff[static_cast<size_t>(a)];
    if (!c.is_zero()) w = w + ctx->span[static_cast<size_t>(a)] * c;
  }
  return t - w;
}

bool is_harmonic(const Tensor& t) {
  for (const auto& [i, j] : slot_pairs(t.degree()))
    if (!contract(t, i, j).is_zero()) return false;
  return true;
}

Tensor tau(SpacePtr space, const std::vector<Vector>& x, const Partition& mu) {
  const Partition shape = weights::normalized(mu);
  if (shape.size() > x.size())
    throw ValidationError("tau: partition has more nonzero parts than "
                          "vectors supplied");
  Tensor sigma = Tensor::scalar(space, Scalar(1));
  for (size_t i = 0; i < shape.size(); ++i)
    sigma = Tensor::product(
        sigma, Tensor::power(Tensor::from_vector(space, x[i]), shape[i]));
  const StandardTableau T(shape);
  return col_antisymmetrize(T, row_symmetrize(T, harmonic_project(sigma)));
}

Scalar pair_invariants(SpacePtr space, const std::vector<Vector>& x,
                       const std::vector<Vector>& y, const Partition& mu) {
  Tensor tx = tau(space, x, mu);
  Tensor ty = tau(space, y, mu);
  return bilinear_pair(tx, ty);
}

bool schur_module_nonzero(const Partition& mu, int dimV) {
  const Partition conj = weights::conjugate(mu);
  const long c1 = conj.empty() ? 0 : conj[0];
  const long c2 = conj.size() > 1 ? conj[1] : 0;
  return c1 + c2 <= dimV;
}

bool invariance_check(const Tensor& t, const Matrix& g) {
  const Matrix& gram = t.space()->gram();
  if (g.transposed() * gram * g != gram)
    throw ValidationError("invariance_check: matrix is not an isometry of "
                          "the form");
  return apply_matrix(g, t) == t;
}

}  // namespace twisthom::schur
