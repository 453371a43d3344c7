#include "twisthom/geometry.hpp"

#include <random>

namespace twisthom::geometry {

RationalQuadraticForm::RationalQuadraticForm(int n_, long m_) : n(n_), m(m_) {
  if (n < 1) throw ValidationError("form needs n >= 1");
  const Field field = Field::quadratic(m);  // validates square-free m > 1
  Vector diag(static_cast<size_t>(n) + 1, Scalar(1));
  diag[static_cast<size_t>(n)] = -Scalar::sqrt_of(m);
  space = schur::QuadraticSpace::from_gram(Matrix::diagonal(diag), field);
}

SignaturePair signature_at_embeddings(const RationalQuadraticForm& f) {
  SignaturePair sig{{0, 0}, {0, 0}};
  for (int i = 0; i <= f.n; ++i) {
    const Scalar& d = f.space->gram().at(i, i);
    (d.sign_at_embedding(+1) > 0 ? sig.at_plus.first : sig.at_plus.second)++;
    (d.sign_at_embedding(-1) > 0 ? sig.at_minus.first
                                 : sig.at_minus.second)++;
  }
  return sig;
}

int norm_sign_at(const RationalQuadraticForm& f, const Vector& v,
                 int embedding_sign) {
  Scalar norm(0);
  const Matrix& g = f.space->gram();
  for (int i = 0; i <= f.n; ++i)
    for (int j = 0; j <= f.n; ++j) {
      if (g.at(i, j).is_zero()) continue;
      norm += v[static_cast<size_t>(i)] * g.at(i, j) *
              v[static_cast<size_t>(j)];
    }
  return norm.sign_at_embedding(embedding_sign);
}

Matrix tuple_gram(const RationalQuadraticForm& f,
                  const std::vector<Vector>& x) {
  const int k = static_cast<int>(x.size());
  const Matrix& g = f.space->gram();
  Matrix out(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      Scalar s(0);
      for (int i = 0; i <= f.n; ++i) {
        if (x[static_cast<size_t>(a)][static_cast<size_t>(i)].is_zero())
          continue;
        for (int j = 0; j <= f.n; ++j)
          if (!g.at(i, j).is_zero())
            s += x[static_cast<size_t>(a)][static_cast<size_t>(i)] *
                 g.at(i, j) * x[static_cast<size_t>(b)][static_cast<size_t>(j)];
      }
      out.at(a, b) = std::move(s);
    }
  return out;
}

bool positive_definite_at_standard_embedding(const RationalQuadraticForm& f,
                                             const std::vector<Vector>& x) {
  const Matrix g = tuple_gram(f, x);
  // Sylvester: all leading principal minors positive at the (n,1)
  // embedding.
  for (int k = 1; k <= g.rows(); ++k) {
    Matrix lead(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead.at(i, j) = g.at(i, j);
    if (exactfield::determinant(std::move(lead)).sign_at_embedding(+1) <= 0)
      return false;
  }
  return true;
}

int span_dimension(const std::vector<Vector>& x) {
  return exactfield::rank(Matrix::from_rows(x));
}

PositiveSubspace::PositiveSubspace(const RationalQuadraticForm& f,
                                   std::vector<Vector> x)
    : basis(std::move(x)) {
  for (const Vector& v : basis)
    if (static_cast<int>(v.size()) != f.n + 1)
      throw ValidationError("subspace vector length mismatch");
  if (span_dimension(basis) != dim())
    throw ValidationError("subspace vectors are dependent");
  if (!positive_definite_at_standard_embedding(f, basis))
    throw ValidationError("form is not positive definite on the subspace");
}

Matrix reflection(const RationalQuadraticForm& f, const PositiveSubspace& X) {
  const int N = f.n + 1;
  const Matrix B = Matrix::from_rows(X.basis).transposed();  // N x k
  const Matrix G = f.space->gram();
  const Matrix BtG = B.transposed() * G;
  const Matrix small = BtG * B;  // k x k, invertible by positivity
  const Matrix proj = B * exactfield::inverse(small) * BtG;
  return Matrix::identity(N) - proj * Scalar(2);
}

namespace {

Scalar random_rational(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, 2);
  return Scalar::rational(num(rng), den(rng));
}

Vector random_vector(std::mt19937_64& rng, int len, long bound) {
  Vector v(static_cast<size_t>(len));
  for (auto& e : v) e = random_rational(rng, bound);
  return v;
}

}  // namespace

Matrix sample_pointwise_stabilizer(const RationalQuadraticForm& f,
                                   const PositiveSubspace& X, uint64_t seed) {
  const int N = f.n + 1;
  const Matrix G = f.space->gram();
  const Matrix Ginv = f.space->gram_inverse();
  // Euclidean complement of the span: S = Y T Y^t kills X for any T.
  const auto comp = exactfield::kernel_basis(Matrix::from_rows(X.basis));
  const int c = static_cast<int>(comp.size());
  const Matrix Y = Matrix::from_columns(comp);

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    Matrix T(c, c);
    for (int i = 0; i < c; ++i)
      for (int j = i + 1; j < c; ++j) {
        T.at(i, j) = random_rational(rng, 2);
        T.at(j, i) = -T.at(i, j);
      }
    const Matrix A = Ginv * (Y * T * Y.transposed());
    const Matrix iplus = Matrix::identity(N) + A;
    try {
      const Matrix g = (Matrix::identity(N) - A) * exactfield::inverse(iplus);
      return g;
    } catch (const SingularMatrixError&) {
      continue;  // resample
    }
  }
  throw Error("Cayley sampling failed: I + A singular in every attempt");
}

namespace {

std::vector<Vector> concat(const std::vector<Vector>& a,
                           const std::vector<Vector>& b) {
  std::vector<Vector> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

CheckRecord pairing_check(const std::string& name, const Scalar& value) {
  return CheckRecord{name, !value.is_zero(), value.str()};
}

}  // namespace

std::vector<CheckRecord> verify_complementary_tuple(
    const RationalQuadraticForm& f, const std::vector<Vector>& x,
    const Partition& mu, const std::vector<Vector>& y) {
  const int k = static_cast<int>(x.size());
  if (static_cast<int>(y.size()) != f.n - k)
    throw ValidationError("tuple must have n-k entries");
  if (k > f.n - k)
    throw ValidationError("verification needs k <= n-k so that the "
                          "truncated tuple exists");
  std::vector<CheckRecord> checks;
  const std::vector<Vector> y_prime(y.begin(), y.begin() + k);
  const Scalar pairing = schur::pair_invariants(f.space, x, y_prime, mu);
  checks.push_back(pairing_check("pairing_nonzero", pairing));
  const auto all = concat(x, y);
  const int dim = span_dimension(all);
  checks.push_back(CheckRecord{"span_dimension", dim == f.n,
                               std::to_string(dim)});
  const bool pos = positive_definite_at_standard_embedding(f, all);
  checks.push_back(CheckRecord{"positive_definite", pos, pos ? "yes" : "no"});
  return checks;
}

SearchResult complementary_tuple_search(const RationalQuadraticForm& f,
                                        const std::vector<Vector>& x,
                                        const Partition& mu, long trials,
                                        uint64_t seed) {
  const int k = static_cast<int>(x.size());
  const int i_mu = weights::support_count(mu);
  if (i_mu > k)
    throw InfeasibleError("a tuple with dim(X) = " + std::to_string(k) +
                          " cannot carry an invariant for i(mu) = " +
                          std::to_string(i_mu) +
                          "; dim(X) >= i(mu) is required");
  if (k > f.n / 2)
    throw InfeasibleError("k = " + std::to_string(k) +
                          " exceeds floor(n/2) = " + std::to_string(f.n / 2) +
                          "; the complementary tuple would be too short");
  PositiveSubspace validate_x(f, x);  // x itself must be admissible

  SearchResult res;
  res.seed = seed;
  std::mt19937_64 rng(seed);
  for (long t = 1; t <= trials; ++t) {
    const long bound = 2L << static_cast<int>(t / 2000);
    std::vector<Vector> y;
    for (int j = 0; j < f.n - k; ++j)
      y.push_back(random_vector(rng, f.n + 1, bound));
    auto checks = verify_complementary_tuple(f, x, mu, y);
    bool ok = true;
    for (const auto& c : checks) ok = ok && c.passed;
    if (ok) {
      res.found = true;
      res.trials_used = t;
      res.tuple = std::move(y);
      res.checks = std::move(checks);
      return res;
    }
  }
  throw TrialsExhaustedError("no witness tuple in " + std::to_string(trials) +
                             " trials (seed " + std::to_string(seed) + ")");
}

std::vector<CheckRecord> verify_cup_tuple(const RationalQuadraticForm& f,
                                          int q1, int q2, const Partition& mu1,
                                          const Partition& mu2,
                                          const std::vector<Vector>& w) {
  const int p1 = weights::support_count(mu1);
  const int p2 = weights::support_count(mu2);
  if (q1 < 0 || q2 < 0 || p1 > q1 || p2 > q2 ||
      q1 + p2 > f.n - q1 - q2 || p1 > f.n - q1 - q2)
    throw ValidationError("verification needs i(mu) within the degrees and "
                          "q1+q2 <= n-(q1+q2)");
  if (static_cast<int>(w.size()) != f.n - q1 - q2)
    throw ValidationError("tuple must have n-q1-q2 entries");
  auto basis_vec = [&](int i) {
    Vector v(static_cast<size_t>(f.n) + 1);
    v[static_cast<size_t>(i)] = Scalar(1);
    return v;
  };
  std::vector<Vector> x_prime, y_prime, e_all;
  for (int i = 0; i < p1; ++i) x_prime.push_back(basis_vec(i));
  for (int i = 0; i < p2; ++i) y_prime.push_back(basis_vec(q1 + i));
  for (int i = 0; i < q1 + q2; ++i) e_all.push_back(basis_vec(i));

  const std::vector<Vector> w_prime(w.begin(), w.begin() + p1);
  const std::vector<Vector> w_second(w.begin() + q1, w.begin() + q1 + p2);

  std::vector<CheckRecord> checks;
  checks.push_back(pairing_check(
      "pairing1_nonzero",
      schur::pair_invariants(f.space, x_prime, w_prime, mu1)));
  checks.push_back(pairing_check(
      "pairing2_nonzero",
      schur::pair_invariants(f.space, y_prime, w_second, mu2)));
  const auto all = concat(e_all, w);
  const int dim = span_dimension(all);
  checks.push_back(CheckRecord{"span_dimension", dim == f.n,
                               std::to_string(dim)});
  const bool pos = positive_definite_at_standard_embedding(f, all);
  checks.push_back(CheckRecord{"positive_definite", pos, pos ? "yes" : "no"});
  return checks;
}

CupSearchResult cup_tuple_search(const RationalQuadraticForm& f, int q1,
                                 int q2, const Partition& mu1,
                                 const Partition& mu2, long trials,
                                 uint64_t seed) {
  const int p1 = weights::support_count(mu1);
  const int p2 = weights::support_count(mu2);
  if (p1 > q1 || p2 > q2)
    throw InfeasibleError("need i(mu1) <= q1 and i(mu2) <= q2");
  if (q1 + q2 > f.n / 2)
    throw InfeasibleError("q1 + q2 = " + std::to_string(q1 + q2) +
                          " exceeds floor(n/2) = " + std::to_string(f.n / 2));
  if (q1 < 0 || q2 < 0 || q1 + q2 > f.n)
    throw ValidationError("bad cup search degrees");

  CupSearchResult res;
  res.seed = seed;
  std::mt19937_64 rng(seed);
  for (long t = 1; t <= trials; ++t) {
    const long bound = 2L << static_cast<int>(t / 2000);
    std::vector<Vector> w;
    for (int j = 0; j < f.n - q1 - q2; ++j)
      w.push_back(random_vector(rng, f.n + 1, bound));
    auto checks = verify_cup_tuple(f, q1, q2, mu1, mu2, w);
    bool ok = true;
    for (const auto& c : checks) ok = ok && c.passed;
    if (ok) {
      res.found = true;
      res.trials_used = t;
      res.tuple = std::move(w);
      res.pairing1 = Scalar::parse(checks[0].value);
      res.pairing2 = Scalar::parse(checks[1].value);
      res.checks = std::move(checks);
      return res;
    }
  }
  throw TrialsExhaustedError("no witness tuple in " + std::to_string(trials) +
                             " trials (seed " + std::to_string(seed) + ")");
}

}  // namespace twisthom::geometry
