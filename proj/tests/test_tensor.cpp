#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "twisthom/schur.hpp"

using namespace twisthom;
using namespace twisthom::schur;

namespace {

SpacePtr gaussian_lorentz(int n) {
  return QuadraticSpace::standard_lorentz(n, Field::gaussian());
}

Tensor random_tensor(std::mt19937_64& rng, const SpacePtr& sp, int degree,
                     int terms = 4) {
  Tensor t(sp, degree);
  std::uniform_int_distribution<int> pick(0, sp->dim() - 1);
  for (int k = 0; k < terms; ++k) {
    MultiIndex idx(static_cast<size_t>(degree));
    for (auto& a : idx) a = pick(rng);
    t.add_term(idx, testutil::random_rational(rng, 2));
  }
  return t;
}

}  // namespace

TEST_CASE("witt basis pairings") {
  for (int n : {4, 5, 6}) {
    auto sp = gaussian_lorentz(n);
    const auto wb = witt_basis(sp, n);
    const int m = (n + 1) / 2;
    REQUIRE(static_cast<int>(wb.size()) == 2 * m);
    auto u = [&](int i) { return wb[static_cast<size_t>(i - 1)]; };
    auto v = [&](int i) { return wb[static_cast<size_t>(2 * m - i)]; };
    for (int i = 1; i <= m; ++i) {
      CHECK(bilinear_pair(u(i), v(i)) == Scalar(2));
      for (int j = 1; j <= m; ++j) {
        CHECK(bilinear_pair(u(i), u(j)).is_zero());
        CHECK(bilinear_pair(v(i), v(j)).is_zero());
        if (i != j) CHECK(bilinear_pair(u(i), v(j)).is_zero());
        // (e_i, u_j) = delta_ij
        const Tensor e_i = Tensor::basis_vector(sp, i - 1);
        CHECK(bilinear_pair(e_i, u(j)) == Scalar(i == j ? 1 : 0));
      }
    }
  }
  // odd case: u_m, v_m are rational combinations
  auto sp5 = gaussian_lorentz(5);
  const auto wb5 = witt_basis(sp5, 5);
  CHECK(wb5[2].to_vector()[2] == Scalar(1));   // u_3 = e_3 - e_6
  CHECK(wb5[2].to_vector()[5] == Scalar(-1));
  CHECK_THROWS_AS(
      witt_basis(QuadraticSpace::standard_lorentz(4, Field::rationals()), 4),
      ValidationError);
}

TEST_CASE("bilinear pairing basics") {
  auto sp = gaussian_lorentz(4);
  const Tensor e1 = Tensor::basis_vector(sp, 0);
  const Tensor e2 = Tensor::basis_vector(sp, 1);
  const Tensor last = Tensor::basis_vector(sp, 4);  // (e5,e5) = -1
  CHECK(bilinear_pair(Tensor::product(e1, e2), Tensor::product(e1, e2)) ==
        Scalar(1));
  CHECK(bilinear_pair(Tensor::product(last, last),
                      Tensor::product(last, last)) == Scalar(1));
  CHECK(bilinear_pair(last, last) == Scalar(-1));
  CHECK_THROWS_AS(bilinear_pair(e1, Tensor::product(e1, e2)),
                  ValidationError);
}

TEST_CASE("contraction examples") {
  auto sp = gaussian_lorentz(4);
  const Tensor e1 = Tensor::basis_vector(sp, 0);
  const Tensor e2 = Tensor::basis_vector(sp, 1);
  CHECK(contract(Tensor::product(e1, e1), 1, 2).scalar_value() == Scalar(1));

  const auto wb = witt_basis(sp, 4);
  CHECK(contract(Tensor::product(wb[0], wb[0]), 1, 2).is_zero());

  const Tensor t = Tensor::product(Tensor::product(e1, e2), e1);
  CHECK(contract(t, 1, 3) == e2);
  CHECK_THROWS_AS(contract(t, 0, 2), ValidationError);
  CHECK_THROWS_AS(contract(t, 2, 4), ValidationError);
}

TEST_CASE("insertion examples") {
  auto sp = gaussian_lorentz(4);
  const int N = sp->dim();
  const Tensor one = Tensor::scalar(sp, Scalar(1));
  const Tensor inserted = insert(one, 1, 2);
  // inverse of diag(1,1,1,1,-1): sum e_i x e_i - e_5 x e_5
  for (int i = 0; i < N; ++i)
    CHECK(inserted.coefficient({i, i}) == Scalar(i == N - 1 ? -1 : 1));
  CHECK(contract(inserted, 1, 2).scalar_value() == Scalar(N));

  const auto wb = witt_basis(sp, 4);
  const Tensor uu = Tensor::product(wb[0], wb[0]);
  const Tensor theta = insert(contract(uu, 1, 2), 1, 2);
  CHECK(theta.is_zero());
}

TEST_CASE("slot permutations act by isometries") {
  auto sp = gaussian_lorentz(3);
  const Tensor e1 = Tensor::basis_vector(sp, 0);
  const Tensor e2 = Tensor::basis_vector(sp, 1);
  const Tensor t = Tensor::product(e1, e2);
  CHECK(sym_act({0, 1}, t) == t);
  CHECK(sym_act({1, 0}, t) == Tensor::product(e2, e1));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 3;
    Permutation p{0, 1, 2};
    std::shuffle(p.begin(), p.end(), rng);
    const Tensor s = random_tensor(rng, sp, d);
    const Tensor u = random_tensor(rng, sp, d);
    CHECK(bilinear_pair(sym_act(p, s), sym_act(p, u)) == bilinear_pair(s, u));
    // group action composes
    Permutation q{0, 1, 2};
    std::shuffle(q.begin(), q.end(), rng);
    Permutation pq(p.size());
    for (size_t i = 0; i < p.size(); ++i) pq[i] = p[static_cast<size_t>(q[i])];
    CHECK(sym_act(pq, s) == sym_act(p, sym_act(q, s)));
  }
}

TEST_CASE("insertion is adjoint to contraction") {
  std::mt19937_64 rng(23);
  auto sp = gaussian_lorentz(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Tensor s = random_tensor(rng, sp, 2);
    const Tensor t = random_tensor(rng, sp, 4);
    CHECK(bilinear_pair(insert(s, 2, 3), t) ==
          bilinear_pair(s, contract(t, 2, 3)));
  }
}
