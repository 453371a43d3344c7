#pragma once

// Model complexes, flat systems and random data shared by the test suites.

#include <random>
#include <sys/wait.h>

#include <cstdio>

#include "twisthom/barcomplex.hpp"
#include "twisthom/geometry.hpp"
#include "twisthom/intersect.hpp"

namespace testutil {

using namespace twisthom;
using exactfield::Field;
using exactfield::Matrix;
using exactfield::Scalar;
using exactfield::Vector;
using localsys::Chain;
using localsys::Cochain;
using localsys::DecomposableCycle;
using localsys::LocalSystem;
using localsys::PairingRule;
using localsys::Simplex;
using localsys::SimplicialComplex;

inline Scalar random_rational(std::mt19937_64& rng, long bound = 3) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, 2);
  return Scalar::rational(num(rng), den(rng));
}

inline Vector random_vector(std::mt19937_64& rng, int len, long bound = 3) {
  Vector v(static_cast<size_t>(len));
  for (auto& e : v) e = random_rational(rng, bound);
  return v;
}

inline Matrix random_matrix(std::mt19937_64& rng, int rows, int cols,
                            long bound = 3) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = random_rational(rng, bound);
  return m;
}

inline Matrix random_invertible(std::mt19937_64& rng, int r, long bound = 3) {
  for (;;) {
    Matrix m = random_matrix(rng, r, r, bound);
    if (!exactfield::determinant(m).is_zero()) return m;
  }
}

inline Vector basis_vec(int len, int i) {
  Vector v(static_cast<size_t>(len));
  v[static_cast<size_t>(i)] = Scalar(1);
  return v;
}

// --- model complexes ------------------------------------------------------

inline SimplicialComplex circle_complex(int length) {
  std::vector<Simplex> edges;
  for (int i = 0; i + 1 < length; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, length - 1});
  auto K = SimplicialComplex::from_maximal(length, edges);
  return SimplicialComplex(
      length, {K.simplices(0), K.simplices(1)},
      K.compute_orientation());
}

/// Monodromy M around the circle in the direction of increasing vertices.
inline LocalSystem circle_system(const SimplicialComplex& K, Matrix M,
                                 Field field = Field::rationals()) {
  const int L = K.num_vertices();
  const int r = M.rows();
  std::map<std::pair<int, int>, Matrix> edges;
  for (int i = 0; i + 1 < L; ++i)
    edges.emplace(std::make_pair(i, i + 1), Matrix::identity(r));
  edges.emplace(std::make_pair(0, L - 1), exactfield::inverse(M));
  return LocalSystem(K, r, field, std::move(edges));
}

inline LocalSystem scalar_circle_system(const SimplicialComplex& K, long num,
                                        long den = 1) {
  Matrix m(1, 1);
  m.at(0, 0) = Scalar::rational(num, den);
  return circle_system(K, std::move(m));
}

inline SimplicialComplex octahedron() {
  const std::vector<Simplex> tris = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4},
                                     {0, 1, 4}, {1, 2, 5}, {2, 3, 5},
                                     {3, 4, 5}, {1, 4, 5}};
  auto K = SimplicialComplex::from_maximal(6, tris);
  return SimplicialComplex(
      6, {K.simplices(0), K.simplices(1), K.simplices(2)},
      K.compute_orientation());
}

/// 7-vertex minimal torus: triangles {i,i+1,i+3} and {i,i+2,i+3} mod 7.
inline SimplicialComplex torus_seven() {
  std::vector<Simplex> tris;
  for (int i = 0; i < 7; ++i) {
    Simplex a = {i, (i + 1) % 7, (i + 3) % 7};
    Simplex b = {i, (i + 2) % 7, (i + 3) % 7};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    tris.push_back(a);
    tris.push_back(b);
  }
  auto K = SimplicialComplex::from_maximal(7, tris);
  return SimplicialComplex(
      7, {K.simplices(0), K.simplices(1), K.simplices(2)},
      K.compute_orientation());
}

/// 3x3 grid torus; vertex (i,j) has id 3i+j.  Squares are split along the
/// (i,j)-(i+1,j+1) diagonal.
inline SimplicialComplex torus_grid() {
  auto id = [](int i, int j) { return 3 * ((i + 3) % 3) + ((j + 3) % 3); };
  std::vector<Simplex> tris;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Simplex a = {id(i, j), id(i + 1, j), id(i + 1, j + 1)};
      Simplex b = {id(i, j), id(i, j + 1), id(i + 1, j + 1)};
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      tris.push_back(a);
      tris.push_back(b);
    }
  auto K = SimplicialComplex::from_maximal(9, tris);
  return SimplicialComplex(
      9, {K.simplices(0), K.simplices(1), K.simplices(2)},
      K.compute_orientation());
}

/// Flat system on the grid torus with commuting holonomies A (around the
/// i-direction) and B (around the j-direction).
inline LocalSystem torus_grid_system(const SimplicialComplex& K, Matrix A,
                                     Matrix B,
                                     Field field = Field::rationals()) {
  if (A * B != B * A) throw ValidationError("holonomies must commute");
  const int r = A.rows();
  auto id = [](int i, int j) { return 3 * ((i + 3) % 3) + ((j + 3) % 3); };
  std::map<std::pair<int, int>, Matrix> edges;
  auto put = [&](int from, int to, Matrix M) {
    if (from < to)
      edges.emplace(std::make_pair(from, to), std::move(M));
    else
      edges.emplace(std::make_pair(to, from), exactfield::inverse(M));
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Matrix across_i = (i == 2) ? A : Matrix::identity(r);
      Matrix across_j = (j == 2) ? B : Matrix::identity(r);
      put(id(i, j), id(i + 1, j), across_i);
      put(id(i, j), id(i, j + 1), across_j);
      put(id(i, j), id(i + 1, j + 1), across_i * across_j);
    }
  return LocalSystem(K, r, field, std::move(edges));
}

/// 3x3x3 grid 3-torus, each cube split into six tetrahedra along vertex
/// orderings; vertex (i,j,k) has id 9i+3j+k.
inline SimplicialComplex torus3_grid() {
  auto id = [](int i, int j, int k) {
    return 9 * ((i + 3) % 3) + 3 * ((j + 3) % 3) + ((k + 3) % 3);
  };
  std::vector<Simplex> tets;
  int axes[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (auto& order : axes) {
          int c[3] = {i, j, k};
          Simplex tet = {id(c[0], c[1], c[2])};
          for (int s = 0; s < 3; ++s) {
            c[order[s]] += 1;
            tet.push_back(id(c[0], c[1], c[2]));
          }
          std::sort(tet.begin(), tet.end());
          tets.push_back(tet);
        }
  auto K = SimplicialComplex::from_maximal(27, tets);
  return SimplicialComplex(
      27,
      {K.simplices(0), K.simplices(1), K.simplices(2), K.simplices(3)},
      K.compute_orientation());
}

/// Flat system on the 3-torus with pairwise commuting holonomies.
inline LocalSystem torus3_grid_system(const SimplicialComplex& K, Matrix A,
                                      Matrix B, Matrix C,
                                      Field field = Field::rationals()) {
  if (A * B != B * A || A * C != C * A || B * C != C * B)
    throw ValidationError("holonomies must commute");
  const int r = A.rows();
  const Matrix hol[3] = {A, B, C};
  std::map<std::pair<int, int>, Matrix> edges;
  auto id = [](const int c[3]) {
    return 9 * ((c[0] + 3) % 3) + 3 * ((c[1] + 3) % 3) + ((c[2] + 3) % 3);
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int mask = 1; mask < 8; ++mask) {
          const int from[3] = {i, j, k};
          int to[3] = {i, j, k};
          Matrix M = Matrix::identity(r);
          for (int t = 0; t < 3; ++t)
            if (mask & (1 << t)) {
              to[t] += 1;
              if (from[t] == 2) M = hol[t] * M;
            }
          const int a = id(from);
          const int b = id(to);
          if (a < b)
            edges.emplace(std::make_pair(a, b), M);
          else
            edges.emplace(std::make_pair(b, a), exactfield::inverse(M));
        }
  return LocalSystem(K, r, field, std::move(edges));
}

/// Gauge twist of the trivial system: transports g_b g_a^{-1}.  Trivial
/// monodromy but nontrivial matrices; flat on any complex.
inline LocalSystem gauge_system(const SimplicialComplex& K, int rank,
                                std::mt19937_64& rng) {
  std::vector<Matrix> gauge;
  for (int v = 0; v < K.num_vertices(); ++v)
    gauge.push_back(random_invertible(rng, rank, 2));
  std::map<std::pair<int, int>, Matrix> edges;
  for (const Simplex& e : K.simplices(1))
    edges.emplace(
        std::make_pair(e[0], e[1]),
        gauge[static_cast<size_t>(e[1])] *
            exactfield::inverse(gauge[static_cast<size_t>(e[0])]));
  return LocalSystem(K, rank, Field::rationals(), std::move(edges));
}

/// Oriented circle subcomplex through the given cyclic vertex list.
inline DecomposableCycle circle_cycle(const SimplicialComplex& K,
                                      const std::vector<int>& loop,
                                      int basepoint, Vector seed) {
  std::vector<int> ids, signs;
  for (size_t i = 0; i < loop.size(); ++i) {
    const int a = loop[i];
    const int b = loop[(i + 1) % loop.size()];
    const Simplex e = a < b ? Simplex{a, b} : Simplex{b, a};
    const int id = K.id_of(e);
    if (id < 0) throw ValidationError("loop edge missing from complex");
    ids.push_back(id);
    signs.push_back(a < b ? 1 : -1);
  }
  return localsys::make_decomposable_cycle(K, 1, std::move(ids),
                                           std::move(signs), basepoint,
                                           std::move(seed));
}

/// Cup-product route to the intersection class: D(PD(b) cup PD(a)).
inline Chain intersection_via_cup(const SimplicialComplex& K,
                                  const LocalSystem& E, const LocalSystem& F,
                                  const LocalSystem& G, const PairingRule& nu,
                                  const Chain& a, const Chain& b) {
  const Cochain pd_b = localsys::poincare_dual(K, F, b);
  const Cochain pd_a = localsys::poincare_dual(K, E, a);
  const PairingRule flipped = nu.flipped(K, F, E, G);
  const Cochain product = localsys::cup(K, E, flipped, pd_b, pd_a);
  return localsys::cap_fundamental(K, G, product);
}

/// The exact isometry sending u_i -> t_i u_i and v_i -> t_i^{-1} v_i on
/// the standard Lorentz space (fixing e_{n+1} when n is even).
inline Matrix torus_isometry(const schur::SpacePtr& space, int n,
                             const std::vector<Scalar>& ts) {
  const auto wb = schur::witt_basis(space, n);
  const int m = (n + 1) / 2;
  const int count = static_cast<int>(wb.size());
  Matrix W(n + 1, n + 1), Wimg(n + 1, n + 1);
  for (int c = 0; c < count; ++c) {
    const auto vec = wb[static_cast<size_t>(c)].to_vector();
    const int witt_index = c < m ? c : 2 * m - 1 - c;
    const Scalar factor = c < m ? ts[static_cast<size_t>(witt_index)]
                                : ts[static_cast<size_t>(witt_index)].inverse();
    for (int r = 0; r <= n; ++r) {
      W.at(r, c) = vec[static_cast<size_t>(r)];
      Wimg.at(r, c) = factor * vec[static_cast<size_t>(r)];
    }
  }
  if (count < n + 1) {
    // even n: the last basis vector is fixed
    W.at(n, n) = Scalar(1);
    Wimg.at(n, n) = Scalar(1);
  }
  return Wimg * exactfield::inverse(W);
}

inline barcomplex::GroupRep sign_rep_z2(const barcomplex::FiniteGroup& z2) {
  Matrix minus(1, 1);
  minus.at(0, 0) = Scalar(-1);
  return barcomplex::GroupRep(z2, 1, Field::rationals(),
                              {Matrix::identity(1), minus});
}

/// 2-dimensional standard representation of S3 on the sum-zero subspace of
/// Q^3, in the basis (1,-1,0), (0,1,-1).
inline barcomplex::GroupRep standard_rep_s3(const barcomplex::FiniteGroup& s3) {
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<Matrix> mats;
  for (const auto& p : perms) {
    Matrix P(3, 3);
    for (int i = 0; i < 3; ++i) P.at(p[i], i) = Scalar(1);
    Matrix C(3, 2);
    C.at(0, 0) = Scalar(1);
    C.at(1, 0) = Scalar(-1);
    C.at(1, 1) = Scalar(1);
    C.at(2, 1) = Scalar(-1);
    Matrix R(2, 2);
    const Matrix PC = P * C;
    for (int j = 0; j < 2; ++j) {
      const auto x = exactfield::solve(C, PC.column(j));
      if (!x) throw Error("basis change failed");
      R.at(0, j) = (*x)[0];
      R.at(1, j) = (*x)[1];
    }
    mats.push_back(std::move(R));
  }
  return barcomplex::GroupRep(s3, 2, Field::rationals(), std::move(mats));
}

struct CommandResult {
  int exit_code = -1;
  std::string out;
};

/// Runs a shell command, capturing stdout; stderr is discarded.
inline CommandResult run_command(const std::string& cmd) {
  CommandResult res;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return res;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
    res.out.append(buf, got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace testutil
