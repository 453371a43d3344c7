#include "twisthom/homology.hpp"

namespace twisthom::localsys {

bool Chain::is_zero() const {
  for (const auto& [id, v] : terms)
    if (!exactfield::is_zero(v)) return false;
  return true;
}

Chain& Chain::add(int simplex_id, const Vector& v) {
  auto it = terms.find(simplex_id);
  if (it == terms.end()) {
    if (!exactfield::is_zero(v)) terms.emplace(simplex_id, v);
    return *this;
  }
  it->second = it->second + v;
  if (exactfield::is_zero(it->second)) terms.erase(it);
  return *this;
}

Chain operator+(const Chain& a, const Chain& b) {
  if (a.degree != b.degree) throw ValidationError("chain degree mismatch");
  Chain r = a;
  for (const auto& [id, v] : b.terms) r.add(id, v);
  return r;
}

Chain operator-(const Chain& a, const Chain& b) {
  return a + Scalar(-1) * b;
}

Chain operator*(const Scalar& s, const Chain& c) {
  Chain r;
  r.degree = c.degree;
  if (s.is_zero()) return r;
  for (const auto& [id, v] : c.terms) r.terms.emplace(id, s * v);
  return r;
}

bool operator==(const Chain& a, const Chain& b) {
  return a.degree == b.degree && (a - b).is_zero();
}

Cochain Cochain::zero(const SimplicialComplex& K, const LocalSystem& L,
                      int degree) {
  Cochain a;
  a.degree = degree;
  a.values.assign(static_cast<size_t>(K.count(degree)),
                  exactfield::zero_vector(L.rank()));
  return a;
}

Cochain Cochain::unit(const SimplicialComplex& K, const LocalSystem& L) {
  if (L.rank() != 1)
    throw ValidationError("unit cochain needs a rank-1 system");
  Cochain a = zero(K, L, 0);
  for (auto& v : a.values) v[0] = Scalar(1);
  return a;
}

Cochain operator+(const Cochain& a, const Cochain& b) {
  if (a.degree != b.degree || a.values.size() != b.values.size())
    throw ValidationError("cochain shape mismatch");
  Cochain r = a;
  for (size_t i = 0; i < r.values.size(); ++i)
    r.values[i] = r.values[i] + b.values[i];
  return r;
}

Cochain operator-(const Cochain& a, const Cochain& b) {
  return a + Scalar(-1) * b;
}

Cochain operator*(const Scalar& s, const Cochain& c) {
  Cochain r = c;
  for (auto& v : r.values) v = s * v;
  return r;
}

bool operator==(const Cochain& a, const Cochain& b) {
  if (a.degree != b.degree || a.values.size() != b.values.size()) return false;
  for (size_t i = 0; i < a.values.size(); ++i)
    if (!exactfield::is_zero(a.values[i] - b.values[i])) return false;
  return true;
}

Chain boundary(const SimplicialComplex& K, const LocalSystem& L,
               const Chain& c) {
  Chain r;
  r.degree = c.degree - 1;
  if (c.degree == 0) {
    r.degree = 0;
    r.terms.clear();
    return r;  // boundary of 0-chains is zero
  }
  for (const auto& [id, coeff] : c.terms) {
    if (id < 0 || id >= K.count(c.degree))
      throw ValidationError("chain simplex not in complex");
    const Simplex& s = K.simplex(c.degree, id);
    for (int i = 0; i <= c.degree; ++i) {
      const int fid = K.id_of(SimplicialComplex::face(s, i));
      if (fid < 0) throw ValidationError("face missing from complex");
      if (i == 0) {
        r.add(fid, L.apply(s[0], s[1], coeff));
      } else {
        r.add(fid, (i % 2 == 0 ? Scalar(1) : Scalar(-1)) * coeff);
      }
    }
  }
  return r;
}

Cochain coboundary(const SimplicialComplex& K, const LocalSystem& L,
                   const Cochain& a) {
  Cochain r = Cochain::zero(K, L, a.degree + 1);
  if (static_cast<int>(a.values.size()) != K.count(a.degree))
    throw ValidationError("cochain is not total");
  for (int id = 0; id < K.count(a.degree + 1); ++id) {
    const Simplex& s = K.simplex(a.degree + 1, id);
    Vector acc = exactfield::zero_vector(L.rank());
    for (int i = 0; i <= a.degree + 1; ++i) {
      const int fid = K.id_of(SimplicialComplex::face(s, i));
      const Vector& av = a.values[static_cast<size_t>(fid)];
      if (i == 0) {
        // Value lives at v_1; bring it back to v_0 against the edge.
        acc = acc + L.apply(s[1], s[0], av);
      } else {
        acc = acc + (i % 2 == 0 ? Scalar(1) : Scalar(-1)) * av;
      }
    }
    r.values[static_cast<size_t>(id)] = std::move(acc);
  }
  return r;
}

Matrix boundary_matrix(const SimplicialComplex& K, const LocalSystem& L,
                       int p) {
  const int r = L.rank();
  Matrix m(K.count(p - 1) * r, K.count(p) * r);
  if (p <= 0 || p > K.dim()) return m;
  for (int id = 0; id < K.count(p); ++id)
    for (int k = 0; k < r; ++k) {
      Chain basis;
      basis.degree = p;
      Vector v = exactfield::zero_vector(r);
      v[static_cast<size_t>(k)] = Scalar(1);
      basis.terms.emplace(id, std::move(v));
      const Chain b = boundary(K, L, basis);
      for (const auto& [fid, bv] : b.terms)
        for (int l = 0; l < r; ++l)
          m.at(fid * r + l, id * r + k) = bv[static_cast<size_t>(l)];
    }
  return m;
}

Matrix coboundary_matrix(const SimplicialComplex& K, const LocalSystem& L,
                         int p) {
  const int r = L.rank();
  Matrix m(K.count(p + 1) * r, K.count(p) * r);
  if (p < 0 || p > K.dim()) return m;
  for (int id = 0; id < K.count(p); ++id)
    for (int k = 0; k < r; ++k) {
      Cochain basis = Cochain::zero(K, L, p);
      basis.values[static_cast<size_t>(id)][static_cast<size_t>(k)] =
          Scalar(1);
      const Cochain d = coboundary(K, L, basis);
      for (int sid = 0; sid < K.count(p + 1); ++sid)
        for (int l = 0; l < r; ++l)
          m.at(sid * r + l, id * r + k) =
              d.values[static_cast<size_t>(sid)][static_cast<size_t>(l)];
    }
  return m;
}

Vector chain_to_vector(const SimplicialComplex& K, const LocalSystem& L,
                       const Chain& c) {
  Vector v = exactfield::zero_vector(K.count(c.degree) * L.rank());
  for (const auto& [id, coeff] : c.terms)
    for (int k = 0; k < L.rank(); ++k)
      v[static_cast<size_t>(id * L.rank() + k)] = coeff[static_cast<size_t>(k)];
  return v;
}

Chain chain_from_vector(const SimplicialComplex& K, const LocalSystem& L,
                        int degree, const Vector& v) {
  Chain c;
  c.degree = degree;
  for (int id = 0; id < K.count(degree); ++id) {
    Vector coeff(static_cast<size_t>(L.rank()));
    bool nonzero = false;
    for (int k = 0; k < L.rank(); ++k) {
      coeff[static_cast<size_t>(k)] = v[static_cast<size_t>(id * L.rank() + k)];
      nonzero = nonzero || !coeff[static_cast<size_t>(k)].is_zero();
    }
    if (nonzero) c.terms.emplace(id, std::move(coeff));
  }
  return c;
}

Vector cochain_to_vector(const SimplicialComplex& K, const LocalSystem& L,
                         const Cochain& a) {
  Vector v = exactfield::zero_vector(K.count(a.degree) * L.rank());
  for (int id = 0; id < K.count(a.degree); ++id)
    for (int k = 0; k < L.rank(); ++k)
      v[static_cast<size_t>(id * L.rank() + k)] =
          a.values[static_cast<size_t>(id)][static_cast<size_t>(k)];
  return v;
}

Cochain cochain_from_vector(const SimplicialComplex& K, const LocalSystem& L,
                            int degree, const Vector& v) {
  Cochain a = Cochain::zero(K, L, degree);
  for (int id = 0; id < K.count(degree); ++id)
    for (int k = 0; k < L.rank(); ++k)
      a.values[static_cast<size_t>(id)][static_cast<size_t>(k)] =
          v[static_cast<size_t>(id * L.rank() + k)];
  return a;
}

namespace {

// Representatives: kernel vectors that extend the boundary image to a basis
// of the cycle space, greedily in kernel-basis order.
std::vector<Vector> select_representatives(
    const std::vector<Vector>& kernel, const Matrix& next_boundary) {
  exactfield::IncrementalRank inc;
  for (int c = 0; c < next_boundary.cols(); ++c)
    inc.add(next_boundary.column(c));
  std::vector<Vector> reps;
  for (const Vector& k : kernel)
    if (inc.add(k)) reps.push_back(k);
  return reps;
}

}  // namespace

HomologyResult homology(const SimplicialComplex& K, const LocalSystem& L,
                        int p) {
  HomologyResult res;
  if (p < 0 || p > K.dim()) return res;
  const Matrix dp = boundary_matrix(K, L, p);
  const Matrix dnext = boundary_matrix(K, L, p + 1);
  const std::vector<Vector> cycles = exactfield::kernel_basis(dp);
  const std::vector<Vector> reps = select_representatives(cycles, dnext);
  res.dim = static_cast<int>(reps.size());
  for (const Vector& v : reps)
    res.representatives.push_back(chain_from_vector(K, L, p, v));
  return res;
}

CohomologyResult cohomology(const SimplicialComplex& K, const LocalSystem& L,
                            int p) {
  CohomologyResult res;
  if (p < 0 || p > K.dim()) return res;
  const Matrix dp = coboundary_matrix(K, L, p);
  const Matrix dprev = coboundary_matrix(K, L, p - 1);
  const std::vector<Vector> cocycles = exactfield::kernel_basis(dp);
  const std::vector<Vector> reps = select_representatives(cocycles, dprev);
  res.dim = static_cast<int>(reps.size());
  for (const Vector& v : reps)
    res.representatives.push_back(cochain_from_vector(K, L, p, v));
  return res;
}

long euler_characteristic(const SimplicialComplex& K) {
  long chi = 0;
  for (int p = 0; p <= K.dim(); ++p)
    chi += (p % 2 == 0 ? 1 : -1) * K.count(p);
  return chi;
}

Vector kronecker(const SimplicialComplex& K, const LocalSystem& G,
                 const PairingRule& nu, const Cochain& a, const Chain& c,
                 int basepoint) {
  if (a.degree != c.degree)
    throw ValidationError("kronecker: degree mismatch");
  if (static_cast<int>(a.values.size()) != K.count(a.degree))
    throw ValidationError("kronecker: cochain is not total");
  Vector total = exactfield::zero_vector(G.rank());
  for (const auto& [id, coeff] : c.terms) {
    const Simplex& s = K.simplex(c.degree, id);
    const Vector local = nu.apply(a.values[static_cast<size_t>(id)], coeff);
    total = total + G.transport_along(K.edge_path(s[0], basepoint), local);
  }
  return total;
}

Cochain cup(const SimplicialComplex& K, const LocalSystem& F,
            const PairingRule& nu, const Cochain& a, const Cochain& b) {
  const int p = a.degree;
  const int q = b.degree;
  if (static_cast<int>(a.values.size()) != K.count(p) ||
      static_cast<int>(b.values.size()) != K.count(q))
    throw ValidationError("cup: cochains must be total");
  Cochain r;
  r.degree = p + q;
  // Above the top dimension there are no simplices; the product is the
  // empty cochain.
  r.values.assign(static_cast<size_t>(K.count(p + q)),
                  exactfield::zero_vector(nu.rank_g()));
  for (int id = 0; id < K.count(p + q); ++id) {
    const Simplex& s = K.simplex(p + q, id);
    const Simplex front(s.begin(), s.begin() + p + 1);
    const Simplex back(s.begin() + p, s.end());
    const int fid = K.id_of(front);
    const int bid = K.id_of(back);
    if (fid < 0 || bid < 0)
      throw ValidationError("cup: face missing from complex");
    // Back-face value lives at v_p; carry it to v_0 inside the simplex.
    const Vector bv = F.apply(s[static_cast<size_t>(p)], s[0],
                              b.values[static_cast<size_t>(bid)]);
    r.values[static_cast<size_t>(id)] =
        nu.apply(a.values[static_cast<size_t>(fid)], bv);
  }
  return r;
}

Chain cap(const SimplicialComplex& K, const LocalSystem& E,
          const PairingRule& nu, const Cochain& a, const Chain& c) {
  const int p = a.degree;
  const int m = c.degree;
  if (m < p) throw ValidationError("cap: chain degree below cochain degree");
  if (static_cast<int>(a.values.size()) != K.count(p))
    throw ValidationError("cap: cochain is not total");
  Chain r;
  r.degree = m - p;
  for (const auto& [id, coeff] : c.terms) {
    const Simplex& s = K.simplex(m, id);
    const Simplex front(s.begin(), s.begin() + (m - p) + 1);
    const Simplex back(s.begin() + (m - p), s.end());
    const int fid = K.id_of(front);
    const int bid = K.id_of(back);
    if (fid < 0 || bid < 0)
      throw ValidationError("cap: face missing from complex");
    const Vector av = E.apply(s[static_cast<size_t>(m - p)], s[0],
                              a.values[static_cast<size_t>(bid)]);
    r.add(fid, nu.apply(av, coeff));
  }
  return r;
}

Chain fundamental_class(const SimplicialComplex& K) {
  K.require_fundamental_class();
  const auto& orient = *K.top_orientation();
  Chain c;
  c.degree = K.dim();
  for (int id = 0; id < K.count(K.dim()); ++id) {
    Vector v(1);
    v[0] = Scalar(orient[static_cast<size_t>(id)]);
    c.terms.emplace(id, std::move(v));
  }
  return c;
}

Chain cap_fundamental(const SimplicialComplex& K, const LocalSystem& E,
                      const Cochain& a) {
  const LocalSystem triv = LocalSystem::trivial(K, 1, E.field());
  // nu : E (x) triv -> E is the canonical identification.
  Matrix id_nu = Matrix::identity(E.rank());
  const PairingRule nu(K, E, triv, E, std::move(id_nu));
  return cap(K, E, nu, a, fundamental_class(K));
}

Vector homology_class_coordinates(const SimplicialComplex& K,
                                  const LocalSystem& L, const Chain& z) {
  const int p = z.degree;
  const HomologyResult h = homology(K, L, p);
  const Matrix dnext = boundary_matrix(K, L, p + 1);
  // [reps | boundary columns] x = z; the representative block of x gives
  // the class coordinates.
  std::vector<Vector> cols;
  for (const Chain& rep : h.representatives)
    cols.push_back(chain_to_vector(K, L, rep));
  for (int c = 0; c < dnext.cols(); ++c) cols.push_back(dnext.column(c));
  const Matrix m = Matrix::from_columns(cols);
  const auto x = exactfield::solve(m, chain_to_vector(K, L, z));
  if (!x) throw ValidationError("homology_class_coordinates: not a cycle "
                                "combination; is the input a cycle?");
  Vector coords(static_cast<size_t>(h.dim));
  for (int i = 0; i < h.dim; ++i) coords[static_cast<size_t>(i)] = (*x)[i];
  return coords;
}

bool same_homology_class(const SimplicialComplex& K, const LocalSystem& L,
                         const Chain& z1, const Chain& z2) {
  if (z1.degree != z2.degree) return false;
  const Chain diff = z1 - z2;
  if (diff.is_zero()) return true;
  const Matrix dnext = boundary_matrix(K, L, z1.degree + 1);
  return exactfield::solve(dnext, chain_to_vector(K, L, diff)).has_value();
}

Cochain poincare_dual(const SimplicialComplex& K, const LocalSystem& E,
                      const Chain& c) {
  K.require_fundamental_class();
  if (!boundary(K, E, c).is_zero())
    throw ValidationError("poincare_dual: input chain is not a cycle");
  const int n = K.dim();
  const int p = c.degree;
  const CohomologyResult hc = cohomology(K, E, n - p);
  // Solve [c] = sum_i x_i [alpha_i cap [X]] in H_p.
  std::vector<Vector> cols;
  for (const Cochain& alpha : hc.representatives)
    cols.push_back(chain_to_vector(K, E, cap_fundamental(K, E, alpha)));
  const Matrix dnext = boundary_matrix(K, E, p + 1);
  for (int j = 0; j < dnext.cols(); ++j) cols.push_back(dnext.column(j));
  const Matrix m = Matrix::from_columns(cols);
  const auto x = exactfield::solve(m, chain_to_vector(K, E, c));
  if (!x)
    throw ValidationError("poincare_dual: duality solve failed; is the "
                          "fundamental class valid?");
  Cochain result = Cochain::zero(K, E, n - p);
  for (size_t i = 0; i < hc.representatives.size(); ++i)
    result = result + (*x)[i] * hc.representatives[i];
  return result;
}

}  // namespace twisthom::localsys
