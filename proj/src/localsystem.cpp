#include "twisthom/localsystem.hpp"

namespace twisthom::localsys {

LocalSystem::LocalSystem(const SimplicialComplex& K, int rank, Field field,
                         std::map<std::pair<int, int>, Matrix> edge_transports)
    : rank_(rank), field_(field), fwd_(std::move(edge_transports)) {
  if (rank_ <= 0) throw ValidationError("local system rank must be positive");
  for (const Simplex& e : K.simplices(1)) {
    const auto key = std::make_pair(e[0], e[1]);
    const auto it = fwd_.find(key);
    if (it == fwd_.end())
      throw ValidationError("missing transport on edge (" +
                            std::to_string(e[0]) + "," + std::to_string(e[1]) +
                            ")");
    const Matrix& t = it->second;
    if (t.rows() != rank_ || t.cols() != rank_)
      throw ValidationError("transport size mismatch on edge (" +
                            std::to_string(e[0]) + "," + std::to_string(e[1]) +
                            ")");
    try {
      inv_.emplace(key, exactfield::inverse(t));
    } catch (const SingularMatrixError&) {
      throw ValidationError("transport on edge (" + std::to_string(e[0]) +
                            "," + std::to_string(e[1]) + ") is singular");
    }
  }
  for (const auto& [key, mat] : fwd_)
    if (K.id_of({key.first, key.second}) < 0)
      throw ValidationError("transport given for non-edge (" +
                            std::to_string(key.first) + "," +
                            std::to_string(key.second) + ")");
  for (const Simplex& t : K.simplices(2)) {
    const Matrix lhs = transport(t[1], t[2]) * transport(t[0], t[1]);
    if (lhs != transport(t[0], t[2]))
      throw ValidationError("triangle compatibility fails on (" +
                            std::to_string(t[0]) + "," + std::to_string(t[1]) +
                            "," + std::to_string(t[2]) + ")");
  }
}

LocalSystem LocalSystem::trivial(const SimplicialComplex& K, int rank,
                                 Field field) {
  std::map<std::pair<int, int>, Matrix> edges;
  for (const Simplex& e : K.simplices(1))
    edges.emplace(std::make_pair(e[0], e[1]), Matrix::identity(rank));
  return LocalSystem(K, rank, field, std::move(edges));
}

const Matrix& LocalSystem::transport(int from, int to) const {
  static const Matrix kNothing;
  if (from == to)
    throw ValidationError("transport needs two distinct adjacent vertices");
  const bool forward = from < to;
  const auto key = forward ? std::make_pair(from, to) : std::make_pair(to, from);
  const auto& table = forward ? fwd_ : inv_;
  const auto it = table.find(key);
  if (it == table.end())
    throw ValidationError("no transport between " + std::to_string(from) +
                          " and " + std::to_string(to));
  return it->second;
}

Vector LocalSystem::apply(int from, int to, const Vector& v) const {
  if (from == to) return v;
  return transport(from, to) * v;
}

Vector LocalSystem::transport_along(const std::vector<int>& path,
                                    Vector v) const {
  for (size_t i = 1; i < path.size(); ++i)
    v = apply(path[i - 1], path[i], v);
  return v;
}

LocalSystem LocalSystem::dual(const SimplicialComplex& K) const {
  std::map<std::pair<int, int>, Matrix> edges;
  for (const auto& [key, mat] : inv_) edges.emplace(key, mat.transposed());
  return LocalSystem(K, rank_, field_, std::move(edges));
}

LocalSystem LocalSystem::tensor(const SimplicialComplex& K,
                                const LocalSystem& other) const {
  std::map<std::pair<int, int>, Matrix> edges;
  for (const auto& [key, mat] : fwd_)
    edges.emplace(key, Matrix::kronecker(mat, other.fwd_.at(key)));
  return LocalSystem(K, rank_ * other.rank_,
                     Field::join(field_, other.field_), std::move(edges));
}

PairingRule::PairingRule(const SimplicialComplex& K, const LocalSystem& E,
                         const LocalSystem& F, const LocalSystem& G,
                         Matrix nu)
    : rank_e_(E.rank()), rank_f_(F.rank()), rank_g_(G.rank()),
      nu_(std::move(nu)) {
  if (nu_.rows() != rank_g_ || nu_.cols() != rank_e_ * rank_f_)
    throw ValidationError("pairing matrix must be rank_g x (rank_e*rank_f)");
  for (const Simplex& e : K.simplices(1)) {
    const Matrix lhs = G.transport(e[0], e[1]) * nu_;
    const Matrix rhs =
        nu_ * Matrix::kronecker(E.transport(e[0], e[1]),
                                F.transport(e[0], e[1]));
    if (lhs != rhs)
      throw ValidationError("pairing is not parallel on edge (" +
                            std::to_string(e[0]) + "," + std::to_string(e[1]) +
                            ")");
  }
}

Vector PairingRule::apply(const Vector& e, const Vector& f) const {
  if (static_cast<int>(e.size()) != rank_e_ ||
      static_cast<int>(f.size()) != rank_f_)
    throw ValidationError("pairing rule rank mismatch");
  Vector kron(static_cast<size_t>(rank_e_ * rank_f_));
  for (int i = 0; i < rank_e_; ++i)
    for (int j = 0; j < rank_f_; ++j)
      kron[static_cast<size_t>(i * rank_f_ + j)] =
          e[static_cast<size_t>(i)] * f[static_cast<size_t>(j)];
  return nu_ * kron;
}

PairingRule PairingRule::scalar_multiply(const SimplicialComplex& K,
                                         const LocalSystem& E,
                                         const LocalSystem& F,
                                         const LocalSystem& G) {
  if (E.rank() != 1 || F.rank() != 1 || G.rank() != 1)
    throw ValidationError("scalar_multiply needs rank-1 systems");
  Matrix nu(1, 1);
  nu.at(0, 0) = Scalar(1);
  return PairingRule(K, E, F, G, std::move(nu));
}

PairingRule PairingRule::evaluation(const SimplicialComplex& K,
                                    const LocalSystem& E,
                                    const LocalSystem& E_dual,
                                    const LocalSystem& G) {
  if (G.rank() != 1 || E.rank() != E_dual.rank())
    throw ValidationError("evaluation needs matching ranks and rank-1 target");
  const int r = E.rank();
  Matrix nu(1, r * r);
  for (int i = 0; i < r; ++i) nu.at(0, i * r + i) = Scalar(1);
  return PairingRule(K, E, E_dual, G, std::move(nu));
}

PairingRule PairingRule::flipped(const SimplicialComplex& K,
                                 const LocalSystem& F, const LocalSystem& E,
                                 const LocalSystem& G) const {
  Matrix nu(rank_g_, rank_f_ * rank_e_);
  for (int g = 0; g < rank_g_; ++g)
    for (int i = 0; i < rank_e_; ++i)
      for (int j = 0; j < rank_f_; ++j)
        nu.at(g, j * rank_e_ + i) = nu_.at(g, i * rank_f_ + j);
  return PairingRule(K, F, E, G, std::move(nu));
}

}  // namespace twisthom::localsys
