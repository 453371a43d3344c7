#include "twisthom/tensor.hpp"

#include <sstream>

namespace twisthom::schur {

QuadraticSpace::QuadraticSpace(Matrix gram, Matrix gram_inv, Field field)
    : dim_(gram.rows()),
      gram_(std::move(gram)),
      gram_inv_(std::move(gram_inv)),
      field_(field) {}

std::shared_ptr<const QuadraticSpace> QuadraticSpace::from_gram(Matrix gram,
                                                                Field field) {
  if (gram.rows() != gram.cols())
    throw ValidationError("Gram matrix must be square");
  if (gram != gram.transposed())
    throw ValidationError("Gram matrix must be symmetric");
  Matrix inv;
  try {
    inv = exactfield::inverse(gram);
  } catch (const SingularMatrixError&) {
    throw ValidationError("Gram matrix must be nondegenerate");
  }
  return std::shared_ptr<const QuadraticSpace>(
      new QuadraticSpace(std::move(gram), std::move(inv), field));
}

std::shared_ptr<const QuadraticSpace> QuadraticSpace::standard_lorentz(
    int n, Field field) {
  Matrix g = Matrix::identity(n + 1);
  g.at(n, n) = Scalar(-1);
  return from_gram(std::move(g), field);
}

bool QuadraticSpace::same_space(const QuadraticSpace& o) const {
  if (this == &o) return true;
  return dim_ == o.dim_ && field_ == o.field_ && gram_ == o.gram_;
}

Tensor::Tensor(SpacePtr space, int degree)
    : space_(std::move(space)), degree_(degree) {
  if (!space_) throw ValidationError("tensor needs a space");
  if (degree_ < 0) throw ValidationError("tensor degree must be >= 0");
}

Tensor Tensor::basis_vector(SpacePtr space, int i) {
  Tensor t(std::move(space), 1);
  if (i < 0 || i >= t.space_->dim())
    throw ValidationError("basis index out of range");
  t.c_[{i}] = Scalar(1);
  return t;
}

Tensor Tensor::from_vector(SpacePtr space, const Vector& v) {
  Tensor t(std::move(space), 1);
  if (static_cast<int>(v.size()) != t.space_->dim())
    throw ValidationError("vector length does not match space dimension");
  for (int i = 0; i < t.space_->dim(); ++i)
    if (!v[i].is_zero()) t.c_[{i}] = v[i];
  return t;
}

Tensor Tensor::scalar(SpacePtr space, Scalar value) {
  Tensor t(std::move(space), 0);
  if (!value.is_zero()) t.c_[{}] = std::move(value);
  return t;
}

Tensor Tensor::product(const Tensor& a, const Tensor& b) {
  if (!a.space_->same_space(*b.space_))
    throw ValidationError("tensor product across different spaces");
  Tensor t(a.space_, a.degree_ + b.degree_);
  for (const auto& [ia, ca] : a.c_)
    for (const auto& [ib, cb] : b.c_) {
      MultiIndex idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      t.add_term(idx, ca * cb);
    }
  return t;
}

Tensor Tensor::power(const Tensor& t, long k) {
  if (k < 0) throw ValidationError("negative tensor power");
  Tensor r = Tensor::scalar(t.space(), Scalar(1));
  for (long j = 0; j < k; ++j) r = product(r, t);
  return r;
}

Scalar Tensor::coefficient(const MultiIndex& idx) const {
  const auto it = c_.find(idx);
  return it == c_.end() ? Scalar(0) : it->second;
}

void Tensor::add_term(const MultiIndex& idx, const Scalar& v) {
  if (static_cast<int>(idx.size()) != degree_)
    throw ValidationError("multi-index length does not match tensor degree");
  if (v.is_zero()) return;
  auto [it, fresh] = c_.emplace(idx, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) c_.erase(it);
  }
}

Scalar Tensor::scalar_value() const {
  if (degree_ != 0) throw ValidationError("scalar_value of positive degree");
  return coefficient({});
}

Vector Tensor::to_vector() const {
  if (degree_ != 1) throw ValidationError("to_vector needs degree 1");
  Vector v(static_cast<size_t>(space_->dim()));
  for (const auto& [idx, c] : c_) v[static_cast<size_t>(idx[0])] = c;
  return v;
}

Tensor Tensor::operator+(const Tensor& o) const {
  if (degree_ != o.degree_ || !space_->same_space(*o.space_))
    throw ValidationError("tensor sum shape mismatch");
  Tensor t = *this;
  for (const auto& [idx, c] : o.c_) t.add_term(idx, c);
  return t;
}

Tensor Tensor::operator-(const Tensor& o) const {
  if (degree_ != o.degree_ || !space_->same_space(*o.space_))
    throw ValidationError("tensor difference shape mismatch");
  Tensor t = *this;
  for (const auto& [idx, c] : o.c_) t.add_term(idx, -c);
  return t;
}

Tensor Tensor::operator*(const Scalar& s) const {
  Tensor t(space_, degree_);
  if (s.is_zero()) return t;
  for (const auto& [idx, c] : c_) t.c_[idx] = c * s;
  return t;
}

bool Tensor::operator==(const Tensor& o) const {
  return degree_ == o.degree_ && space_->same_space(*o.space_) && c_ == o.c_;
}

void Tensor::normalize() {
  for (auto it = c_.begin(); it != c_.end();)
    it = it->second.is_zero() ? c_.erase(it) : std::next(it);
}

std::string Tensor::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : c_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*e[";
    for (size_t j = 0; j < idx.size(); ++j) {
      if (j) os << ",";
      os << idx[j] + 1;
    }
    os << "]";
  }
  return os.str();
}

Scalar bilinear_pair(const Tensor& s, const Tensor& t) {
  if (s.degree() != t.degree())
    throw ValidationError("bilinear_pair: degree mismatch");
  if (!s.space()->same_space(*t.space()))
    throw ValidationError("bilinear_pair: space mismatch");
  const QuadraticSpace& sp = *s.space();
  Scalar total(0);
  for (const auto& [ia, ca] : s.coefficients())
    for (const auto& [ib, cb] : t.coefficients()) {
      Scalar prod = ca * cb;
      for (size_t j = 0; j < ia.size() && !prod.is_zero(); ++j)
        prod *= sp.pair(ia[j], ib[j]);
      total += prod;
    }
  return total;
}

Tensor contract(const Tensor& t, int i, int j) {
  const int d = t.degree();
  if (!(1 <= i && i < j && j <= d))
    throw ValidationError("contract: slot pair out of range");
  const QuadraticSpace& sp = *t.space();
  Tensor r(t.space(), d - 2);
  for (const auto& [idx, c] : t.coefficients()) {
    const Scalar g = sp.pair(idx[i - 1], idx[j - 1]);
    if (g.is_zero()) continue;
    MultiIndex rest;
    rest.reserve(static_cast<size_t>(d) - 2);
    for (int s = 0; s < d; ++s)
      if (s != i - 1 && s != j - 1) rest.push_back(idx[s]);
    r.add_term(rest, c * g);
  }
  return r;
}

Tensor insert(const Tensor& t, int i, int j) {
  const int d = t.degree();
  if (!(1 <= i && i < j && j <= d + 2))
    throw ValidationError("insert: slot pair out of range");
  const Matrix& ginv = t.space()->gram_inverse();
  const int n = t.space()->dim();
  Tensor r(t.space(), d + 2);
  for (const auto& [idx, c] : t.coefficients()) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const Scalar& g = ginv.at(a, b);
        if (g.is_zero()) continue;
        MultiIndex out(static_cast<size_t>(d) + 2, -1);
        out[i - 1] = a;
        out[j - 1] = b;
        int src = 0;
        for (int s = 0; s < d + 2; ++s)
          if (out[s] < 0) out[s] = idx[src++];
        r.add_term(out, c * g);
      }
  }
  return r;
}

Tensor sym_act(const Permutation& p, const Tensor& t) {
  const int d = t.degree();
  if (static_cast<int>(p.size()) != d)
    throw ValidationError("sym_act: permutation size mismatch");
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || v >= d || seen[v])
      throw ValidationError("sym_act: not a permutation");
    seen[v] = true;
  }
  Tensor r(t.space(), d);
  for (const auto& [idx, c] : t.coefficients()) {
    MultiIndex out(idx.size());
    for (int s = 0; s < d; ++s) out[p[s]] = idx[s];
    r.add_term(out, c);
  }
  return r;
}

Tensor apply_matrix(const Matrix& g, const Tensor& t) {
  const int n = t.space()->dim();
  if (g.rows() != n || g.cols() != n)
    throw ValidationError("apply_matrix: matrix size mismatch");
  Tensor r(t.space(), t.degree());
  for (const auto& [idx, c] : t.coefficients()) {
    // Expand g e_{a_1} x ... x g e_{a_d} slot by slot.
    std::vector<std::pair<MultiIndex, Scalar>> partial{{MultiIndex{}, c}};
    for (int s = 0; s < t.degree(); ++s) {
      std::vector<std::pair<MultiIndex, Scalar>> next;
      for (const auto& [pidx, pc] : partial)
        for (int b = 0; b < n; ++b) {
          const Scalar& gb = g.at(b, idx[s]);
          if (gb.is_zero()) continue;
          MultiIndex e = pidx;
          e.push_back(b);
          next.emplace_back(std::move(e), pc * gb);
        }
      partial = std::move(next);
    }
    for (auto& [pidx, pc] : partial) r.add_term(pidx, pc);
  }
  return r;
}

std::vector<Tensor> witt_basis(SpacePtr space, int n) {
  if (space->dim() != n + 1)
    throw ValidationError("witt_basis: space dimension must be n+1");
  Matrix expect = Matrix::identity(n + 1);
  expect.at(n, n) = Scalar(-1);
  if (space->gram() != expect)
    throw ValidationError("witt_basis: space must carry the standard "
                          "signature-(n,1) form");
  const int m = (n + 1) / 2;
  const bool odd = (n == 2 * m - 1);
  const bool needs_i = (n >= 2);
  if (needs_i && space->field().kind() != Field::Kind::Gaussian)
    throw ValidationError("witt_basis: field must contain i");

  const Scalar iu = needs_i ? Scalar::imaginary_unit() : Scalar(1);
  std::vector<Tensor> us, vs;
  for (int k = 1; k <= m; ++k) {
    Tensor e_k = Tensor::basis_vector(space, k - 1);
    Tensor u(space, 1), v(space, 1);
    if (odd && k == m) {
      // u_m = e_m - e_{n+1}, v_m = e_m + e_{n+1}; both real.
      Tensor last = Tensor::basis_vector(space, n);
      u = e_k - last;
      v = e_k + last;
    } else {
      Tensor other = Tensor::basis_vector(space, m + k - 1);
      u = e_k - other * iu;
      v = e_k + other * iu;
    }
    us.push_back(std::move(u));
    vs.push_back(std::move(v));
  }
  std::vector<Tensor> out = std::move(us);
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) out.push_back(*it);
  return out;
}

}  // namespace twisthom::schur
