#include "sra/linalg.hpp"

namespace sra {

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix out = Matrix::Constant(a.rows(), b.cols(), Cyclotomic());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k) {
      const Cyclotomic& x = a(i, k);
      if (x.is_zero()) continue;
      for (Index j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
    }
  return out;
}

Vector apply(const Matrix& a, const Vector& v) {
  Vector out = Vector::Constant(a.rows(), Cyclotomic());
  for (Index k = 0; k < a.cols(); ++k) {
    if (v(k).is_zero()) continue;
    for (Index i = 0; i < a.rows(); ++i)
      if (!a(i, k).is_zero()) out(i) += a(i, k) * v(k);
  }
  return out;
}

bool is_zero(const Matrix& m) {
  for (Index i = 0; i < m.size(); ++i)
    if (!m.data()[i].is_zero()) return false;
  return true;
}

bool is_zero(const Vector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

Cyclotomic bilinear(const Vector& x, const Matrix& omega, const Vector& y) {
  Cyclotomic acc;
  for (Index i = 0; i < x.size(); ++i) {
    if (x(i).is_zero()) continue;
    Cyclotomic row;
    for (Index j = 0; j < y.size(); ++j)
      if (!omega(i, j).is_zero() && !y(j).is_zero()) row += omega(i, j) * y(j);
    if (!row.is_zero()) acc += x(i) * row;
  }
  return acc;
}

bool Subspace::contains(const Vector& v) const {
  Matrix aug(ambient, dim() + 1);
  aug.leftCols(dim()) = basis;
  aug.col(dim()) = v;
  return rank(aug) == dim();
}

Subspace kernel(const Matrix& m) { return {m.cols(), kernel_basis(m)}; }

Subspace image(const Matrix& m) { return {m.rows(), column_space_basis(m)}; }

Subspace intersect(const Subspace& a, const Subspace& b) {
  // x = A u = B v  <=>  [A | -B] (u, v) = 0
  Matrix joint(a.ambient, a.dim() + b.dim());
  joint.leftCols(a.dim()) = a.basis;
  joint.rightCols(b.dim()) = -b.basis;
  Matrix k = kernel_basis(joint);
  Matrix vecs = multiply(a.basis, Matrix(k.topRows(a.dim())));
  return {a.ambient, column_space_basis(vecs)};
}

bool same_subspace(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient || a.dim() != b.dim()) return false;
  Matrix joint(a.ambient, a.dim() + b.dim());
  joint.leftCols(a.dim()) = a.basis;
  joint.rightCols(b.dim()) = b.basis;
  return rank(joint) == a.dim();
}

std::vector<Eigenspace> eigen_decompose(const Matrix& g, int m) {
  const Index n = g.rows();
  std::vector<Eigenspace> out;
  Index total = 0;
  for (int k = 0; k < m && total < n; ++k) {
    Cyclotomic lambda = Cyclotomic::zeta(m, k);
    Matrix shifted = g;
    for (Index i = 0; i < n; ++i) shifted(i, i) -= lambda;
    Subspace space = kernel(shifted);
    if (space.dim() == 0) continue;
    total += space.dim();
    out.push_back({k, lambda, std::move(space)});
  }
  if (total != n)
    throw DecompositionIncomplete("eigenspaces of the given order do not span the space");
  return out;
}

std::vector<Vector> darboux_basis(const Subspace& w, const Matrix& omega) {
  std::vector<Vector> pool;
  for (Index k = 0; k < w.dim(); ++k) pool.push_back(w.basis.col(k));
  std::vector<Vector> out;
  while (!pool.empty()) {
    Vector u = pool.front();
    std::size_t partner = 0;
    Cyclotomic pairing;
    for (std::size_t j = 1; j < pool.size(); ++j) {
      pairing = bilinear(u, omega, pool[j]);
      if (!pairing.is_zero()) {
        partner = j;
        break;
      }
    }
    if (partner == 0) throw DegenerateRestriction("symplectic form is degenerate on the subspace");
    Vector v = pool[partner];
    Cyclotomic inv = pairing.inverse();
    for (Index i = 0; i < v.size(); ++i) v(i) *= inv;
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(partner));
    pool.erase(pool.begin());
    for (auto& x : pool) {
      // x - omega(x, v) u + omega(x, u) v  is orthogonal to both u and v
      Cyclotomic xv = bilinear(x, omega, v), xu = bilinear(x, omega, u);
      for (Index i = 0; i < x.size(); ++i) x(i) += xu * v(i) - xv * u(i);
    }
    out.push_back(std::move(u));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace sra
