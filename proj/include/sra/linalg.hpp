#pragma once

// Exact dense linear algebra over Q and Q(zeta_m). Matrices are Eigen
// matrices over the exact scalar; elimination is fraction-free (Bareiss)
// with a fixed pivot rule: first column with a nonzero entry in the active
// rows, and within it the lowest row index.

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sra/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<sra::Cyclotomic> : GenericNumTraits<sra::Cyclotomic> {
  using Real = sra::Cyclotomic;
  using NonInteger = sra::Cyclotomic;
  using Literal = sra::Cyclotomic;
  using Nested = sra::Cyclotomic;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 64
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<sra::Rational> : GenericNumTraits<sra::Rational> {
  using Real = sra::Rational;
  using NonInteger = sra::Rational;
  using Literal = sra::Rational;
  using Nested = sra::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace sra {

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = MatrixX<Cyclotomic>;
using Vector = VectorX<Cyclotomic>;
using Index = Eigen::Index;

namespace detail {
template <class Scalar>
bool is_zero(const Scalar& s) {
  if constexpr (std::is_same_v<Scalar, Cyclotomic>)
    return s.is_zero();
  else
    return s == 0;
}
}  // namespace detail

/// Row echelon form from fraction-free elimination. `pivots[r]` is the pivot
/// column of row r; `swaps` counts row exchanges.
template <class Scalar>
struct Echelon {
  MatrixX<Scalar> rows;
  std::vector<Index> pivots;
  int swaps = 0;
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <class Scalar>
Echelon<Scalar> bareiss_echelon(MatrixX<Scalar> m) {
  Echelon<Scalar> out;
  const Index nr = m.rows(), nc = m.cols();
  Scalar prev(1);
  Index r = 0;
  for (Index col = 0; col < nc && r < nr; ++col) {
    Index piv = -1;
    for (Index i = r; i < nr; ++i)
      if (!detail::is_zero(m(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      m.row(piv).swap(m.row(r));
      ++out.swaps;
    }
    const Scalar p = m(r, col);
    for (Index i = r + 1; i < nr; ++i) {
      const Scalar lead = m(i, col);
      for (Index j = col + 1; j < nc; ++j) {
        Scalar v = p * m(i, j);
        if (!detail::is_zero(lead)) v -= lead * m(r, j);
        if (!detail::is_zero(v)) v /= prev;
        m(i, j) = std::move(v);
      }
      m(i, col) = Scalar(0);
    }
    prev = p;
    out.pivots.push_back(col);
    ++r;
  }
  out.rows = std::move(m);
  return out;
}

template <class Scalar>
Index rank(const MatrixX<Scalar>& m) {
  return bareiss_echelon(m).rank();
}

/// Determinant via Bareiss; the last pivot of a full-rank square matrix.
template <class Scalar>
Scalar determinant(const MatrixX<Scalar>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return Scalar(1);
  auto e = bareiss_echelon(m);
  if (e.rank() < m.rows()) return Scalar(0);
  Scalar d = e.rows(m.rows() - 1, m.cols() - 1);
  return (e.swaps % 2) ? Scalar(-d) : d;
}

/// Basis of the right null space, one column per free variable in
/// ascending column order.
template <class Scalar>
MatrixX<Scalar> kernel_basis(const MatrixX<Scalar>& m) {
  const Index nc = m.cols();
  auto e = bareiss_echelon(m);
  std::vector<bool> is_pivot(nc, false);
  for (Index c : e.pivots) is_pivot[c] = true;
  std::vector<Index> free_cols;
  for (Index c = 0; c < nc; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  MatrixX<Scalar> basis(nc, static_cast<Index>(free_cols.size()));
  for (Index k = 0; k < static_cast<Index>(free_cols.size()); ++k) {
    VectorX<Scalar> x = VectorX<Scalar>::Constant(nc, Scalar(0));
    x(free_cols[k]) = Scalar(1);
    for (Index r = e.rank(); r-- > 0;) {
      const Index pc = e.pivots[r];
      Scalar acc(0);
      for (Index j = pc + 1; j < nc; ++j)
        if (!detail::is_zero(x(j)) && !detail::is_zero(e.rows(r, j))) acc += e.rows(r, j) * x(j);
      x(pc) = detail::is_zero(acc) ? Scalar(0) : Scalar(-acc / e.rows(r, pc));
    }
    basis.col(k) = x;
  }
  return basis;
}

/// Linearly independent columns of `m` (the pivot columns), in order.
template <class Scalar>
MatrixX<Scalar> column_space_basis(const MatrixX<Scalar>& m) {
  auto e = bareiss_echelon(m);
  MatrixX<Scalar> out(m.rows(), e.rank());
  for (Index k = 0; k < e.rank(); ++k) out.col(k) = m.col(e.pivots[k]);
  return out;
}

/// Gauss-Jordan inverse; empty when singular.
template <class Scalar>
std::optional<MatrixX<Scalar>> inverse(const MatrixX<Scalar>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const Index n = m.rows();
  MatrixX<Scalar> a(n, 2 * n);
  a.leftCols(n) = m;
  a.rightCols(n) = MatrixX<Scalar>::Identity(n, n);
  for (Index col = 0; col < n; ++col) {
    Index piv = -1;
    for (Index i = col; i < n; ++i)
      if (!detail::is_zero(a(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != col) a.row(piv).swap(a.row(col));
    const Scalar inv = Scalar(1) / a(col, col);
    for (Index j = 0; j < 2 * n; ++j)
      if (!detail::is_zero(a(col, j))) a(col, j) *= inv;
    for (Index i = 0; i < n; ++i) {
      if (i == col || detail::is_zero(a(i, col))) continue;
      const Scalar f = a(i, col);
      for (Index j = 0; j < 2 * n; ++j)
        if (!detail::is_zero(a(col, j))) a(i, j) -= f * a(col, j);
    }
  }
  return MatrixX<Scalar>(a.rightCols(n));
}

/// Exact matrix product without Eigen's blocked kernels, skipping zeros.
Matrix multiply(const Matrix& a, const Matrix& b);
Vector apply(const Matrix& a, const Vector& v);
bool is_zero(const Matrix& m);
bool is_zero(const Vector& v);
/// x^T omega y
Cyclotomic bilinear(const Vector& x, const Matrix& omega, const Vector& y);

/// Subspace of Q(zeta_m)^n spanned by the (independent) columns of `basis`.
struct Subspace {
  Index ambient = 0;
  Matrix basis;  // ambient x dim
  Index dim() const { return basis.cols(); }
  bool contains(const Vector& v) const;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
bool same_subspace(const Subspace& a, const Subspace& b);

class DecompositionIncomplete : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateRestriction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Eigenspace {
  int exponent = 0;   // lambda = zeta_m^exponent
  Cyclotomic lambda;
  Subspace space;
};

/// Eigenspaces of a matrix whose order divides m, for each m-th root of
/// unity with a nonzero eigenspace, in ascending exponent. Throws
/// DecompositionIncomplete when the eigenspaces do not fill the space.
std::vector<Eigenspace> eigen_decompose(const Matrix& g, int m);

/// Symplectic Gram-Schmidt on W: returns c_1..c_{2k} with
/// omega(c_{2i-1}, c_{2i}) = 1 and all other pairings 0.
std::vector<Vector> darboux_basis(const Subspace& w, const Matrix& omega);

}  // namespace sra
