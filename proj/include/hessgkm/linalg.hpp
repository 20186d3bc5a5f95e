// Exact dense linear algebra over Eigen matrices with a field scalar.
//
// Everything here is templated on the scalar so that the same echelon code
// runs on Rational (the production path) and on small test fields.
#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "hessgkm/rational.hpp"

namespace hessgkm {

using Index = Eigen::Index;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using RowMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using QMatrix = Matrix<Rational>;
using QRowMatrix = RowMatrix<Rational>;
using QVector = Vector<Rational>;

namespace detail {

template <class Scalar>
inline bool is_zero(const Scalar& s) {
  if constexpr (std::is_same_v<Scalar, Rational>)
    return s.is_zero();
  else
    return s == Scalar(0);
}

template <class Scalar>
inline void sub_mul(Scalar& acc, const Scalar& a, const Scalar& b) {
  if constexpr (std::is_same_v<Scalar, Rational>)
    acc.sub_mul(a, b);
  else
    acc -= a * b;
}

}  // namespace detail

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!detail::is_zero(m(i, j))) return false;
  return true;
}

/// Column traversal order used when choosing pivots.
enum class PivotOrder { Forward, Reverse };

/// Brings `m` to reduced row echelon form in place and returns the pivot
/// column of each nonzero row; rows past the rank are zero afterwards.
///
/// With PivotOrder::Reverse the columns are scanned from last to first, which
/// is the RREF of the column-reversed matrix. Zero entries are skipped, so
/// sparse inputs stay cheap.
template <class Scalar>
std::vector<Index> rref(RowMatrix<Scalar>& m, PivotOrder order = PivotOrder::Forward) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  std::vector<Index> pivots;
  std::vector<Index> support;
  Index rank = 0;
  for (Index step = 0; step < cols && rank < rows; ++step) {
    const Index c = order == PivotOrder::Forward ? step : cols - 1 - step;
    Index r = rank;
    while (r < rows && detail::is_zero(m(r, c))) ++r;
    if (r == rows) continue;
    if (r != rank) m.row(r).swap(m.row(rank));

    support.clear();
    for (Index j = 0; j < cols; ++j)
      if (!detail::is_zero(m(rank, j))) support.push_back(j);
    if (!(m(rank, c) == Scalar(1))) {
      const Scalar inv = Scalar(1) / m(rank, c);
      for (Index j : support) m(rank, j) *= inv;
    }
    for (Index i = 0; i < rows; ++i) {
      if (i == rank || detail::is_zero(m(i, c))) continue;
      const Scalar f = m(i, c);
      for (Index j : support) detail::sub_mul(m(i, j), f, m(rank, j));
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  RowMatrix<Scalar> work = m;
  return Index(rref(work).size());
}

/// A subspace of Scalar^n held as its reduced row echelon basis.
///
/// `coordinates` reads a member vector in this basis directly off the pivot
/// columns; `reduce` returns the remainder after projecting out the pivots.
template <class Scalar>
class RowEchelon {
 public:
  RowEchelon() = default;
  explicit RowEchelon(Index ambient_dim) : basis_(0, ambient_dim) {}

  /// RREF of the row space of `rows`.
  static RowEchelon from_rows(RowMatrix<Scalar> rows) {
    RowEchelon e;
    e.pivots_ = rref(rows);
    e.basis_ = rows.topRows(Index(e.pivots_.size()));
    return e;
  }

  /// Trusted constructor: `rows` must already be in RREF with `pivots`.
  static RowEchelon from_rref(RowMatrix<Scalar> rows, std::vector<Index> pivots) {
    if (rows.rows() != Index(pivots.size())) throw std::invalid_argument("RowEchelon: pivot count");
    RowEchelon e;
    e.basis_ = std::move(rows);
    e.pivots_ = std::move(pivots);
    return e;
  }

  /// Null space of `a` (in place), returned in RREF.
  static RowEchelon kernel_of(RowMatrix<Scalar> a) {
    const Index n = a.cols();
    const auto piv = rref(a, PivotOrder::Reverse);
    std::vector<char> is_pivot(std::size_t(n), 0);
    for (Index p : piv) is_pivot[std::size_t(p)] = 1;
    std::vector<Index> free;
    for (Index j = 0; j < n; ++j)
      if (!is_pivot[std::size_t(j)]) free.push_back(j);

    RowMatrix<Scalar> k = RowMatrix<Scalar>::Zero(Index(free.size()), n);
    for (std::size_t f = 0; f < free.size(); ++f) {
      k(Index(f), free[f]) = Scalar(1);
      for (std::size_t r = 0; r < piv.size(); ++r)
        if (!detail::is_zero(a(Index(r), free[f]))) k(Index(f), piv[r]) = -a(Index(r), free[f]);
    }
    return from_rref(std::move(k), std::move(free));
  }

  Index rank() const { return basis_.rows(); }
  Index ambient_dim() const { return basis_.cols(); }
  const RowMatrix<Scalar>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  auto row(Index i) const { return basis_.row(i); }

  template <class Derived>
  Vector<Scalar> reduce(const Eigen::MatrixBase<Derived>& v) const {
    Vector<Scalar> r = v;
    for (Index i = 0; i < rank(); ++i) {
      const Scalar f = r(pivots_[std::size_t(i)]);
      if (detail::is_zero(f)) continue;
      for (Index j = 0; j < basis_.cols(); ++j)
        if (!detail::is_zero(basis_(i, j))) detail::sub_mul(r(j), f, basis_(i, j));
    }
    return r;
  }

  template <class Derived>
  bool contains(const Eigen::MatrixBase<Derived>& v) const {
    return is_zero_matrix(reduce(v));
  }

  /// Coordinates of a member vector; no membership check.
  template <class Derived>
  Vector<Scalar> coordinates(const Eigen::MatrixBase<Derived>& v) const {
    Vector<Scalar> c(rank());
    for (Index i = 0; i < rank(); ++i) c(i) = v(pivots_[std::size_t(i)]);
    return c;
  }

  /// Coordinates of a member vector; throws if `v` is outside the span.
  template <class Derived>
  Vector<Scalar> checked_coordinates(const Eigen::MatrixBase<Derived>& v) const {
    if (!contains(v)) throw std::domain_error("RowEchelon: vector outside the subspace");
    return coordinates(v);
  }

  friend bool operator==(const RowEchelon& a, const RowEchelon& b) {
    return a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }

 private:
  RowMatrix<Scalar> basis_;
  std::vector<Index> pivots_;
};

using QEchelon = RowEchelon<Rational>;

/// Vectors fixed by every matrix of a family (the common kernel of M - I).
template <class Scalar>
RowEchelon<Scalar> common_fixed_space(const std::vector<Matrix<Scalar>>& mats, Index dim) {
  RowMatrix<Scalar> stacked = RowMatrix<Scalar>::Zero(Index(mats.size()) * dim, dim);
  for (std::size_t g = 0; g < mats.size(); ++g) {
    stacked.middleRows(Index(g) * dim, dim) = mats[g] - Matrix<Scalar>::Identity(dim, dim);
  }
  return RowEchelon<Scalar>::kernel_of(std::move(stacked));
}

/// Gauss-Jordan inverse; throws on a singular matrix.
template <class Scalar>
Matrix<Scalar> inverse(const Matrix<Scalar>& m) {
  const Index n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse: not square");
  RowMatrix<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = Matrix<Scalar>::Identity(n, n);
  const auto piv = rref(aug);
  if (Index(piv.size()) < n || piv[std::size_t(n - 1)] >= n)
    throw std::domain_error("inverse: singular matrix");
  return aug.rightCols(n);
}

/// Leading principal minors d_1, ..., d_n of a square matrix.
template <class Scalar>
std::vector<Scalar> leading_principal_minors(const Matrix<Scalar>& m) {
  const Index n = m.rows();
  std::vector<Scalar> minors;
  for (Index k = 1; k <= n; ++k) {
    RowMatrix<Scalar> sub = m.topLeftCorner(k, k);
    Scalar det(1);
    for (Index c = 0; c < k; ++c) {
      Index r = c;
      while (r < k && detail::is_zero(sub(r, c))) ++r;
      if (r == k) {
        det = Scalar(0);
        break;
      }
      if (r != c) {
        sub.row(r).swap(sub.row(c));
        det = -det;
      }
      det *= sub(c, c);
      const Scalar inv = Scalar(1) / sub(c, c);
      for (Index i = c + 1; i < k; ++i) {
        if (detail::is_zero(sub(i, c))) continue;
        const Scalar f = sub(i, c) * inv;
        for (Index j = c; j < k; ++j) detail::sub_mul(sub(i, j), f, sub(c, j));
      }
    }
    minors.push_back(det);
  }
  return minors;
}

template <class Scalar>
Scalar trace(const Matrix<Scalar>& m) {
  Scalar t(0);
  for (Index i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

}  // namespace hessgkm
