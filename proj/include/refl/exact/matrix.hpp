#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "refl/exact/cyclotomic.hpp"
#include "refl/exact/integer.hpp"
#include "refl/exact/poly.hpp"
#include "refl/exact/rational.hpp"
#include "refl/exact/scalar.hpp"

namespace refl::detail {
template <class T>
struct ExactNumTraits : Eigen::GenericNumTraits<T> {
  using Real = T;
  using NonInteger = T;
  using Literal = T;
  using Nested = T;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static T epsilon() { return T(0); }
  static T dummy_precision() { return T(0); }
  static int digits10() { return 0; }
};
}  // namespace refl::detail

namespace Eigen {
template <>
struct NumTraits<refl::Integer> : refl::detail::ExactNumTraits<refl::Integer> {};
template <>
struct NumTraits<refl::Rational> : refl::detail::ExactNumTraits<refl::Rational> {};
template <>
struct NumTraits<refl::Cyclotomic> : refl::detail::ExactNumTraits<refl::Cyclotomic> {};
}  // namespace Eigen

namespace refl {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using CMatrix = Matrix<Cyclotomic>;
using CVector = Vector<Cyclotomic>;
using QMatrix = Matrix<Rational>;

namespace detail {
template <class Derived>
void require_square(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
}
}  // namespace detail

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
template <class Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  detail::require_square(m);
  const Eigen::Index n = m.rows();
  if (n == 0) return S(1);
  Matrix<S> a = m;
  S prev(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      Eigen::Index p = k + 1;
      while (p < n && is_zero(a(p, k))) ++p;
      if (p == n) return S(0);
      a.row(k).swap(a.row(p));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = exact_quotient(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      a(i, k) = S(0);
    }
    prev = a(k, k);
  }
  S det = a(n - 1, n - 1);
  return negate ? S(-det) : det;
}

/// Characteristic polynomial det(xI - M), monic, by Berkowitz's
/// division-free algorithm.
template <class Derived>
Poly<typename Derived::Scalar> charpoly(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  detail::require_square(m);
  const Eigen::Index n = m.rows();
  // v holds the coefficients of the characteristic polynomial of the leading
  // r x r block, highest degree first.
  std::vector<S> v{S(1)};
  for (Eigen::Index r = 0; r < n; ++r) {
    // Toeplitz column: 1, -a, -R C, -R A C, -R A^2 C, ...
    const S a = m(r, r);
    std::vector<S> col{S(1), -a};
    if (r > 0) {
      Vector<S> c = m.block(0, r, r, 1);
      const auto R = m.block(r, 0, 1, r);
      const auto A = m.block(0, 0, r, r);
      for (Eigen::Index k = 0; k < r; ++k) {
        S rc(0);
        for (Eigen::Index j = 0; j < r; ++j)
          if (!is_zero(c(j)) && !is_zero(R(0, j))) rc += R(0, j) * c(j);
        col.push_back(-rc);
        if (k + 1 < r) {
          Vector<S> next(r);
          for (Eigen::Index i = 0; i < r; ++i) {
            S acc(0);
            for (Eigen::Index j = 0; j < r; ++j)
              if (!is_zero(c(j)) && !is_zero(A(i, j))) acc += A(i, j) * c(j);
            next(i) = acc;
          }
          c = std::move(next);
        }
      }
    }
    std::vector<S> w(v.size() + 1, S(0));
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = 0; j <= i && j < v.size(); ++j)
        if (i - j < col.size() && !is_zero(v[j])) w[i] += col[i - j] * v[j];
    v = std::move(w);
  }
  return Poly<S>(std::vector<S>(v.rbegin(), v.rend()));
}

/// det(I - x M) = x^n charpoly(1/x).
template <class Derived>
Poly<typename Derived::Scalar> det_one_minus_x(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  const Poly<S> cp = charpoly(m);
  std::vector<S> v(static_cast<std::size_t>(m.rows()) + 1, S(0));
  for (int k = 0; k <= cp.degree(); ++k) v[static_cast<std::size_t>(m.rows() - k)] = cp.coeff(k);
  return Poly<S>(std::move(v));
}

/// Reduced row echelon form over a field; pivot columns are returned.
template <class S>
std::vector<Eigen::Index> rref_in_place(Matrix<S>& a) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index p = row;
    while (p < a.rows() && is_zero(a(p, col))) ++p;
    if (p == a.rows()) continue;
    if (p != row) a.row(p).swap(a.row(row));
    const S inv = S(1) / a(row, col);
    for (Eigen::Index j = col; j < a.cols(); ++j)
      if (!is_zero(a(row, j))) a(row, j) *= inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == row || is_zero(a(i, col))) continue;
      const S f = a(i, col);
      for (Eigen::Index j = col; j < a.cols(); ++j)
        if (!is_zero(a(row, j))) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  Matrix<typename Derived::Scalar> a = m;
  return static_cast<Eigen::Index>(rref_in_place(a).size());
}

/// Basis of { v : M v = 0 }, one vector per free column.
template <class Derived>
std::vector<Vector<typename Derived::Scalar>> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  Matrix<S> a = m;
  const auto pivots = rref_in_place(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vector<S>> basis;
  for (Eigen::Index f = 0; f < a.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vector<S> v = Vector<S>::Zero(a.cols());
    v(f) = S(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r]) = -a(static_cast<Eigen::Index>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Basis of ker(M - zeta I); empty if zeta is not an eigenvalue.
template <class Derived>
std::vector<Vector<typename Derived::Scalar>> eigenspace_basis(const Eigen::MatrixBase<Derived>& m,
                                                               const typename Derived::Scalar& zeta) {
  using S = typename Derived::Scalar;
  detail::require_square(m);
  Matrix<S> a = m;
  for (Eigen::Index i = 0; i < a.rows(); ++i) a(i, i) -= zeta;
  return nullspace(a);
}

/// Solution of A x = b for square invertible A.
template <class S>
Vector<S> solve(const Matrix<S>& a, const Vector<S>& b) {
  detail::require_square(a);
  Matrix<S> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto pivots = rref_in_place(aug);
  if (static_cast<Eigen::Index>(pivots.size()) != a.cols() || pivots.back() >= a.cols())
    throw std::domain_error("linear system is singular");
  return aug.col(a.cols());
}

/// Exact matrix product without Eigen's blocked kernels, which assume cheap
/// scalars; zero entries are skipped.
template <class S>
Matrix<S> multiply(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
  Matrix<S> c = Matrix<S>::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (!is_zero(b(k, j))) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <class S>
Matrix<S> identity(Eigen::Index n) {
  return Matrix<S>::Identity(n, n);
}

template <class S>
S trace(const Matrix<S>& a) {
  S t(0);
  for (Eigen::Index i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

}  // namespace refl
