#pragma once

#include <Eigen/Core>
#include <cmath>
#include <string>

#include "pclyap/errors.hpp"
#include "pclyap/rational.hpp"

namespace pclyap {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Exact-arithmetic workhorses. All certificate checking runs on these;
/// doubles appear only in the spectral estimate below.
using MatrixQ = DenseMatrix<Rational>;
using VectorQ = DenseVector<Rational>;
using MatrixD = DenseMatrix<double>;
using VectorD = DenseVector<double>;

/// Dimension-checked product. Eigen would assert; we want a typed error that
/// survives release builds and carries the offending shapes.
template <class Scalar>
DenseMatrix<Scalar> mat_mul(const DenseMatrix<Scalar>& a,
                            const DenseMatrix<Scalar>& b) {
  if (a.cols() != b.rows())
    throw DimensionError("mat_mul: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " times " +
                         std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  return a * b;
}

template <class Scalar>
DenseVector<Scalar> mat_vec(const DenseMatrix<Scalar>& a,
                            const DenseVector<Scalar>& x) {
  if (a.cols() != x.rows())
    throw DimensionError("mat_vec: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " times vector of dim " +
                         std::to_string(x.rows()));
  return a * x;
}

/// Max absolute row sum. Works for any ordered scalar with abs().
template <class Scalar>
Scalar infinity_norm(const DenseMatrix<Scalar>& m) {
  using std::abs;
  Scalar best(0);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Scalar row(0);
    for (Eigen::Index j = 0; j < m.cols(); ++j) row += abs(m(i, j));
    if (row > best) best = row;
  }
  return best;
}

template <class Scalar>
bool is_zero_matrix(const DenseMatrix<Scalar>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != Scalar(0)) return false;
  return true;
}

template <class Scalar>
bool same_matrix(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

/// Every entry 0 or 1.
bool is_binary(const MatrixQ& m);
/// Every entry >= 0.
bool is_nonnegative(const MatrixQ& m);
/// Every entry > 0.
bool is_positive(const VectorQ& v);

MatrixD to_double_matrix(const MatrixQ& m);
VectorD to_double_vector(const VectorQ& v);

/// Exact nilpotency test via repeated squaring: A is nilpotent iff A^n = 0.
bool is_nilpotent(const MatrixQ& a);

/// Upper estimate of the spectral radius: `iters` rounds of normalized
/// repeated squaring give ||A^(2^iters)||^(1/2^iters), which converges to
/// rho(A) from above. Nilpotent input is detected exactly first and returns
/// 0.0, so a zero estimate really means zero asymptotic growth.
double spectral_radius_estimate(const MatrixQ& a, int iters = 20);

template <class Scalar>
struct DefinitenessCheck {
  bool ok = false;
  /// Smallest elimination pivot seen; on failure, the offending pivot.
  Scalar worst_pivot = Scalar(0);
};

/// Symmetric Gaussian elimination (the LDL^T pivots without the factors).
/// With `semi` false every pivot must exceed `tol` (positive definite);
/// with `semi` true pivots within tol of zero are accepted when the rest of
/// their column also vanishes, which is exactly the PSD completion condition.
/// Instantiated with Rational and tol 0 this is an exact decision procedure.
template <class Scalar>
DefinitenessCheck<Scalar> definiteness_check(DenseMatrix<Scalar> m,
                                             const Scalar& tol, bool semi) {
  using std::abs;
  const Eigen::Index n = m.rows();
  DefinitenessCheck<Scalar> out;
  Scalar min_pivot(0);
  bool seen = false;
  for (Eigen::Index k = 0; k < n; ++k) {
    const Scalar p = m(k, k);
    if (!seen || p < min_pivot) min_pivot = p;
    seen = true;
    if (p > tol) {
      const Eigen::Index r = n - k - 1;
      if (r > 0) {
        const DenseVector<Scalar> col = m.col(k).segment(k + 1, r);
        m.block(k + 1, k + 1, r, r) -= (col * col.transpose()) / p;
      }
      continue;
    }
    if (semi && abs(p) <= tol) {
      // Zero pivot: PSD iff the whole column is (numerically) zero too.
      bool clean = true;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (abs(m(i, k)) > tol) {
          clean = false;
          break;
        }
      if (clean) continue;  // skip the zero direction
    }
    out.ok = false;
    out.worst_pivot = p;
    return out;
  }
  out.ok = true;
  out.worst_pivot = seen ? min_pivot : Scalar(0);
  return out;
}

/// Positive-definiteness of a symmetric rational matrix; every pivot must
/// exceed tol, so boundary cases fail closed. Pass tol 0 for a truly exact
/// decision. Throws DimensionError on non-square and DomainError when the
/// input is not symmetric within tol.
bool is_positive_definite(const MatrixQ& m,
                          const Rational& tol = Rational(1, 1000000000));
bool is_positive_semidefinite(const MatrixQ& m,
                              const Rational& tol = Rational(1, 1000000000));
/// Floating-point variants for callers that live in double land.
bool is_positive_definite(const MatrixD& m, double tol = 1e-9);
bool is_positive_semidefinite(const MatrixD& m, double tol = 1e-9);

/// Shared validation for the definiteness entry points.
template <class Scalar>
void require_symmetric(const DenseMatrix<Scalar>& m, const Scalar& tol) {
  using std::abs;
  if (m.rows() != m.cols())
    throw DimensionError("definiteness check on non-square matrix (" +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ")");
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (abs(m(i, j) - m(j, i)) > tol)
        throw DomainError("definiteness check on asymmetric matrix");
}

}  // namespace pclyap
