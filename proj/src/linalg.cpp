#include "pclyap/linalg.hpp"

#include <cmath>

namespace pclyap {

bool is_binary(const MatrixQ& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != Rational(0) && m(i, j) != Rational(1)) return false;
  return true;
}

bool is_nonnegative(const MatrixQ& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j).sign() < 0) return false;
  return true;
}

bool is_positive(const VectorQ& v) {
  for (Eigen::Index i = 0; i < v.rows(); ++i)
    if (v(i).sign() <= 0) return false;
  return true;
}

MatrixD to_double_matrix(const MatrixQ& m) {
  MatrixD out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
  return out;
}

VectorD to_double_vector(const VectorQ& v) {
  VectorD out(v.rows());
  for (Eigen::Index i = 0; i < v.rows(); ++i) out(i) = v(i).to_double();
  return out;
}

bool is_nilpotent(const MatrixQ& a) {
  if (a.rows() != a.cols())
    throw DimensionError("nilpotency test on non-square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return true;
  // A nilpotent iff A^n = 0; square up to an exponent >= n.
  MatrixQ b = a;
  for (Eigen::Index e = 1; e < n; e *= 2) {
    if (is_zero_matrix(b)) return true;
    b = MatrixQ(b * b);
  }
  return is_zero_matrix(b);
}

double spectral_radius_estimate(const MatrixQ& a, int iters) {
  if (a.rows() != a.cols())
    throw DimensionError("spectral radius of non-square matrix");
  if (iters < 1) throw DomainError("spectral_radius_estimate needs iters >= 1");
  if (a.rows() == 0) return 0.0;
  if (is_nilpotent(a)) return 0.0;

  // Normalized repeated squaring; log accumulation keeps huge/tiny norms
  // representable. m stays at infinity norm 1 throughout.
  MatrixD m = to_double_matrix(a);
  double nrm = infinity_norm(m);
  if (nrm == 0.0) return 0.0;
  m /= nrm;
  long double log_norm = std::log(static_cast<long double>(nrm));
  for (int k = 0; k < iters; ++k) {
    const MatrixD sq = m * m;
    const double s = infinity_norm(sq);
    if (s == 0.0) return 0.0;  // underflowed past double range
    log_norm = 2 * log_norm + std::log(static_cast<long double>(s));
    m = sq / s;
  }
  return static_cast<double>(
      std::exp(log_norm / std::exp2(static_cast<long double>(iters))));
}

bool is_positive_definite(const MatrixQ& m, const Rational& tol) {
  require_symmetric(m, tol);
  return definiteness_check<Rational>(m, tol, false).ok;
}

bool is_positive_semidefinite(const MatrixQ& m, const Rational& tol) {
  require_symmetric(m, tol);
  return definiteness_check<Rational>(m, tol, true).ok;
}

bool is_positive_definite(const MatrixD& m, double tol) {
  require_symmetric(m, tol);
  return definiteness_check<double>(m, tol, false).ok;
}

bool is_positive_semidefinite(const MatrixD& m, double tol) {
  require_symmetric(m, tol);
  return definiteness_check<double>(m, tol, true).ok;
}

}  // namespace pclyap
