#pragma once

#include <string>
#include <vector>

#include "pclyap/certificates.hpp"
#include "pclyap/labeled_graph.hpp"
#include "pclyap/matrix_set.hpp"

namespace pclyap {

/// Gauge of the cone {x >= 0} scaled by p > 0: V_p(x) = max_l x_l / p_l.
/// Monotone and positively homogeneous; V_p(0) = 0. Requires x >= 0, p > 0.
Rational conic_value(const VectorQ& p, const VectorQ& x);

/// Entrywise test a * p_source <= p_target, which is equivalent to the
/// functional inequality V_{p_target}(a x) <= V_{p_source}(x) on the cone
/// (for nonnegative a and positive vectors). With strict_on_support each row
/// of a with a nonzero entry must satisfy its inequality strictly.
bool check_conic_inequality(const MatrixQ& a, const VectorQ& p_source,
                            const VectorQ& p_target, bool strict_on_support);

/// Which side of the quadratic form the matrix transpose lands on:
///   pre:  a^T * P_source * a  fits under  P_target
///   post: a   * P_source * a^T fits under P_target
/// post with a matrix equals pre with its transpose; both appear because
/// certificates for a transposed family are stated against the original one.
enum class QuadDirection { pre, post };

/// PSD test of the gap P_target minus the pushed-through form; `strict`
/// demands positive definiteness instead. Exact when tol is 0.
bool check_ellipsoidal_inequality(const MatrixQ& a, const MatrixQ& p_source,
                                  const MatrixQ& p_target, QuadDirection dir,
                                  bool strict, const Rational& tol);

struct VerifyOptions {
  /// Conic family: require strictness on the support rows.
  bool strict_on_support = false;
  /// Ellipsoidal family: transpose placement and strict-vs-semi.
  QuadDirection direction = QuadDirection::pre;
  bool strict = false;
  /// Tolerance for the ellipsoidal pivot tests; 0 = exact. The default
  /// accepts pivots down to -1e-9 in the semidefinite mode.
  Rational tol = Rational(1, 1000000000);
};

struct EdgeCheck {
  int edge_index = 0;
  std::string from;
  std::string to;
  Word label;
  bool holds = false;
  /// Conic: smallest entrywise gap of p_target - A p_source. Ellipsoidal:
  /// smallest elimination pivot of the gap matrix (the offending pivot when
  /// the check fails).
  Rational slack;
};

/// Per-node validity checks (currently only the ellipsoidal family has any:
/// positive definiteness of each P_i).
struct NodeCheck {
  std::string node;
  bool holds = false;
  Rational slack;
};

struct InequalityCheckReport {
  bool overall = false;
  std::vector<NodeCheck> nodes;
  std::vector<EdgeCheck> edges;
};

/// Check every edge inequality of g against the certificate. The matrix for
/// an edge labeled u is the product A_{mirror(u)}, so multi-letter labels
/// are handled by composition. Certificates must provide an entry for every
/// node of g (missing entries, nonpositive conic vectors and asymmetric
/// ellipsoidal matrices are DomainErrors, not failed checks).
InequalityCheckReport verify_certificate(const LabeledGraph& g,
                                         const MatrixSet& s,
                                         const ConicCertificate& cert,
                                         const VerifyOptions& opt = {});
InequalityCheckReport verify_certificate(const LabeledGraph& g,
                                         const MatrixSet& s,
                                         const EllipsoidalCertificate& cert,
                                         const VerifyOptions& opt = {});

/// Single quadratic form for the whole set: p symmetric positive definite
/// and p - A_k^T p A_k positive definite for every k (strict decrease).
bool verify_common_quadratic(const MatrixSet& s, const MatrixQ& p,
                             const Rational& tol = Rational(0));

}  // namespace pclyap
