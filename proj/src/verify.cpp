#include "pclyap/verify.hpp"

#include "pclyap/errors.hpp"

namespace pclyap {

namespace {

void require_positive_vector(const VectorQ& p, const char* what) {
  if (!is_positive(p))
    throw DomainError(std::string(what) + " must be entrywise positive");
}

/// Smallest entry of p_target - a * p_source, plus the verdict.
struct ConicGap {
  bool holds = false;
  Rational slack;
};

ConicGap conic_gap(const MatrixQ& a, const VectorQ& p_source,
                   const VectorQ& p_target, bool strict_on_support) {
  if (a.rows() != a.cols()) throw DimensionError("conic check needs square a");
  if (a.cols() != p_source.rows() || a.rows() != p_target.rows())
    throw DimensionError("conic check dimension mismatch");
  if (!is_nonnegative(a))
    throw DomainError("conic check needs a nonnegative matrix");
  require_positive_vector(p_source, "source vector");
  require_positive_vector(p_target, "target vector");

  const VectorQ image = mat_vec<Rational>(a, p_source);
  ConicGap out;
  out.holds = true;
  for (Eigen::Index l = 0; l < image.rows(); ++l) {
    const Rational gap = p_target(l) - image(l);
    if (l == 0 || gap < out.slack) out.slack = gap;
    const bool on_support = image(l).sign() > 0;
    if (gap.sign() < 0 || (strict_on_support && on_support && gap.sign() == 0))
      out.holds = false;
  }
  return out;
}

struct QuadGap {
  bool holds = false;
  Rational slack;
};

QuadGap quad_gap(const MatrixQ& a, const MatrixQ& p_source,
                 const MatrixQ& p_target, QuadDirection dir, bool strict,
                 const Rational& tol) {
  if (a.rows() != a.cols())
    throw DimensionError("ellipsoidal check needs square a");
  require_symmetric(p_source, tol);
  require_symmetric(p_target, tol);
  if (p_source.rows() != a.rows() || p_target.rows() != a.rows())
    throw DimensionError("ellipsoidal check dimension mismatch");

  const MatrixQ pushed =
      dir == QuadDirection::pre
          ? mat_mul<Rational>(mat_mul<Rational>(a.transpose(), p_source), a)
          : mat_mul<Rational>(mat_mul<Rational>(a, p_source), a.transpose());
  const MatrixQ gap = p_target - pushed;
  const auto check = definiteness_check<Rational>(gap, tol, !strict);
  return {check.ok, check.worst_pivot};
}

}  // namespace

Rational conic_value(const VectorQ& p, const VectorQ& x) {
  if (p.rows() != x.rows()) throw DimensionError("conic_value dim mismatch");
  require_positive_vector(p, "gauge vector");
  if (!is_nonnegative(MatrixQ(x)))
    throw DomainError("conic_value needs x >= 0");
  Rational best(0);  // correct for x = 0
  for (Eigen::Index l = 0; l < x.rows(); ++l) {
    const Rational q = x(l) / p(l);
    if (q > best) best = q;
  }
  return best;
}

bool check_conic_inequality(const MatrixQ& a, const VectorQ& p_source,
                            const VectorQ& p_target, bool strict_on_support) {
  return conic_gap(a, p_source, p_target, strict_on_support).holds;
}

bool check_ellipsoidal_inequality(const MatrixQ& a, const MatrixQ& p_source,
                                  const MatrixQ& p_target, QuadDirection dir,
                                  bool strict, const Rational& tol) {
  return quad_gap(a, p_source, p_target, dir, strict, tol).holds;
}

namespace {

template <class Cert, class Lookup>
void require_covering(const LabeledGraph& g, const Cert& cert,
                      const Lookup& entries) {
  for (const auto& name : g.nodes)
    if (entries.find(name) == entries.end())
      throw DomainError("certificate has no entry for node '" + name + "'");
  (void)cert;
}

}  // namespace

InequalityCheckReport verify_certificate(const LabeledGraph& g,
                                         const MatrixSet& s,
                                         const ConicCertificate& cert,
                                         const VerifyOptions& opt) {
  validate_graph(g);
  validate_matrix_set(s);
  if (g.alphabet_size > s.alphabet_size())
    throw DomainError("graph alphabet larger than matrix set");
  for (const auto& a : s.matrices)
    if (!is_nonnegative(a))
      throw DomainError("conic certificates need nonnegative matrices");
  require_covering(g, cert, cert.vectors);
  for (const auto& [name, v] : cert.vectors) {
    if (v.rows() != s.dim())
      throw DimensionError("certificate vector for '" + name +
                           "' has wrong dimension");
    require_positive_vector(v, "certificate vector");
  }

  InequalityCheckReport report;
  report.overall = true;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const LabeledEdge& edge = g.edges[e];
    const MatrixQ a = word_product(s, mirror(edge.label));
    const auto gap = conic_gap(a, cert.vectors.at(g.nodes[edge.from]),
                               cert.vectors.at(g.nodes[edge.to]),
                               opt.strict_on_support);
    report.edges.push_back({static_cast<int>(e), g.nodes[edge.from],
                            g.nodes[edge.to], edge.label, gap.holds,
                            gap.slack});
    report.overall = report.overall && gap.holds;
  }
  return report;
}

InequalityCheckReport verify_certificate(const LabeledGraph& g,
                                         const MatrixSet& s,
                                         const EllipsoidalCertificate& cert,
                                         const VerifyOptions& opt) {
  validate_graph(g);
  validate_matrix_set(s);
  if (g.alphabet_size > s.alphabet_size())
    throw DomainError("graph alphabet larger than matrix set");
  require_covering(g, cert, cert.matrices);

  InequalityCheckReport report;
  report.overall = true;
  for (const auto& name : g.nodes) {
    const MatrixQ& p = cert.matrices.at(name);
    if (p.rows() != s.dim() || p.cols() != s.dim())
      throw DimensionError("certificate matrix for '" + name +
                           "' has wrong dimension");
    require_symmetric(p, opt.tol);
    const auto pd = definiteness_check<Rational>(p, opt.tol, false);
    report.nodes.push_back({name, pd.ok, pd.worst_pivot});
    report.overall = report.overall && pd.ok;
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const LabeledEdge& edge = g.edges[e];
    const MatrixQ a = word_product(s, mirror(edge.label));
    const auto gap = quad_gap(a, cert.matrices.at(g.nodes[edge.from]),
                              cert.matrices.at(g.nodes[edge.to]),
                              opt.direction, opt.strict, opt.tol);
    report.edges.push_back({static_cast<int>(e), g.nodes[edge.from],
                            g.nodes[edge.to], edge.label, gap.holds,
                            gap.slack});
    report.overall = report.overall && gap.holds;
  }
  return report;
}

bool verify_common_quadratic(const MatrixSet& s, const MatrixQ& p,
                             const Rational& tol) {
  validate_matrix_set(s);
  require_symmetric(p, tol);
  if (p.rows() != s.dim())
    throw DimensionError("common quadratic form has wrong dimension");
  if (!definiteness_check<Rational>(p, tol, false).ok) return false;
  for (const auto& a : s.matrices)
    if (!quad_gap(a, p, p, QuadDirection::pre, true, tol).holds) return false;
  return true;
}

}  // namespace pclyap
