#include "pclyap/synthesis.hpp"

#include "pclyap/auxiliary_graph.hpp"
#include "pclyap/errors.hpp"
#include "pclyap/path_complete.hpp"
#include "pclyap/verify.hpp"

namespace pclyap {

ConicSynthesis synthesize_conic(const LabeledGraph& g, const Limits& limits) {
  ConicSynthesis out;
  out.expansion = expand_labels(g);
  const LabeledGraph& ex = out.expansion.graph;

  const auto verdict = check_path_complete(ex, limits);
  if (verdict.complete)
    throw PathCompleteInputError("graph is path-complete; nothing to refute");
  out.missing_word = *verdict.missing_word;

  // The family is indexed by the mirror of the missing word: nonzero long
  // products then correspond to paths reading the missing word, and none
  // exist, which is what makes the auxiliary graph below acyclic.
  out.matrices = build_sigma_w(mirror(out.missing_word), ex.alphabet_size);

  const AuxiliaryGraph aux = build_auxiliary_graph(ex, out.matrices);
  const std::vector<int> numbering = topological_numbering(aux);

  const int dim = out.matrices.dim();
  for (int i = 0; i < ex.node_count(); ++i) {
    VectorQ v(dim);
    for (int l = 0; l < dim; ++l)
      v(l) = Rational(numbering[aux.id(i, l)]);
    out.certificate.vectors.emplace(ex.nodes[i], std::move(v));
  }

  // The numbering increases along auxiliary edges, which is exactly
  // strictness on support; re-check to fail loudly on any bug.
  VerifyOptions opt;
  opt.strict_on_support = true;
  if (!verify_certificate(ex, out.matrices, out.certificate, opt).overall)
    throw Error("internal: synthesized conic certificate failed its check");
  return out;
}

EllipsoidalSynthesis synthesize_ellipsoidal(const LabeledGraph& g,
                                            const Limits& limits) {
  ConicSynthesis conic = synthesize_conic(g, limits);

  EllipsoidalSynthesis out;
  out.missing_word = std::move(conic.missing_word);
  out.expansion = std::move(conic.expansion);
  for (const auto& a : conic.matrices.matrices)
    out.matrices.matrices.push_back(a.transpose());
  for (const auto& [name, v] : conic.certificate.vectors) {
    MatrixQ p = MatrixQ::Zero(v.rows(), v.rows());
    for (Eigen::Index l = 0; l < v.rows(); ++l) p(l, l) = v(l);
    out.certificate.matrices.emplace(name, std::move(p));
  }

  VerifyOptions opt;
  opt.direction = QuadDirection::pre;
  if (!verify_certificate(out.expansion.graph, out.matrices, out.certificate,
                          opt)
           .overall)
    throw Error(
        "internal: synthesized ellipsoidal certificate failed its check");
  return out;
}

}  // namespace pclyap
