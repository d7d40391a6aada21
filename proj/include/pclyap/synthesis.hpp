#pragma once

#include "pclyap/certificates.hpp"
#include "pclyap/labeled_graph.hpp"
#include "pclyap/limits.hpp"
#include "pclyap/matrix_set.hpp"
#include "pclyap/word.hpp"

namespace pclyap {

/// Constructive refutation of a non-path-complete graph, conic flavor:
/// a family of 0/1 matrices whose joint spectral radius is exactly 1 (so no
/// scaled-down version is stable) together with strict conic inequalities
/// for the graph, proving the graph's inequality template cannot certify
/// stability in general.
struct ConicSynthesis {
  /// Shortest missing word of the label-expanded graph (shortlex order).
  Word missing_word;
  /// The family attached to mirror(missing_word); its cycle product has
  /// spectral radius 1.
  MatrixSet matrices;
  /// One positive integer vector per expanded-graph node, satisfying every
  /// edge inequality strictly on support.
  ConicCertificate certificate;
  /// The expanded graph the certificate is keyed by; the first
  /// expansion.original_count nodes are the input nodes.
  Expansion expansion;
};

/// Same refutation squeezed into diagonal quadratic forms: the certificate
/// pairs the *transposed* family with P_i = diag(v_i), and each expanded
/// edge i -> j labeled k satisfies B_k^T P_i B_k <= P_j (as forms) with the
/// stored matrix B_k = A_k^T, strictly on the image coordinates.
struct EllipsoidalSynthesis {
  Word missing_word;
  /// Transposes of the conic family's matrices.
  MatrixSet matrices;
  EllipsoidalCertificate certificate;
  Expansion expansion;
};

/// Throws PathCompleteInputError when the graph is path-complete (there is
/// nothing to refute). Both run the same pipeline: missing word ->
/// letter family -> acyclic auxiliary graph -> topological numbering.
ConicSynthesis synthesize_conic(const LabeledGraph& g,
                                const Limits& limits = {});
EllipsoidalSynthesis synthesize_ellipsoidal(const LabeledGraph& g,
                                            const Limits& limits = {});

}  // namespace pclyap
