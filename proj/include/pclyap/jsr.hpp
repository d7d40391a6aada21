#pragma once

#include <optional>
#include <utility>

#include "pclyap/labeled_graph.hpp"
#include "pclyap/limits.hpp"
#include "pclyap/matrix_set.hpp"

namespace pclyap {

/// max over nonempty words u with |u| <= depth of rho(A_u)^(1/|u|), using
/// the exact-nilpotency-aware spectral radius estimate. Always a valid lower
/// bound on the joint spectral radius. The witness is the first word in
/// shortlex order attaining the max. Enumeration is capped by
/// limits.max_words (counted as alphabet_size^depth up front).
std::pair<double, Word> jsr_lower_bound(const MatrixSet& s, int depth,
                                        const Limits& limits = {});

/// max over words u with |u| = depth of ||A_u||_inf^(1/depth); a valid upper
/// bound for every depth. Same cap as the lower bound.
double jsr_upper_bound(const MatrixSet& s, int depth,
                       const Limits& limits = {});

struct JsrBounds {
  int depth = 0;
  double lower = 0.0;
  Word lower_witness;
  double upper = 0.0;
};

/// Both brute-force bounds at the same depth.
JsrBounds jsr_bounds(const MatrixSet& s, int depth, const Limits& limits = {});

/// Entrywise division by gamma > 0, exact.
MatrixSet scale_set(const MatrixSet& s, const Rational& gamma);

/// Smallest gamma (within tol) such that the set scaled by 1/gamma admits a
/// conic certificate for the graph g, found by bisection; a valid upper
/// bound on the joint spectral radius whenever it returns. Requires
/// nonnegative matrices and a path-complete graph (checked), and runs on
/// the label-expanded graph. The per-gamma feasibility test is a Kleene
/// iteration from all-ones vectors: stabilizing means feasible, an entry
/// beyond 1e9 means infeasible, and hitting iter_cap with neither means the
/// whole computation is inconclusive, which is reported as nullopt
/// (distinct from any feasibility verdict). The returned gamma always
/// passed the feasibility test itself.
std::optional<double> conic_scaling_bound(const LabeledGraph& g,
                                          const MatrixSet& s,
                                          double tol = 1e-6,
                                          int iter_cap = 10000,
                                          const Limits& limits = {});

}  // namespace pclyap
