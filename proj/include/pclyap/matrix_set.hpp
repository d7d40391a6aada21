#pragma once

#include <utility>
#include <vector>

#include "pclyap/linalg.hpp"
#include "pclyap/word.hpp"

namespace pclyap {

/// Finite set of square matrices of a common dimension; the matrix for
/// symbol k (1-based) is matrices[k-1].
struct MatrixSet {
  std::vector<MatrixQ> matrices;

  int alphabet_size() const { return static_cast<int>(matrices.size()); }
  int dim() const {
    return matrices.empty() ? 0 : static_cast<int>(matrices[0].rows());
  }
};

/// All matrices square and of equal dimension, at least one matrix.
void validate_matrix_set(const MatrixSet& s);

/// A_u = A_{u_1} * ... * A_{u_t} (leftmost symbol leftmost in the product).
/// The empty word gives the identity.
MatrixQ word_product(const MatrixSet& s, const Word& u);

/// The unstable-by-construction family attached to a word w over {1..m}:
/// dimension n = |w| + 1, matrix l gets (A_l)_{i,i+1} = 1 wherever w_i = l,
/// and matrix 1 additionally gets (A_1)_{n,1} = 1. Every matrix is 0/1 with
/// at most one 1 per row and column, and their sum is the adjacency matrix
/// of the n-cycle 1 -> 2 -> ... -> n -> 1.
MatrixSet build_sigma_w(const Word& w, int alphabet_size);

/// The cycle product A_w * A_1 of the family above, together with its
/// spectral radius. The radius is exactly 1, detected structurally rather
/// than numerically: the product is a 0/1 matrix with at most one 1 per row
/// and column (so radius <= 1) and a 1 on the diagonal (so radius >= 1).
/// `s` must equal build_sigma_w(w, m); anything else is a DomainError.
std::pair<MatrixQ, double> cycle_product_radius(const MatrixSet& s,
                                                const Word& w);

/// Check that every nonzero product of 2(|w|+1) matrices from the family of
/// w contains w as a factor of its index word. Exhaustive over the nonzero
/// product tree (zero products prune whole subtrees). Guarded to |w| <= 8.
bool subproduct_containment_check(const Word& w, int alphabet_size);

/// Check that for the family of a word w over {1,2}, |w| <= 4, dropping the
/// matrix product block of w itself kills growth: every product of
/// |w|+1 blocks B_x (x != w, |x| = |w|) is zero.
bool particular_case_check(const Word& w);

}  // namespace pclyap
