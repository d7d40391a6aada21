#include "pclyap/matrix_set.hpp"

#include <algorithm>

#include "pclyap/errors.hpp"

namespace pclyap {

void validate_matrix_set(const MatrixSet& s) {
  if (s.matrices.empty()) throw DomainError("matrix set needs >= 1 matrix");
  const Eigen::Index d = s.matrices[0].rows();
  for (const auto& a : s.matrices) {
    if (a.rows() != a.cols()) throw DimensionError("matrix set entry not square");
    if (a.rows() != d)
      throw DimensionError("matrix set entries of mixed dimension");
  }
}

MatrixQ word_product(const MatrixSet& s, const Word& u) {
  validate_matrix_set(s);
  validate_word(u, s.alphabet_size());
  MatrixQ p = MatrixQ::Identity(s.dim(), s.dim());
  for (int c : u) p = mat_mul<Rational>(p, s.matrices[c - 1]);
  return p;
}

MatrixSet build_sigma_w(const Word& w, int alphabet_size) {
  if (w.empty()) throw DomainError("empty word");
  if (alphabet_size < 2) throw DomainError("family needs alphabet_size >= 2");
  validate_word(w, alphabet_size);
  const int n = static_cast<int>(w.size()) + 1;
  MatrixSet s;
  s.matrices.assign(alphabet_size, MatrixQ::Zero(n, n));
  for (int i = 0; i < n - 1; ++i) s.matrices[w[i] - 1](i, i + 1) = Rational(1);
  s.matrices[0](n - 1, 0) = Rational(1);  // the cycle-closing edge
  return s;
}

std::pair<MatrixQ, double> cycle_product_radius(const MatrixSet& s,
                                                const Word& w) {
  const MatrixSet expected = build_sigma_w(w, s.alphabet_size());
  if (expected.alphabet_size() != s.alphabet_size() ||
      expected.dim() != s.dim())
    throw DomainError("matrix set does not match the word's family");
  for (int k = 0; k < s.alphabet_size(); ++k)
    if (!same_matrix(s.matrices[k], expected.matrices[k]))
      throw DomainError("matrix set does not match the word's family");

  const MatrixQ p = mat_mul<Rational>(word_product(s, w), s.matrices[0]);

  // Structural radius-1 detection; all three properties are guaranteed by
  // the construction, so failures would mean a bug on our side.
  if (!is_binary(p)) throw Error("internal: cycle product not 0/1");
  bool diag_one = false;
  const int n = s.dim();
  for (int i = 0; i < n; ++i) {
    Rational row(0), col(0);
    for (int j = 0; j < n; ++j) {
      row += p(i, j);
      col += p(j, i);
    }
    if (row > Rational(1) || col > Rational(1))
      throw Error("internal: cycle product not a partial permutation");
    if (p(i, i) == Rational(1)) diag_one = true;
  }
  if (!diag_one) throw Error("internal: cycle product misses the fixed cycle");
  return {p, 1.0};
}

namespace {

/// DFS over nonzero products of `factors`, depth `target`; returns false as
/// soon as `reject` holds at a leaf. Zero products prune their subtree.
template <class Reject>
bool all_nonzero_leaves(const std::vector<std::pair<Word, MatrixQ>>& factors,
                        int target, const MatrixQ& prefix, Word& index,
                        const Reject& reject) {
  if (static_cast<int>(index.size()) >= target) return !reject(index);
  for (const auto& [word, factor] : factors) {
    const MatrixQ next = mat_mul<Rational>(prefix, factor);
    if (is_zero_matrix(next)) continue;
    index.insert(index.end(), word.begin(), word.end());
    if (!all_nonzero_leaves(factors, target, next, index, reject))
      return false;
    index.resize(index.size() - word.size());
  }
  return true;
}

}  // namespace

bool subproduct_containment_check(const Word& w, int alphabet_size) {
  if (w.size() > 8)
    throw ResourceLimitError("subproduct containment guarded to |w| <= 8");
  const MatrixSet s = build_sigma_w(w, alphabet_size);
  const int n = s.dim();

  std::vector<std::pair<Word, MatrixQ>> letters;
  for (int k = 1; k <= alphabet_size; ++k)
    letters.emplace_back(Word{k}, s.matrices[k - 1]);

  Word index;
  const MatrixQ id = MatrixQ::Identity(n, n);
  return all_nonzero_leaves(letters, 2 * n, id, index, [&](const Word& x) {
    return std::search(x.begin(), x.end(), w.begin(), w.end()) == x.end();
  });
}

bool particular_case_check(const Word& w) {
  if (w.size() > 4)
    throw ResourceLimitError("particular-case check guarded to |w| <= 4");
  validate_word(w, 2);
  const MatrixSet s = build_sigma_w(w, 2);
  const int len = static_cast<int>(w.size());
  const int n = s.dim();

  // Blocks: products over all length-|w| words except w itself.
  std::vector<std::pair<Word, MatrixQ>> blocks;
  Word x(len, 1);
  for (;;) {
    if (x != w) {
      MatrixQ b = word_product(s, x);
      if (!is_zero_matrix(b)) blocks.emplace_back(x, std::move(b));
    }
    int pos = len - 1;
    while (pos >= 0 && x[pos] == 2) x[pos--] = 1;
    if (pos < 0) break;
    ++x[pos];
  }

  // Growth needs some nonzero product of n blocks; none may exist.
  Word index;
  const MatrixQ id = MatrixQ::Identity(n, n);
  return all_nonzero_leaves(blocks, n * len, id, index,
                            [](const Word&) { return true; });
}

}  // namespace pclyap
