#include "pclyap/jsr.hpp"

#include <cmath>
#include <vector>

#include "pclyap/errors.hpp"
#include "pclyap/path_complete.hpp"

namespace pclyap {

namespace {

void check_word_budget(int alphabet_size, int depth, const Limits& limits) {
  double words = 1.0;
  for (int i = 0; i < depth; ++i) {
    words *= alphabet_size;
    if (words > static_cast<double>(limits.max_words))
      throw ResourceLimitError("word enumeration exceeds max_words = " +
                               std::to_string(limits.max_words));
  }
}

/// Depth-first sweep over all words of the exact given length, lex order,
/// sharing prefix products and skipping subtrees with zero products (all
/// their candidates are zero, which `leaf` sees once via the pruned word).
template <class Leaf>
void sweep_products(const MatrixSet& s, int length, MatrixQ prefix, Word& word,
                    const Leaf& leaf) {
  if (static_cast<int>(word.size()) == length) {
    leaf(word, prefix);
    return;
  }
  for (int k = 1; k <= s.alphabet_size(); ++k) {
    word.push_back(k);
    MatrixQ next = mat_mul<Rational>(prefix, s.matrices[k - 1]);
    if (is_zero_matrix(next)) {
      // Every completion is zero; report one representative leaf so maxima
      // over "all words" still see the zero candidate.
      Word padded = word;
      padded.resize(length, 1);
      leaf(padded, next);
    } else {
      sweep_products(s, length, std::move(next), word, leaf);
    }
    word.pop_back();
  }
}

}  // namespace

std::pair<double, Word> jsr_lower_bound(const MatrixSet& s, int depth,
                                        const Limits& limits) {
  validate_matrix_set(s);
  if (depth < 1) throw DomainError("jsr bounds need depth >= 1");
  check_word_budget(s.alphabet_size(), depth, limits);

  double best = -1.0;
  Word witness;
  // Level by level: visiting in shortlex order plus strict improvement
  // makes the witness the shortlex-least word attaining the bound.
  for (int length = 1; length <= depth; ++length) {
    Word word;
    sweep_products(s, length, MatrixQ::Identity(s.dim(), s.dim()), word,
                   [&](const Word& u, const MatrixQ& product) {
                     const double rho = spectral_radius_estimate(product);
                     const double value =
                         std::pow(rho, 1.0 / static_cast<double>(u.size()));
                     if (value > best) {
                       best = value;
                       witness = u;
                     }
                   });
  }
  return {best, witness};
}

double jsr_upper_bound(const MatrixSet& s, int depth, const Limits& limits) {
  validate_matrix_set(s);
  if (depth < 1) throw DomainError("jsr bounds need depth >= 1");
  check_word_budget(s.alphabet_size(), depth, limits);

  Rational best_norm(0);
  Word word;
  sweep_products(s, depth, MatrixQ::Identity(s.dim(), s.dim()), word,
                 [&](const Word&, const MatrixQ& product) {
                   const Rational nrm = infinity_norm<Rational>(product);
                   if (nrm > best_norm) best_norm = nrm;
                 });
  return std::pow(best_norm.to_double(), 1.0 / static_cast<double>(depth));
}

JsrBounds jsr_bounds(const MatrixSet& s, int depth, const Limits& limits) {
  JsrBounds out;
  out.depth = depth;
  auto [lower, witness] = jsr_lower_bound(s, depth, limits);
  out.lower = lower;
  out.lower_witness = std::move(witness);
  out.upper = jsr_upper_bound(s, depth, limits);
  return out;
}

MatrixSet scale_set(const MatrixSet& s, const Rational& gamma) {
  validate_matrix_set(s);
  if (gamma.sign() <= 0) throw DomainError("scale_set needs gamma > 0");
  MatrixSet out;
  for (const auto& a : s.matrices) out.matrices.push_back(a / gamma);
  return out;
}

namespace {

constexpr double kDivergenceCap = 1e9;

enum class Feasibility { feasible, infeasible, inconclusive };

struct EdgeSystem {
  int from = 0;
  int to = 0;
  int letter = 0;
};

/// Kleene iteration: start every node vector at all-ones and propagate
/// requirements v_to >= (A_letter / gamma) v_from until nothing changes
/// (feasible), something blows past the cap (infeasible), or iter_cap
/// sweeps pass (inconclusive).
Feasibility conic_feasible(const std::vector<EdgeSystem>& edges,
                           const std::vector<MatrixD>& matrices, int nodes,
                           int dim, double gamma, int iter_cap) {
  std::vector<VectorD> v(nodes, VectorD::Ones(dim));
  for (int sweep = 0; sweep < iter_cap; ++sweep) {
    bool changed = false;
    for (const auto& e : edges) {
      const VectorD req = (matrices[e.letter - 1] * v[e.from]) / gamma;
      for (int l = 0; l < dim; ++l)
        if (req(l) > v[e.to](l)) {
          v[e.to](l) = req(l);
          changed = true;
          if (req(l) > kDivergenceCap) return Feasibility::infeasible;
        }
    }
    if (!changed) return Feasibility::feasible;
  }
  return Feasibility::inconclusive;
}

}  // namespace

std::optional<double> conic_scaling_bound(const LabeledGraph& g,
                                          const MatrixSet& s, double tol,
                                          int iter_cap, const Limits& limits) {
  validate_graph(g);
  validate_matrix_set(s);
  if (g.alphabet_size > s.alphabet_size())
    throw DomainError("graph alphabet larger than matrix set");
  for (const auto& a : s.matrices)
    if (!is_nonnegative(a))
      throw DomainError("conic scaling needs nonnegative matrices");
  if (tol <= 0) throw DomainError("conic scaling needs tol > 0");
  if (iter_cap < 1) throw DomainError("conic scaling needs iter_cap >= 1");

  // The scaling argument reads a stability certificate off the graph, which
  // is only sound for path-complete graphs.
  const Expansion ex = expand_labels(g);
  if (!check_path_complete(ex.graph, limits).complete)
    throw DomainError("conic scaling bound needs a path-complete graph");

  std::vector<EdgeSystem> edges;
  for (const auto& e : ex.graph.edges)
    edges.push_back({e.from, e.to, e.label[0]});
  std::vector<MatrixD> matrices;
  for (const auto& a : s.matrices) matrices.push_back(to_double_matrix(a));

  // Bracket: any joint-spectral-radius lower bound sits at or below the
  // optimum; the largest single-matrix norm is always feasible (all-ones
  // vectors work). All-zero sets short-circuit to 0.
  double hi = 0.0;
  for (const auto& a : s.matrices)
    hi = std::max(hi, infinity_norm<Rational>(a).to_double());
  if (hi == 0.0) return 0.0;

  const int lower_depth = s.alphabet_size() <= 128 ? 3 : 1;
  double lo = jsr_lower_bound(s, lower_depth, limits).first;
  if (lo > hi) lo = hi;

  const int nodes = ex.graph.node_count();
  const int dim = s.dim();
  auto test = [&](double gamma) {
    return conic_feasible(edges, matrices, nodes, dim, gamma, iter_cap);
  };

  // The norm bound is feasible on paper; certify it by iteration, widening
  // a few times if the iteration is too slow to settle at the boundary.
  Feasibility at_hi = test(hi);
  for (int widen = 0; widen < 4 && at_hi == Feasibility::inconclusive;
       ++widen) {
    hi *= 2;
    at_hi = test(hi);
  }
  if (at_hi != Feasibility::feasible) return std::nullopt;

  while (hi - lo > tol) {
    const double mid = lo + (hi - lo) / 2;
    switch (test(mid)) {
      case Feasibility::feasible:
        hi = mid;
        break;
      case Feasibility::infeasible:
        lo = mid;
        break;
      case Feasibility::inconclusive:
        return std::nullopt;
    }
  }
  return hi;
}

}  // namespace pclyap
