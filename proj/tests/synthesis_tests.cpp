#include <doctest.h>

#include <algorithm>
#include <set>

#include "pclyap/auxiliary_graph.hpp"
#include "pclyap/synthesis.hpp"
#include "pclyap/verify.hpp"
#include "test_support.hpp"

using pclyap::AuxiliaryGraph;
using pclyap::CycleError;
using pclyap::LabeledGraph;
using pclyap::MatrixSet;
using pclyap::Rational;
using pclyap::Word;

TEST_CASE("auxiliary graph of an edgeless graph is edgeless") {
  LabeledGraph g;
  g.alphabet_size = 2;
  g.nodes = {"P1", "P2"};
  const MatrixSet s = pclyap::build_sigma_w({1}, 2);  // dimension 2

  const AuxiliaryGraph aux = pclyap::build_auxiliary_graph(g, s);
  CHECK(aux.graph_nodes == 2);
  CHECK(aux.dim == 2);
  CHECK(aux.node_count() == 4);
  CHECK(aux.edges.empty());
  CHECK(aux.id(1, 1) == 3);
  CHECK(aux.unpack(3) == std::pair<int, int>(1, 1));

  // Nothing to order: the min-heap pops ids in order, numbering is 1..V.
  const std::vector<int> numbering = pclyap::topological_numbering(aux);
  CHECK(numbering == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("missing word makes the auxiliary graph acyclic") {
  const LabeledGraph g = testsupport::two_node_incomplete();
  // [1,2,1] is unreadable in g; its family (a palindrome, so the mirror is
  // itself) has only zero long products along g's paths.
  const MatrixSet s = pclyap::build_sigma_w({1, 2, 1}, 2);

  const AuxiliaryGraph aux = pclyap::build_auxiliary_graph(g, s);
  CHECK(aux.node_count() == 8);  // 2 graph nodes x dimension 4

  const std::vector<int> numbering = pclyap::topological_numbering(aux);
  REQUIRE(numbering.size() == 8);
  // A valid numbering is a permutation of 1..V that increases along edges.
  std::set<int> values(numbering.begin(), numbering.end());
  CHECK(values.size() == 8);
  CHECK(*values.begin() == 1);
  CHECK(*values.rbegin() == 8);
  for (const auto& e : aux.edges) CHECK(numbering[e.from] < numbering[e.to]);
}

TEST_CASE("readable family induces a cycle, reported with a witness") {
  const LabeledGraph g = testsupport::two_node_complete();
  // Path-complete graphs read every word, so arbitrarily long nonzero
  // products exist and the auxiliary graph cannot be acyclic.
  const MatrixSet s = pclyap::build_sigma_w({1, 2, 1}, 2);
  const AuxiliaryGraph aux = pclyap::build_auxiliary_graph(g, s);

  std::set<std::pair<int, int>> arcs;
  for (const auto& e : aux.edges) arcs.insert({e.from, e.to});

  bool threw = false;
  try {
    pclyap::topological_numbering(aux);
  } catch (const CycleError& e) {
    threw = true;
    REQUIRE(e.cycle.size() >= 2);
    CHECK(e.cycle.front() == e.cycle.back());
    for (std::size_t i = 0; i + 1 < e.cycle.size(); ++i)
      CHECK(arcs.count({e.cycle[i], e.cycle[i + 1]}) == 1);
  }
  CHECK(threw);
}

TEST_CASE("conic synthesis on the two-node incomplete graph") {
  const LabeledGraph g = testsupport::two_node_incomplete();
  const auto syn = pclyap::synthesize_conic(g);

  CHECK(syn.missing_word == Word{1, 2, 1});
  CHECK(syn.expansion.original_count == 2);
  CHECK(syn.expansion.graph.node_count() == 2);  // already single-letter

  // The family is the one attached to the mirrored missing word; [1,2,1]
  // is a palindrome so it equals the family of the word itself.
  const MatrixSet expected = pclyap::build_sigma_w({1, 2, 1}, 2);
  REQUIRE(syn.matrices.matrices.size() == 2);
  CHECK(pclyap::same_matrix(syn.matrices.matrices[0], expected.matrices[0]));
  CHECK(pclyap::same_matrix(syn.matrices.matrices[1], expected.matrices[1]));

  // Certificate entries are positive integers (a topological numbering).
  for (const auto& [name, v] : syn.certificate.vectors) {
    CHECK((name == "P1" || name == "P2"));
    REQUIRE(v.rows() == 4);
    for (Eigen::Index l = 0; l < v.rows(); ++l) {
      CHECK(v(l).is_integer());
      CHECK(v(l).sign() > 0);
    }
  }

  pclyap::VerifyOptions strict;
  strict.strict_on_support = true;
  const auto report = pclyap::verify_certificate(syn.expansion.graph,
                                                 syn.matrices,
                                                 syn.certificate, strict);
  CHECK(report.overall);

  const auto [cycle, radius] =
      pclyap::cycle_product_radius(syn.matrices,
                                   pclyap::mirror(syn.missing_word));
  CHECK(radius == 1.0);
  CHECK(pclyap::is_binary(cycle));
}

TEST_CASE("ellipsoidal synthesis transposes the family and squares nothing") {
  const LabeledGraph g = testsupport::two_node_incomplete();
  const auto conic = pclyap::synthesize_conic(g);
  const auto ell = pclyap::synthesize_ellipsoidal(g);

  CHECK(ell.missing_word == conic.missing_word);
  REQUIRE(ell.matrices.matrices.size() == conic.matrices.matrices.size());
  for (std::size_t k = 0; k < ell.matrices.matrices.size(); ++k)
    CHECK(pclyap::same_matrix(
        ell.matrices.matrices[k],
        pclyap::MatrixQ(conic.matrices.matrices[k].transpose())));

  // P_i is the diagonal form of the conic vector for the same node.
  for (const auto& [name, p] : ell.certificate.matrices) {
    const auto& v = conic.certificate.vectors.at(name);
    REQUIRE(p.rows() == v.rows());
    for (Eigen::Index i = 0; i < p.rows(); ++i)
      for (Eigen::Index j = 0; j < p.cols(); ++j)
        CHECK(p(i, j) == (i == j ? v(i) : Rational(0)));
    CHECK(pclyap::is_positive_definite(p, Rational(0)));
  }

  const auto report = pclyap::verify_certificate(ell.expansion.graph,
                                                 ell.matrices,
                                                 ell.certificate);
  CHECK(report.overall);
  for (const auto& node : report.nodes) CHECK(node.holds);
}

TEST_CASE("synthesis refuses path-complete input") {
  CHECK_THROWS_AS(pclyap::synthesize_conic(testsupport::two_node_complete()),
                  pclyap::PathCompleteInputError);
  CHECK_THROWS_AS(
      pclyap::synthesize_ellipsoidal(testsupport::one_node_complete(2)),
      pclyap::PathCompleteInputError);
}

TEST_CASE("multi-letter labels are refuted through their expansion") {
  LabeledGraph g;
  g.alphabet_size = 2;
  g.nodes = {"P1"};
  g.edges.push_back({0, 0, {1, 2}});

  const auto syn = pclyap::synthesize_conic(g);
  CHECK(syn.missing_word == Word{1, 1});
  CHECK(syn.expansion.original_count == 1);
  CHECK(syn.expansion.graph.node_count() == 2);
  CHECK(syn.certificate.vectors.size() == 2);  // covers the fresh node too

  pclyap::VerifyOptions strict;
  strict.strict_on_support = true;
  CHECK(pclyap::verify_certificate(syn.expansion.graph, syn.matrices,
                                   syn.certificate, strict)
            .overall);
}

TEST_CASE("synthesized refutations verify across a random corpus") {
  // Seed chosen apart from the acceptance run so the corpora differ.
  const auto corpus = testsupport::incomplete_corpus(9407, 40);
  pclyap::VerifyOptions strict;
  strict.strict_on_support = true;

  for (const auto& g : corpus) {
    const auto conic = pclyap::synthesize_conic(g);
    CHECK(pclyap::verify_certificate(conic.expansion.graph, conic.matrices,
                                     conic.certificate, strict)
              .overall);
    const auto [cycle, radius] =
        pclyap::cycle_product_radius(conic.matrices,
                                     pclyap::mirror(conic.missing_word));
    CHECK(radius == 1.0);

    const auto ell = pclyap::synthesize_ellipsoidal(g);
    CHECK(ell.missing_word == conic.missing_word);
    CHECK(pclyap::verify_certificate(ell.expansion.graph, ell.matrices,
                                     ell.certificate)
              .overall);
  }
}
