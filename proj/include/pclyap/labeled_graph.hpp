#pragma once

#include <string>
#include <vector>

#include "pclyap/word.hpp"

namespace pclyap {

/// Directed edge labeled with a nonempty word over {1..m}.
struct LabeledEdge {
  int from = 0;
  int to = 0;
  Word label;
};

/// Finite directed multigraph with word labels. Node ids are indices into
/// `nodes`; the names only matter for I/O and certificates keyed by node.
struct LabeledGraph {
  int alphabet_size = 0;
  std::vector<std::string> nodes;
  std::vector<LabeledEdge> edges;

  int node_count() const { return static_cast<int>(nodes.size()); }
  /// Index of the named node, or -1.
  int find_node(const std::string& name) const;
};

/// Structural checks: alphabet >= 1, at least one node, unique nonempty node
/// names, edge endpoints in range, labels nonempty words over the alphabet.
/// Throws DomainError on the first violation.
void validate_graph(const LabeledGraph& g);

/// True when every edge label has length one.
bool single_letter(const LabeledGraph& g);

/// One inequality "V_lhs(A_w x) <= V_rhs(x)" with w the matrix product word
/// (leftmost symbol applied last, i.e. A_w = A_{w_1} ... A_{w_t}).
struct LyapunovInequality {
  std::string rhs_node;
  std::string lhs_node;
  Word product;
};

/// Encode a finite set of inequalities among the declared nodes as a labeled
/// graph: each inequality becomes the edge rhs -> lhs labeled with the
/// mirror of its product word. (Paths read labels left to right while
/// products compose right to left, hence the mirror; round-tripping an edge
/// label through mirror() recovers the product word.)
LabeledGraph inequalities_to_graph(const std::vector<std::string>& nodes,
                                   const std::vector<LyapunovInequality>& ineqs,
                                   int alphabet_size);

/// expand_labels result: same language, single-letter labels. The first
/// `original_count` nodes of `graph` are the input nodes in input order;
/// fresh intermediate nodes are appended after them.
struct Expansion {
  LabeledGraph graph;
  int original_count = 0;
};

/// Split each edge labeled u_1...u_t (t >= 2) into a chain of t edges
/// through t-1 fresh nodes. Fresh node names are generated as
/// "@e<edge>.<position>" and never collide with existing names.
Expansion expand_labels(const LabeledGraph& g);

}  // namespace pclyap
