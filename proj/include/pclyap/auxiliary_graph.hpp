#pragma once

#include <vector>

#include "pclyap/labeled_graph.hpp"
#include "pclyap/matrix_set.hpp"

namespace pclyap {

/// Product of a single-letter labeled graph with the coordinate structure of
/// a 0/1 matrix set: one node per (graph node i, coordinate l), one edge
/// (i,l) -> (j,l') per graph edge i -> j labeled [k] with (A_k)_{l',l} = 1.
/// Node (i,l) has id i*dim + l.
struct AuxiliaryGraph {
  int graph_nodes = 0;
  int dim = 0;
  struct Edge {
    int from = 0;
    int to = 0;
    int symbol = 0;
  };
  std::vector<Edge> edges;

  int node_count() const { return graph_nodes * dim; }
  int id(int node, int coord) const { return node * dim + coord; }
  std::pair<int, int> unpack(int id) const { return {id / dim, id % dim}; }
};

/// Requires single-letter labels, 0/1 matrices, and matching alphabets.
AuxiliaryGraph build_auxiliary_graph(const LabeledGraph& g, const MatrixSet& s);

/// Kahn's algorithm with a min-heap on node id: returns a numbering 1..V
/// (as a vector indexed by node id) that strictly increases along every
/// edge; ties always resolve toward the smallest node id, so the result is
/// deterministic. Throws CycleError with a witness cycle when the graph is
/// not acyclic.
std::vector<int> topological_numbering(const AuxiliaryGraph& a);

}  // namespace pclyap
