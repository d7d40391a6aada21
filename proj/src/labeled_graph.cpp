#include "pclyap/labeled_graph.hpp"

#include <unordered_set>

#include "pclyap/errors.hpp"

namespace pclyap {

int LabeledGraph::find_node(const std::string& name) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i] == name) return static_cast<int>(i);
  return -1;
}

void validate_graph(const LabeledGraph& g) {
  if (g.alphabet_size < 1) throw DomainError("graph needs alphabet_size >= 1");
  if (g.nodes.empty()) throw DomainError("graph needs at least one node");
  std::unordered_set<std::string> seen;
  for (const auto& name : g.nodes) {
    if (name.empty()) throw DomainError("empty node name");
    if (!seen.insert(name).second)
      throw DomainError("duplicate node name '" + name + "'");
  }
  for (const auto& e : g.edges) {
    if (e.from < 0 || e.from >= g.node_count() || e.to < 0 ||
        e.to >= g.node_count())
      throw DomainError("edge endpoint out of range");
    if (e.label.empty()) throw DomainError("empty edge label");
    validate_word(e.label, g.alphabet_size);
  }
}

bool single_letter(const LabeledGraph& g) {
  for (const auto& e : g.edges)
    if (e.label.size() != 1) return false;
  return true;
}

LabeledGraph inequalities_to_graph(const std::vector<std::string>& nodes,
                                   const std::vector<LyapunovInequality>& ineqs,
                                   int alphabet_size) {
  LabeledGraph g;
  g.alphabet_size = alphabet_size;
  g.nodes = nodes;
  for (const auto& iq : ineqs) {
    const int from = g.find_node(iq.rhs_node);
    const int to = g.find_node(iq.lhs_node);
    if (from < 0) throw DomainError("unknown node '" + iq.rhs_node + "'");
    if (to < 0) throw DomainError("unknown node '" + iq.lhs_node + "'");
    if (iq.product.empty())
      throw DomainError("inequality with empty product word");
    g.edges.push_back({from, to, mirror(iq.product)});
  }
  validate_graph(g);
  return g;
}

Expansion expand_labels(const LabeledGraph& g) {
  validate_graph(g);
  Expansion out;
  out.graph.alphabet_size = g.alphabet_size;
  out.graph.nodes = g.nodes;
  out.original_count = g.node_count();
  std::unordered_set<std::string> used(g.nodes.begin(), g.nodes.end());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const LabeledEdge& edge = g.edges[e];
    if (edge.label.size() == 1) {
      out.graph.edges.push_back(edge);
      continue;
    }
    int prev = edge.from;
    for (std::size_t k = 0; k + 1 < edge.label.size(); ++k) {
      std::string name =
          "@e" + std::to_string(e) + "." + std::to_string(k + 1);
      while (used.count(name)) name.insert(name.begin(), '@');
      used.insert(name);
      const int fresh = out.graph.node_count();
      out.graph.nodes.push_back(name);
      out.graph.edges.push_back({prev, fresh, {edge.label[k]}});
      prev = fresh;
    }
    out.graph.edges.push_back({prev, edge.to, {edge.label.back()}});
  }
  return out;
}

}  // namespace pclyap
