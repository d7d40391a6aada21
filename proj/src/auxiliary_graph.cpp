#include "pclyap/auxiliary_graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "pclyap/errors.hpp"

namespace pclyap {

AuxiliaryGraph build_auxiliary_graph(const LabeledGraph& g,
                                     const MatrixSet& s) {
  validate_graph(g);
  validate_matrix_set(s);
  if (!single_letter(g))
    throw DomainError("auxiliary graph needs single-letter labels");
  if (g.alphabet_size != s.alphabet_size())
    throw DomainError("graph alphabet does not match matrix count");
  for (const auto& a : s.matrices)
    if (!is_binary(a))
      throw DomainError("auxiliary graph needs 0/1 matrices");

  AuxiliaryGraph aux;
  aux.graph_nodes = g.node_count();
  aux.dim = s.dim();
  for (const auto& e : g.edges) {
    const MatrixQ& a = s.matrices[e.label[0] - 1];
    for (int lp = 0; lp < aux.dim; ++lp)
      for (int l = 0; l < aux.dim; ++l)
        if (a(lp, l) == Rational(1))
          aux.edges.push_back(
              {aux.id(e.from, l), aux.id(e.to, lp), e.label[0]});
  }
  return aux;
}

namespace {

std::string describe(const AuxiliaryGraph& a, int id) {
  const auto [node, coord] = a.unpack(id);
  return "(" + std::to_string(node) + "," + std::to_string(coord) + ")";
}

}  // namespace

std::vector<int> topological_numbering(const AuxiliaryGraph& a) {
  const int n = a.node_count();
  std::vector<std::vector<int>> out(n);
  std::vector<int> indegree(n, 0);
  for (const auto& e : a.edges) {
    out[e.from].push_back(e.to);
    ++indegree[e.to];
  }

  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push(v);

  std::vector<int> number(n, 0);
  int next = 0;
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    number[v] = ++next;
    for (int to : out[v])
      if (--indegree[to] == 0) ready.push(to);
  }
  if (next == n) return number;

  // Some nodes never drained: walk leftover predecessors until one repeats,
  // which pins down a concrete cycle for the error.
  std::vector<std::vector<int>> pred(n);
  for (const auto& e : a.edges)
    if (indegree[e.from] > 0 && indegree[e.to] > 0)
      pred[e.to].push_back(e.from);
  int at = 0;
  while (indegree[at] == 0) ++at;
  std::vector<int> walk;
  std::vector<int> seen_at(n, -1);
  while (seen_at[at] < 0) {
    seen_at[at] = static_cast<int>(walk.size());
    walk.push_back(at);
    at = pred[at].front();
  }
  std::vector<int> cycle(walk.begin() + seen_at[at], walk.end());
  std::reverse(cycle.begin(), cycle.end());  // forward edge direction
  cycle.push_back(cycle.front());
  std::string msg = "graph has a cycle:";
  for (int id : cycle) msg += " " + describe(a, id);
  throw CycleError(msg, std::move(cycle));
}

}  // namespace pclyap
