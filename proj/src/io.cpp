#include "pclyap/io.hpp"

#include <fstream>
#include <sstream>

#include "pclyap/errors.hpp"

namespace pclyap {
namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& need(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing key \"") + key + "\"");
  return *it;
}

std::string need_string(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

long long need_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<long long>();
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what(),
                     static_cast<long long>(e.byte));
  }
}

Rational json_to_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      bad(where, e.what());
    }
  }
  if (j.is_number_float())
    bad(where,
        "floating-point literals are not exact; write the value as a string");
  bad(where, "expected an integer or a numeric string");
}

json rational_to_json(const Rational& r) {
  if (r.is_integer() && r.fits_int64()) return json(r.to_int64());
  return json(to_string(r));
}

MatrixQ parse_matrix(const json& j, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  const long long rows = need_int(need(j, "rows", where), where + ".rows");
  const long long cols = need_int(need(j, "cols", where), where + ".cols");
  if (rows < 0 || cols < 0) bad(where, "negative dimensions");
  const json& data = need(j, "data", where);
  if (!data.is_array() || static_cast<long long>(data.size()) != rows)
    bad(where + ".data", "expected " + std::to_string(rows) + " rows");
  MatrixQ m(rows, cols);
  for (long long i = 0; i < rows; ++i) {
    const json& row = data[static_cast<size_t>(i)];
    const std::string rw = where + ".data[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<long long>(row.size()) != cols)
      bad(rw, "expected " + std::to_string(cols) + " entries");
    for (long long k = 0; k < cols; ++k)
      m(i, k) = json_to_rational(row[static_cast<size_t>(k)],
                                 rw + "[" + std::to_string(k) + "]");
  }
  return m;
}

json matrix_to_json(const MatrixQ& m) {
  json data = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      row.push_back(rational_to_json(m(i, k)));
    data.push_back(std::move(row));
  }
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["data"] = std::move(data);
  return j;
}

VectorQ parse_vector(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  VectorQ v(j.size());
  for (size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) =
        json_to_rational(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

json vector_to_json(const VectorQ& v) {
  json j = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    j.push_back(rational_to_json(v(i)));
  return j;
}

Word parse_word(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of symbols");
  Word w;
  w.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    const long long s =
        need_int(j[i], where + "[" + std::to_string(i) + "]");
    if (s < 1) bad(where, "symbols are 1-based");
    w.push_back(static_cast<int>(s));
  }
  return w;
}

json word_to_json(const Word& w) {
  json j = json::array();
  for (int s : w) j.push_back(s);
  return j;
}

LabeledGraph parse_graph(const json& j) {
  const std::string where = "graph";
  if (!j.is_object()) bad(where, "expected an object");
  LabeledGraph g;
  g.alphabet_size = static_cast<int>(
      need_int(need(j, "alphabet_size", where), where + ".alphabet_size"));
  const json& nodes = need(j, "nodes", where);
  if (!nodes.is_array()) bad(where + ".nodes", "expected an array");
  for (size_t i = 0; i < nodes.size(); ++i)
    g.nodes.push_back(
        need_string(nodes[i], where + ".nodes[" + std::to_string(i) + "]"));
  const json& edges = need(j, "edges", where);
  if (!edges.is_array()) bad(where + ".edges", "expected an array");
  for (size_t i = 0; i < edges.size(); ++i) {
    const json& e = edges[i];
    const std::string ew = where + ".edges[" + std::to_string(i) + "]";
    if (!e.is_object()) bad(ew, "expected an object");
    const std::string from = need_string(need(e, "from", ew), ew + ".from");
    const std::string to = need_string(need(e, "to", ew), ew + ".to");
    const int fi = g.find_node(from);
    const int ti = g.find_node(to);
    if (fi < 0) bad(ew + ".from", "unknown node \"" + from + "\"");
    if (ti < 0) bad(ew + ".to", "unknown node \"" + to + "\"");
    g.edges.push_back(
        {fi, ti, parse_word(need(e, "label", ew), ew + ".label")});
  }
  validate_graph(g);
  return g;
}

json graph_to_json(const LabeledGraph& g) {
  json j;
  j["alphabet_size"] = g.alphabet_size;
  j["nodes"] = json::array();
  for (const std::string& n : g.nodes) j["nodes"].push_back(n);
  j["edges"] = json::array();
  for (const LabeledEdge& e : g.edges) {
    json je;
    je["from"] = g.nodes[static_cast<size_t>(e.from)];
    je["to"] = g.nodes[static_cast<size_t>(e.to)];
    je["label"] = word_to_json(e.label);
    j["edges"].push_back(std::move(je));
  }
  return j;
}

Nfa parse_nfa(const json& j) {
  const std::string where = "nfa";
  if (!j.is_object()) bad(where, "expected an object");
  Nfa a;
  a.alphabet_size = static_cast<int>(
      need_int(need(j, "alphabet_size", where), where + ".alphabet_size"));
  const json& states = need(j, "states", where);
  if (!states.is_array()) bad(where + ".states", "expected an array");
  for (size_t i = 0; i < states.size(); ++i)
    a.states.push_back(
        need_string(states[i], where + ".states[" + std::to_string(i) + "]"));
  auto state_index = [&](const std::string& name,
                         const std::string& w) -> int {
    for (size_t i = 0; i < a.states.size(); ++i)
      if (a.states[i] == name) return static_cast<int>(i);
    bad(w, "unknown state \"" + name + "\"");
  };
  auto read_state_list = [&](const char* key, std::vector<int>* out) {
    const json& list = need(j, key, where);
    const std::string w = where + "." + key;
    if (!list.is_array()) bad(w, "expected an array");
    for (size_t i = 0; i < list.size(); ++i) {
      const std::string iw = w + "[" + std::to_string(i) + "]";
      out->push_back(state_index(need_string(list[i], iw), iw));
    }
  };
  read_state_list("initial", &a.initial);
  read_state_list("accepting", &a.accepting);
  const json& trans = need(j, "transitions", where);
  if (!trans.is_array()) bad(where + ".transitions", "expected an array");
  for (size_t i = 0; i < trans.size(); ++i) {
    const json& t = trans[i];
    const std::string tw =
        where + ".transitions[" + std::to_string(i) + "]";
    if (!t.is_array() || t.size() != 3)
      bad(tw, "expected [from, symbol, to]");
    Nfa::Transition tr;
    tr.from = state_index(need_string(t[0], tw + "[0]"), tw + "[0]");
    tr.symbol = static_cast<int>(need_int(t[1], tw + "[1]"));
    tr.to = state_index(need_string(t[2], tw + "[2]"), tw + "[2]");
    a.transitions.push_back(tr);
  }
  validate_nfa(a);
  return a;
}

MatrixSet parse_matrix_set(const json& j) {
  const std::string where = "matrix set";
  if (!j.is_object()) bad(where, "expected an object");
  const json& mats = need(j, "matrices", where);
  if (!mats.is_array() || mats.empty())
    bad(where + ".matrices", "expected a non-empty array");
  MatrixSet s;
  for (size_t i = 0; i < mats.size(); ++i)
    s.matrices.push_back(parse_matrix(
        mats[i], where + ".matrices[" + std::to_string(i) + "]"));
  validate_matrix_set(s);
  return s;
}

json matrix_set_to_json(const MatrixSet& s) {
  json j;
  j["matrices"] = json::array();
  for (const MatrixQ& m : s.matrices) j["matrices"].push_back(matrix_to_json(m));
  return j;
}

ConicCertificate parse_conic_certificate(const json& j) {
  const std::string where = "conic_certificate";
  if (!j.is_object()) bad(where, "expected an object");
  ConicCertificate c;
  for (auto it = j.begin(); it != j.end(); ++it)
    c.vectors[it.key()] =
        parse_vector(it.value(), where + "[\"" + it.key() + "\"]");
  return c;
}

json conic_certificate_to_json(const ConicCertificate& c) {
  json j = json::object();
  for (const auto& [name, v] : c.vectors) j[name] = vector_to_json(v);
  return j;
}

EllipsoidalCertificate parse_ellipsoidal_certificate(const json& j) {
  const std::string where = "ellipsoidal_certificate";
  if (!j.is_object()) bad(where, "expected an object");
  EllipsoidalCertificate c;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string w = where + "[\"" + it.key() + "\"]";
    const json& rows = it.value();
    if (!rows.is_array() || rows.empty()) bad(w, "expected nested rows");
    const size_t n = rows.size();
    MatrixQ m(n, n);
    for (size_t r = 0; r < n; ++r) {
      const json& row = rows[r];
      const std::string rw = w + "[" + std::to_string(r) + "]";
      if (!row.is_array() || row.size() != n)
        bad(rw, "expected " + std::to_string(n) + " entries");
      for (size_t k = 0; k < n; ++k)
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) =
            json_to_rational(row[k], rw + "[" + std::to_string(k) + "]");
    }
    c.matrices[it.key()] = std::move(m);
  }
  return c;
}

json ellipsoidal_certificate_to_json(const EllipsoidalCertificate& c) {
  json j = json::object();
  for (const auto& [name, m] : c.matrices) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index k = 0; k < m.cols(); ++k)
        row.push_back(rational_to_json(m(r, k)));
      rows.push_back(std::move(row));
    }
    j[name] = std::move(rows);
  }
  return j;
}

namespace {

json expanded_nodes_to_json(const Expansion& ex) {
  // Original node -> its name in the expanded graph (identity today, but
  // the bundle stays self-describing if expansion ever renames).
  json j = json::object();
  for (int i = 0; i < ex.original_count; ++i)
    j[ex.graph.nodes[static_cast<size_t>(i)]] =
        ex.graph.nodes[static_cast<size_t>(i)];
  return j;
}

json bundle_common(const Word& missing, const std::vector<MatrixQ>& mats) {
  json j;
  j["missing_word"] = word_to_json(missing);
  j["family"] = "sigma";
  j["matrices"] = json::array();
  for (const MatrixQ& m : mats) j["matrices"].push_back(matrix_to_json(m));
  return j;
}

}  // namespace

json bundle_to_json(const ConicSynthesis& s) {
  json j = bundle_common(s.missing_word, s.matrices.matrices);
  j["conic_certificate"] = conic_certificate_to_json(s.certificate);
  j["expanded_nodes"] = expanded_nodes_to_json(s.expansion);
  j["expanded_graph"] = graph_to_json(s.expansion.graph);
  return j;
}

json bundle_to_json(const EllipsoidalSynthesis& s) {
  json j = bundle_common(s.missing_word, s.matrices.matrices);
  j["ellipsoidal_certificate"] =
      ellipsoidal_certificate_to_json(s.certificate);
  j["expanded_nodes"] = expanded_nodes_to_json(s.expansion);
  j["expanded_graph"] = graph_to_json(s.expansion.graph);
  return j;
}

json report_to_json(const InequalityCheckReport& r) {
  json j;
  j["overall"] = r.overall;
  if (!r.nodes.empty()) {
    j["nodes"] = json::array();
    for (const NodeCheck& n : r.nodes) {
      json jn;
      jn["node"] = n.node;
      jn["holds"] = n.holds;
      jn["slack"] = to_string(n.slack);
      j["nodes"].push_back(std::move(jn));
    }
  }
  j["edges"] = json::array();
  for (const EdgeCheck& e : r.edges) {
    json je;
    je["from"] = e.from;
    je["to"] = e.to;
    je["label"] = word_to_json(e.label);
    je["holds"] = e.holds;
    je["slack"] = to_string(e.slack);
    j["edges"].push_back(std::move(je));
  }
  return j;
}

json bounds_to_json(const JsrBounds& b, const std::optional<double>& gamma,
                    bool gamma_requested) {
  json j;
  j["t"] = b.depth;
  j["lower"] = b.lower;
  j["lower_witness"] = word_to_json(b.lower_witness);
  j["upper"] = b.upper;
  if (!gamma_requested)
    j["gamma_star"] = nullptr;
  else if (gamma)
    j["gamma_star"] = *gamma;
  else
    j["gamma_star"] = "inconclusive";
  return j;
}

}  // namespace pclyap
