#pragma once

#include <json.hpp>
#include <string>

#include "pclyap/certificates.hpp"
#include "pclyap/jsr.hpp"
#include "pclyap/labeled_graph.hpp"
#include "pclyap/matrix_set.hpp"
#include "pclyap/nfa.hpp"
#include "pclyap/synthesis.hpp"
#include "pclyap/verify.hpp"

namespace pclyap {

/// All serialization goes through ordered_json so that key order (and hence
/// byte-level output) is deterministic.
using json = nlohmann::ordered_json;

/// Read and parse a JSON file; syntax errors become ParseError with the
/// byte offset reported by the parser.
json load_json_file(const std::string& path);

/// Scalars: integers stay JSON integers (when they fit 64 bits), everything
/// else becomes an exact decimal or "p/q" string. Parsing accepts integers
/// and strings; JSON floats are rejected because they have no exact value.
Rational json_to_rational(const json& j, const std::string& where);
json rational_to_json(const Rational& r);

/// {"rows": r, "cols": c, "data": [[row], ...]}
MatrixQ parse_matrix(const json& j, const std::string& where);
json matrix_to_json(const MatrixQ& m);

/// Plain arrays; used inside certificates.
VectorQ parse_vector(const json& j, const std::string& where);
json vector_to_json(const VectorQ& v);

Word parse_word(const json& j, const std::string& where);
json word_to_json(const Word& w);

/// {"alphabet_size": m, "nodes": [...], "edges": [{"from","to","label"}]}
/// with node names in from/to.
LabeledGraph parse_graph(const json& j);
json graph_to_json(const LabeledGraph& g);

/// {"alphabet_size": m, "states": [...], "initial": [...], "accepting":
/// [...], "transitions": [["q0", 1, "q1"], ...]} with state names.
Nfa parse_nfa(const json& j);

/// {"matrices": [Matrix, ...]} possibly with extra keys (so counterexample
/// bundles can be fed wherever a matrix set is expected).
MatrixSet parse_matrix_set(const json& j);
json matrix_set_to_json(const MatrixSet& s);

/// Certificates inside bundles: "conic_certificate" maps node name to a
/// plain array, "ellipsoidal_certificate" maps node name to nested rows.
ConicCertificate parse_conic_certificate(const json& j);
json conic_certificate_to_json(const ConicCertificate& c);
EllipsoidalCertificate parse_ellipsoidal_certificate(const json& j);
json ellipsoidal_certificate_to_json(const EllipsoidalCertificate& c);

/// Counterexample bundles: missing word, family, one certificate, the
/// original-to-expanded node naming, and the expanded graph itself (so the
/// bundle can be re-verified without rerunning synthesis).
json bundle_to_json(const ConicSynthesis& s);
json bundle_to_json(const EllipsoidalSynthesis& s);

/// {"overall", "nodes" (when present), "edges": [... "slack" as exact
/// string ...]}
json report_to_json(const InequalityCheckReport& r);

/// {"t", "lower", "lower_witness", "upper", "gamma_star"} where gamma_star
/// is a number, null (not requested) or "inconclusive".
json bounds_to_json(const JsrBounds& b, const std::optional<double>& gamma,
                    bool gamma_requested);

}  // namespace pclyap
