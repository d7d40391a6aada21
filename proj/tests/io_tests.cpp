#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "pclyap/io.hpp"
#include "pclyap/verify.hpp"
#include "test_support.hpp"

using pclyap::json;
using pclyap::ParseError;
using pclyap::Rational;
using pclyap::Word;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = "io_tests_tmp_" + std::to_string(counter++) + ".json";
    std::ofstream out(path, std::ios::binary);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("rational scalars: integers stay integers, the rest are strings") {
  CHECK(pclyap::rational_to_json(Rational(42)) == json(42));
  CHECK(pclyap::rational_to_json(Rational(-7)) == json(-7));
  CHECK(pclyap::rational_to_json(Rational(1, 2)) == json("0.5"));
  CHECK(pclyap::rational_to_json(Rational(1, 3)) == json("1/3"));

  CHECK(pclyap::json_to_rational(json(5), "x") == Rational(5));
  CHECK(pclyap::json_to_rational(json("0.1"), "x") == Rational(1, 10));
  CHECK(pclyap::json_to_rational(json("-3/7"), "x") == Rational(-3, 7));

  // JSON floats carry binary rounding; the schema refuses to guess.
  CHECK_THROWS_AS(pclyap::json_to_rational(json(0.1), "x"), ParseError);
  CHECK_THROWS_AS(pclyap::json_to_rational(json(true), "x"), ParseError);
  CHECK_THROWS_AS(pclyap::json_to_rational(json("ab"), "x"), ParseError);

  for (const auto& r : {Rational(0), Rational(-11, 4), Rational(355, 113)})
    CHECK(pclyap::json_to_rational(pclyap::rational_to_json(r), "x") == r);
}

TEST_CASE("matrix round trip preserves exact values and shape") {
  pclyap::MatrixQ m(2, 3);
  m << Rational(1), Rational(1, 2), Rational(-2, 3),
      Rational(0), Rational(7), Rational(-1, 10);
  const json j = pclyap::matrix_to_json(m);
  CHECK(j["rows"] == 2);
  CHECK(j["cols"] == 3);
  CHECK(j["data"][0][0] == json(1));       // integer stays a JSON int
  CHECK(j["data"][0][1] == json("0.5"));   // dyadic becomes a decimal
  CHECK(j["data"][0][2] == json("-2/3"));  // non-terminating becomes p/q
  CHECK(pclyap::same_matrix(pclyap::parse_matrix(j, "m"), m));

  json bad = j;
  bad["data"][1][0] = 0.25;
  CHECK_THROWS_AS(pclyap::parse_matrix(bad, "m"), ParseError);

  json short_row = j;
  short_row["data"][1] = json::array({1, 2});
  CHECK_THROWS_AS(pclyap::parse_matrix(short_row, "m"), ParseError);
}

TEST_CASE("graph round trip keys edges by node name") {
  const auto g = testsupport::two_node_incomplete();
  const json j = pclyap::graph_to_json(g);
  CHECK(j["alphabet_size"] == 2);
  CHECK(j["nodes"] == json::array({"P1", "P2"}));
  CHECK(j["edges"][0]["from"] == "P1");
  CHECK(j["edges"][0]["label"] == json::array({1}));

  const auto back = pclyap::parse_graph(j);
  CHECK(back.alphabet_size == g.alphabet_size);
  CHECK(back.nodes == g.nodes);
  REQUIRE(back.edges.size() == g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    CHECK(back.edges[e].from == g.edges[e].from);
    CHECK(back.edges[e].to == g.edges[e].to);
    CHECK(back.edges[e].label == g.edges[e].label);
  }

  json unknown = j;
  unknown["edges"][0]["to"] = "P9";
  CHECK_THROWS_AS(pclyap::parse_graph(unknown), ParseError);

  json missing = j;
  missing.erase("nodes");
  CHECK_THROWS_AS(pclyap::parse_graph(missing), ParseError);
}

TEST_CASE("nfa parsing resolves state names and validates symbols") {
  json j;
  j["alphabet_size"] = 2;
  j["states"] = json::array({"q0", "q1"});
  j["initial"] = json::array({"q0"});
  j["accepting"] = json::array({"q0", "q1"});
  j["transitions"] = json::array();
  j["transitions"].push_back(json::array({"q0", 1, "q1"}));
  j["transitions"].push_back(json::array({"q1", 2, "q0"}));

  const auto a = pclyap::parse_nfa(j);
  CHECK(a.states.size() == 2);
  CHECK(a.initial == std::vector<int>{0});
  CHECK(a.transitions.size() == 2);
  CHECK(a.transitions[0].symbol == 1);

  json unknown = j;
  unknown["transitions"][0][2] = "q7";
  CHECK_THROWS_AS(pclyap::parse_nfa(unknown), ParseError);

  json arity = j;
  arity["transitions"][0] = json::array({"q0", 1});
  CHECK_THROWS_AS(pclyap::parse_nfa(arity), ParseError);
}

TEST_CASE("matrix sets parse from bare sets and from bundles alike") {
  const auto s = pclyap::build_sigma_w({2, 1}, 2);
  const json j = pclyap::matrix_set_to_json(s);
  const auto back = pclyap::parse_matrix_set(j);
  REQUIRE(back.matrices.size() == 2);
  CHECK(pclyap::same_matrix(back.matrices[0], s.matrices[0]));
  CHECK(pclyap::same_matrix(back.matrices[1], s.matrices[1]));

  json empty;
  empty["matrices"] = json::array();
  CHECK_THROWS_AS(pclyap::parse_matrix_set(empty), ParseError);

  // A synthesized bundle carries extra keys next to "matrices"; they are
  // ignored when the file is used as a plain matrix set.
  const auto syn = pclyap::synthesize_conic(testsupport::two_node_incomplete());
  const auto from_bundle = pclyap::parse_matrix_set(pclyap::bundle_to_json(syn));
  CHECK(pclyap::same_matrix(from_bundle.matrices[0], syn.matrices.matrices[0]));
}

TEST_CASE("syntax errors carry the parser's byte offset") {
  TempFile f("{\"alphabet_size\": 2,, }");
  bool threw = false;
  try {
    pclyap::load_json_file(f.path);
  } catch (const ParseError& e) {
    threw = true;
    CHECK(e.byte_offset >= 0);
  }
  CHECK(threw);

  CHECK_THROWS_AS(pclyap::load_json_file("does_not_exist.json"), ParseError);
}

TEST_CASE("conic bundle round trip re-verifies from the file alone") {
  const auto syn = pclyap::synthesize_conic(testsupport::two_node_incomplete());
  const json j = pclyap::bundle_to_json(syn);
  CHECK(j["missing_word"] == json::array({1, 2, 1}));
  CHECK(j["family"] == "sigma");
  CHECK(j.contains("conic_certificate"));
  CHECK(j.contains("expanded_nodes"));
  CHECK(j.contains("expanded_graph"));

  const auto g = pclyap::parse_graph(j["expanded_graph"]);
  const auto s = pclyap::parse_matrix_set(j);
  const auto cert = pclyap::parse_conic_certificate(j["conic_certificate"]);
  pclyap::VerifyOptions strict;
  strict.strict_on_support = true;
  CHECK(pclyap::verify_certificate(g, s, cert, strict).overall);

  const Word w = pclyap::parse_word(j["missing_word"], "missing_word");
  CHECK(w == syn.missing_word);
}

TEST_CASE("ellipsoidal bundle round trip re-verifies from the file alone") {
  const auto syn =
      pclyap::synthesize_ellipsoidal(testsupport::two_node_incomplete());
  const json j = pclyap::bundle_to_json(syn);
  CHECK(j.contains("ellipsoidal_certificate"));
  CHECK(!j.contains("conic_certificate"));

  const auto g = pclyap::parse_graph(j["expanded_graph"]);
  const auto s = pclyap::parse_matrix_set(j);
  const auto cert =
      pclyap::parse_ellipsoidal_certificate(j["ellipsoidal_certificate"]);
  CHECK(pclyap::verify_certificate(g, s, cert).overall);
}

TEST_CASE("report serialization keeps slacks exact") {
  const auto g = testsupport::one_node_complete(2);
  pclyap::MatrixSet s;
  pclyap::MatrixQ a(1, 1);
  a << Rational(1, 3);
  s.matrices = {a, a};
  pclyap::ConicCertificate cert;
  pclyap::VectorQ p(1);
  p << 1;
  cert.vectors["P1"] = p;

  const auto report = pclyap::verify_certificate(g, s, cert);
  const json j = pclyap::report_to_json(report);
  CHECK(j["overall"] == true);
  CHECK(!j.contains("nodes"));  // conic reports have no node checks
  CHECK(j["edges"][0]["slack"] == "2/3");
  CHECK(j["edges"][0]["label"] == json::array({1}));
  CHECK(j["edges"][0]["holds"] == true);
}

TEST_CASE("bounds serialization distinguishes the three gamma states") {
  pclyap::JsrBounds b;
  b.depth = 3;
  b.lower = 1.0;
  b.lower_witness = {1, 2};
  b.upper = 1.25;

  const json none = pclyap::bounds_to_json(b, std::nullopt, false);
  CHECK(none["t"] == 3);
  CHECK(none["lower_witness"] == json::array({1, 2}));
  CHECK(none["gamma_star"].is_null());

  const json value = pclyap::bounds_to_json(b, 1.125, true);
  CHECK(value["gamma_star"] == json(1.125));

  const json stuck = pclyap::bounds_to_json(b, std::nullopt, true);
  CHECK(stuck["gamma_star"] == json("inconclusive"));
}

TEST_CASE("serialized output is byte-stable across calls") {
  const auto syn = pclyap::synthesize_conic(testsupport::two_node_incomplete());
  CHECK(pclyap::bundle_to_json(syn).dump(2) ==
        pclyap::bundle_to_json(syn).dump(2));
  const auto g = testsupport::two_node_complete();
  CHECK(pclyap::graph_to_json(g).dump() == pclyap::graph_to_json(g).dump());
}
