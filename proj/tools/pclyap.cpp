// Command-line front end: path-completeness checks, counterexample
// synthesis, certificate verification, JSR bounds and the NFA-universality
// reduction, over JSON files. Reports go to stdout; bundle/graph outputs go
// to --out. Exit codes: 0 = affirmative, 1 = negative verdict,
// 2 = any error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "pclyap/errors.hpp"
#include "pclyap/io.hpp"
#include "pclyap/jsr.hpp"
#include "pclyap/nfa.hpp"
#include "pclyap/path_complete.hpp"
#include "pclyap/synthesis.hpp"
#include "pclyap/verify.hpp"

namespace {

using pclyap::json;

struct Options {
  std::string command;
  std::string graph_file;
  std::string matrices_file;
  std::string cert_file;
  std::string nfa_file;
  std::string out;
  std::string family = "conic";
  std::string format = "json";
  std::string tol;
  int depth = 3;
  std::optional<std::string> jsr_graph;
  uint64_t cap_subsets = pclyap::Limits{}.max_subsets;
  uint64_t cap_words = pclyap::Limits{}.max_words;
};

pclyap::Limits make_limits(const Options& o) {
  if (o.cap_subsets == 0 || o.cap_words == 0)
    throw pclyap::DomainError("resource caps must be positive");
  return {o.cap_subsets, o.cap_words};
}

void emit(const json& j, const std::string& format,
          const std::string& text_rendering) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text_rendering;
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw pclyap::Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

// Accept either a bare graph file or a counterexample bundle, whose
// "expanded_graph" member is the graph its certificate is keyed by.
pclyap::LabeledGraph load_graph(const std::string& path) {
  const json j = pclyap::load_json_file(path);
  if (j.is_object() && j.contains("expanded_graph"))
    return pclyap::parse_graph(j["expanded_graph"]);
  return pclyap::parse_graph(j);
}

pclyap::MatrixSet load_matrices(const std::string& path) {
  return pclyap::parse_matrix_set(pclyap::load_json_file(path));
}

std::string render_word(const pclyap::Word& w) {
  return pclyap::format_word(w);
}

int cmd_check(const Options& o) {
  const pclyap::LabeledGraph g = load_graph(o.graph_file);
  const pclyap::PathCompletenessVerdict v =
      pclyap::check_path_complete(g, make_limits(o));
  json j;
  j["complete"] = v.complete;
  std::string text;
  if (v.complete) {
    j["missing_word"] = nullptr;
    text = "path-complete: yes\n";
  } else {
    j["missing_word"] = pclyap::word_to_json(*v.missing_word);
    text = "path-complete: no\nmissing word: " +
           render_word(*v.missing_word) + "\n";
  }
  emit(j, o.format, text);
  return v.complete ? 0 : 1;
}

std::string render_report(const pclyap::InequalityCheckReport& r) {
  std::string text;
  for (const pclyap::NodeCheck& n : r.nodes)
    text += "node " + n.node + ": " + (n.holds ? "ok" : "VIOLATED") +
            " (pivot " + pclyap::to_string(n.slack) + ")\n";
  for (const pclyap::EdgeCheck& e : r.edges)
    text += "edge " + e.from + " -" + render_word(e.label) + "-> " + e.to +
            ": " + (e.holds ? "ok" : "VIOLATED") + " (slack " +
            pclyap::to_string(e.slack) + ")\n";
  text += std::string("overall: ") + (r.overall ? "pass" : "fail") + "\n";
  return text;
}

int cmd_synthesize(const Options& o) {
  const pclyap::LabeledGraph g = load_graph(o.graph_file);
  const pclyap::Limits limits = make_limits(o);
  json bundle;
  pclyap::InequalityCheckReport report;
  if (o.family == "conic") {
    const pclyap::ConicSynthesis s = pclyap::synthesize_conic(g, limits);
    bundle = pclyap::bundle_to_json(s);
    report = pclyap::verify_certificate(s.expansion.graph, s.matrices,
                                        s.certificate);
  } else {
    const pclyap::EllipsoidalSynthesis s =
        pclyap::synthesize_ellipsoidal(g, limits);
    bundle = pclyap::bundle_to_json(s);
    report = pclyap::verify_certificate(s.expansion.graph, s.matrices,
                                        s.certificate);
  }
  write_file(o.out, bundle);
  emit(pclyap::report_to_json(report), o.format, render_report(report));
  return report.overall ? 0 : 2;  // self-check already threw on failure
}

int cmd_verify(const Options& o) {
  const pclyap::LabeledGraph g = load_graph(o.graph_file);
  const pclyap::MatrixSet s = load_matrices(o.matrices_file);
  const json jc = pclyap::load_json_file(o.cert_file);
  pclyap::VerifyOptions opt;
  if (!o.tol.empty()) opt.tol = pclyap::parse_rational(o.tol);
  pclyap::InequalityCheckReport report;
  if (o.family == "conic") {
    // A bundle file doubles as a certificate file.
    const json& body = jc.contains("conic_certificate")
                           ? jc["conic_certificate"]
                           : jc;
    report = pclyap::verify_certificate(
        g, s, pclyap::parse_conic_certificate(body), opt);
  } else {
    const json& body = jc.contains("ellipsoidal_certificate")
                           ? jc["ellipsoidal_certificate"]
                           : jc;
    report = pclyap::verify_certificate(
        g, s, pclyap::parse_ellipsoidal_certificate(body), opt);
  }
  emit(pclyap::report_to_json(report), o.format, render_report(report));
  return report.overall ? 0 : 1;
}

int cmd_jsr(const Options& o) {
  const pclyap::MatrixSet s = load_matrices(o.matrices_file);
  const pclyap::Limits limits = make_limits(o);
  const pclyap::JsrBounds b = pclyap::jsr_bounds(s, o.depth, limits);
  std::optional<double> gamma;
  if (o.jsr_graph) {
    const double tol = o.tol.empty()
                           ? 1e-6
                           : pclyap::parse_rational(o.tol).to_double();
    gamma = pclyap::conic_scaling_bound(load_graph(*o.jsr_graph), s, tol,
                                        10000, limits);
  }
  std::string text = "t: " + std::to_string(b.depth) + "\n";
  text += "lower: " + std::to_string(b.lower) + "\n";
  text += "lower witness: " + render_word(b.lower_witness) + "\n";
  text += "upper: " + std::to_string(b.upper) + "\n";
  if (o.jsr_graph)
    text += "gamma star: " +
            (gamma ? std::to_string(*gamma) : std::string("inconclusive")) +
            "\n";
  emit(pclyap::bounds_to_json(b, gamma, o.jsr_graph.has_value()), o.format,
       text);
  return 0;
}

int cmd_reduce(const Options& o) {
  const pclyap::Nfa a = pclyap::parse_nfa(pclyap::load_json_file(o.nfa_file));
  const json j = pclyap::graph_to_json(pclyap::reduce_universality(a));
  if (o.out.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_file(o.out, j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{
      "Path-complete Lyapunov toolkit: graph checks, counterexample "
      "synthesis, certificate verification and JSR bounds"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    c->add_option("--cap-subsets", o.cap_subsets,
                  "Cap on distinct subsets explored by determinization");
    c->add_option("--cap-words", o.cap_words,
                  "Cap on words enumerated by brute-force searches");
  };

  CLI::App* check = app.add_subcommand(
      "check", "Decide path-completeness; prints the shortest missing word "
               "when there is one");
  check->add_option("graph", o.graph_file, "Labeled graph file")->required();
  add_common(check);

  CLI::App* synth = app.add_subcommand(
      "synthesize", "Build a counterexample bundle refuting a graph that is "
                    "not path-complete");
  synth->add_option("graph", o.graph_file, "Labeled graph file")->required();
  synth->add_option("--out", o.out, "Bundle output path")->required();
  synth->add_option("--family", o.family, "Certificate family")
      ->check(CLI::IsMember({"conic", "ellipsoidal"}));
  add_common(synth);

  CLI::App* verify = app.add_subcommand(
      "verify", "Check every edge inequality of a graph against a "
                "certificate");
  verify->add_option("graph", o.graph_file, "Labeled graph file")->required();
  verify->add_option("matrices", o.matrices_file, "Matrix set file")
      ->required();
  verify->add_option("certificate", o.cert_file,
                     "Certificate or bundle file")
      ->required();
  verify->add_option("--family", o.family, "Certificate family")
      ->check(CLI::IsMember({"conic", "ellipsoidal"}));
  verify->add_option("--tol", o.tol,
                     "Pivot tolerance for ellipsoidal checks (exact "
                     "rational, e.g. 1/1000000000)");
  add_common(verify);

  CLI::App* jsr = app.add_subcommand(
      "jsr", "Brute-force JSR bounds at depth t, plus the conic scaling "
             "bound when a graph is given");
  jsr->add_option("matrices", o.matrices_file, "Matrix set file")->required();
  jsr->add_option("--depth", o.depth, "Product length t")
      ->check(CLI::PositiveNumber);
  jsr->add_option("--graph", o.jsr_graph,
                  "Path-complete graph for the scaling bound");
  jsr->add_option("--tol", o.tol, "Bisection tolerance for the scaling "
                                  "bound (default 1e-6)");
  add_common(jsr);

  CLI::App* reduce = app.add_subcommand(
      "reduce", "Rewrite an NFA-universality question as a "
                "path-completeness question");
  reduce->add_option("nfa", o.nfa_file, "NFA file")->required();
  reduce->add_option("--out", o.out,
                     "Graph output path (stdout when omitted)");
  add_common(reduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(o);
    if (synth->parsed()) return cmd_synthesize(o);
    if (verify->parsed()) return cmd_verify(o);
    if (jsr->parsed()) return cmd_jsr(o);
    if (reduce->parsed()) return cmd_reduce(o);
  } catch (const pclyap::PathCompleteInputError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const pclyap::ParseError& e) {
    std::cerr << "error: " << e.what();
    if (e.byte_offset >= 0) std::cerr << " (byte " << e.byte_offset << ")";
    std::cerr << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: require_subcommand(1)
}
