#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ontokit/cli.hpp"
#include "ontokit/corpus.hpp"
#include "ontokit/dlquery.hpp"
#include "ontokit/exchange.hpp"
#include "ontokit/oft.hpp"
#include "ontokit/pipeline.hpp"
#include "ontokit/validator.hpp"

namespace py = pybind11;
using namespace ontokit;

namespace {

py::dict to_dict(const Diagnostic& d) {
  py::dict out;
  out["severity"] = std::string(severity_name(d.severity));
  out["code"] = d.code;
  out["message"] = d.message;
  out["file"] = d.file;
  out["line"] = d.line;
  out["column"] = d.column;
  return out;
}

py::list to_list(const std::vector<Diagnostic>& diags) {
  py::list out;
  for (const auto& d : diags) out.append(to_dict(d));
  return out;
}

[[noreturn]] void raise_diagnostics(const std::vector<Diagnostic>& diags) {
  if (diags.empty()) throw DiagnosticError(make_error(code::Syntax, "load failed"));
  // One exception carrying every finding; the first one supplies the position.
  Diagnostic combined = diags.front();
  for (std::size_t i = 1; i < diags.size(); ++i) combined.message += "\n" + format_diagnostic(diags[i]);
  throw DiagnosticError(std::move(combined));
}

QueryMode mode_from(const std::string& name) {
  auto m = parse_query_mode(name);
  if (!m) throw py::value_error("unknown query mode '" + name + "'");
  return *m;
}

KnowledgeBase checked(LoadOutcome loaded) {
  if (!loaded.kb || has_errors(loaded.diagnostics)) raise_diagnostics(loaded.diagnostics);
  return std::move(*loaded.kb);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ontology toolkit: OFT parsing, subsumption reasoning, validation and DL-style queries";

  py::register_exception<DiagnosticError>(m, "OntologyError", PyExc_ValueError);

  m.def(
      "parse_oft",
      [](const std::string& text, const std::string& file_name) {
        auto r = parse_oft(text, file_name);
        py::list axioms;
        for (const auto& a : r.axioms) axioms.append(format_axiom(a));
        py::dict out;
        out["name"] = r.ontology_name;
        out["axioms"] = axioms;
        out["diagnostics"] = to_list(r.diagnostics);
        return out;
      },
      py::arg("text"), py::arg("file_name") = "<input>",
      "Parse OFT text; returns {'name', 'axioms', 'diagnostics'}.");

  py::class_<KnowledgeBase>(m, "KnowledgeBase")
      .def_static(
          "from_sources",
          [](const std::vector<std::pair<std::string, std::string>>& sources) {
            std::vector<SourceText> texts;
            for (const auto& [name, text] : sources) texts.push_back({name, text});
            return checked(load_sources(texts));
          },
          py::arg("sources"), "Build from (file_name, text) pairs, concatenated in order.")
      .def_property_readonly("name", [](const KnowledgeBase& kb) { return kb.ontology.name(); })
      .def("classes", [](const KnowledgeBase& kb) { return kb.ontology.classes(); })
      .def("individuals", [](const KnowledgeBase& kb) { return kb.ontology.individuals(); })
      .def(
          "query",
          [](const KnowledgeBase& kb, const std::string& text, const std::string& mode) {
            return eval_query(kb.ontology, kb.closure, kb.realization, parse_query(text), mode_from(mode));
          },
          py::arg("text"), py::arg("mode") = "instances")
      .def("ancestors",
           [](const KnowledgeBase& kb, const std::string& cls) {
             const auto& s = kb.closure.ancestors_of(cls);
             return std::vector<std::string>(s.begin(), s.end());
           })
      .def("applicable_properties",
           [](const KnowledgeBase& kb, const std::string& cls) {
             auto s = applicable_properties(kb.ontology, kb.closure, cls);
             return std::vector<std::string>(s.begin(), s.end());
           })
      .def("validate",
           [](const KnowledgeBase& kb) {
             auto report = validate(kb.ontology, kb.closure, kb.realization);
             py::dict out;
             out["ok"] = report.ok;
             out["checked_assertions"] = report.checked_assertions;
             out["diagnostics"] = to_list(report.diagnostics);
             return out;
           })
      .def("export_dot", [](const KnowledgeBase& kb, bool inferred) { return export_dot(kb.ontology, kb.closure, inferred); },
           py::arg("inferred") = false)
      .def("serialize", [](const KnowledgeBase& kb) { return serialize_oft(kb.ontology); })
      .def("stats",
           [](const KnowledgeBase& kb) {
             py::dict out;
             out["classes"] = kb.ontology.classes().size();
             out["object_properties"] = kb.ontology.names_of(Kind::ObjectProperty).size();
             out["data_properties"] = kb.ontology.names_of(Kind::DataProperty).size();
             out["individuals"] = kb.ontology.individuals().size();
             out["assertions"] = kb.ontology.count_assertions();
             return out;
           })
      .def(
          "merge",
          [](const KnowledgeBase& a, const KnowledgeBase& b, const std::string& name) {
            auto report = merge(a.ontology, b.ontology, name);
            py::dict out;
            out["added"] = report.added;
            out["conflicts"] = to_list(report.conflicts);
            out["merged"] = py::cast(checked(load_ontology(report.merged)));
            return out;
          },
          py::arg("other"), py::arg("name"))
      .def(
          "ingest_csv",
          [](const KnowledgeBase& kb, const std::string& csv, const std::string& target,
             const std::string& mapping) {
            auto generated = ingest_csv(kb.ontology, csv, target, parse_column_map(mapping));
            if (!generated) raise_diagnostics(generated.diagnostics());
            auto axioms = kb.ontology.axioms();
            axioms.insert(axioms.end(), generated->begin(), generated->end());
            auto built = build_ontology(kb.ontology.name(), std::move(axioms), kb.ontology.provenance());
            if (!built) raise_diagnostics(built.diagnostics());
            return checked(load_ontology(std::move(built).value()));
          },
          py::arg("csv"), py::arg("target_class"), py::arg("mapping"));

  m.def("load_corpus", []() { return load_corpus(); }, "The bundled date-fruit knowledge base.");

  m.def("corpus_queries", []() {
    py::list out;
    for (const auto& q : corpus_fixture().query_suite) {
      out.append(py::make_tuple(std::string(query_mode_name(q.mode)), q.query, q.expected));
    }
    return out;
  });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        auto r = cli::run(args, stdin_text);
        return py::make_tuple(r.exit_code, r.out, r.err);
      },
      py::arg("args"), py::arg("stdin") = "", "Run a CLI command in-process; returns (code, stdout, stderr).");
}
