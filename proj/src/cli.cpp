#include "ontokit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "ontokit/dlquery.hpp"
#include "ontokit/exchange.hpp"
#include "ontokit/oft.hpp"
#include "ontokit/pipeline.hpp"
#include "ontokit/validator.hpp"

namespace ontokit::cli {

namespace {

struct IoError {
  std::string message;
};

class Session {
 public:
  Session(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  std::string read_file(const std::string& path) {
    if (path == "-") {
      if (stdin_used_) throw IoError{"standard input can only be read once"};
      stdin_used_ = true;
      return {std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError{"cannot read '" + path + "'"};
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  }

  void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f || !(f << text) || !f.flush()) throw IoError{"cannot write '" + path + "'"};
  }

  std::vector<SourceText> read_sources(const std::vector<std::string>& paths) {
    std::vector<SourceText> out;
    for (const auto& p : paths) out.push_back({p == "-" ? std::string("<stdin>") : p, read_file(p)});
    return out;
  }

  void report(std::vector<Diagnostic> diags) {
    sort_diagnostics(diags);
    for (const auto& d : diags) err_ << format_diagnostic(d) << '\n';
  }

  /// Loads sources or reports why not. Returns nullptr after reporting.
  const LoadOutcome* load(const std::vector<std::string>& paths, bool need_closure) {
    loaded_ = load_sources(read_sources(paths));
    bool usable = need_closure ? loaded_.kb.has_value() : loaded_.ontology.has_value();
    if (!usable || has_errors(loaded_.diagnostics)) {
      report(loaded_.diagnostics);
      return nullptr;
    }
    return &loaded_;
  }

  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  bool stdin_used_ = false;
  LoadOutcome loaded_;
};

std::string plural(std::size_t n, std::string_view word) {
  return std::to_string(n) + " " + std::string(word) + (n == 1 ? "" : "s");
}

int cmd_check(Session& s, const std::vector<std::string>& files) {
  auto loaded = load_sources(s.read_sources(files));
  auto diags = loaded.diagnostics;
  if (loaded.kb) {
    auto report = validate(loaded.kb->ontology, loaded.kb->closure, loaded.kb->realization);
    diags.insert(diags.end(), report.diagnostics.begin(), report.diagnostics.end());
  }
  auto errors = static_cast<std::size_t>(std::count_if(diags.begin(), diags.end(), [](const Diagnostic& d) { return d.is_error(); }));
  s.report(diags);
  s.out() << plural(errors, "error") << ", " << plural(diags.size() - errors, "warning") << '\n';
  return errors == 0 ? kSuccess : kDiagnostics;
}

int cmd_query(Session& s, const std::vector<std::string>& files, const std::string& text, const std::string& mode_name) {
  auto mode = parse_query_mode(mode_name);
  const auto* loaded = s.load(files, true);
  if (!loaded) return kDiagnostics;
  const auto& kb = *loaded->kb;
  try {
    auto e = parse_query(text);
    for (const auto& name : eval_query(kb.ontology, kb.closure, kb.realization, e, *mode)) s.out() << name << '\n';
  } catch (const DiagnosticError& e) {
    s.report({e.diagnostic()});
    return kDiagnostics;
  }
  return kSuccess;
}

int cmd_export_dot(Session& s, const std::vector<std::string>& files, bool inferred) {
  const auto* loaded = s.load(files, true);
  if (!loaded) return kDiagnostics;
  s.out() << export_dot(loaded->kb->ontology, loaded->kb->closure, inferred);
  return kSuccess;
}

int cmd_stats(Session& s, const std::vector<std::string>& files) {
  const auto* loaded = s.load(files, false);
  if (!loaded) return kDiagnostics;
  const auto& o = *loaded->ontology;
  s.out() << "classes\t" << o.classes().size() << '\n'
          << "object_properties\t" << o.names_of(Kind::ObjectProperty).size() << '\n'
          << "data_properties\t" << o.names_of(Kind::DataProperty).size() << '\n'
          << "individuals\t" << o.individuals().size() << '\n'
          << "assertions\t" << o.count_assertions() << '\n';
  return kSuccess;
}

int cmd_merge(Session& s, const std::string& a_path, const std::string& b_path, const std::string& out_path) {
  auto a = load_sources(s.read_sources({a_path}));
  auto b = load_sources(s.read_sources({b_path}));
  if (!a.ontology || !b.ontology || has_errors(a.diagnostics) || has_errors(b.diagnostics)) {
    auto diags = a.diagnostics;
    diags.insert(diags.end(), b.diagnostics.begin(), b.diagnostics.end());
    s.report(diags);
    return kDiagnostics;
  }
  auto report = merge(*a.ontology, *b.ontology, a.ontology->name());
  s.write_file(out_path, serialize_oft(report.merged));
  s.report(report.conflicts);
  return has_errors(report.conflicts) ? kDiagnostics : kSuccess;
}

int cmd_ingest(Session& s, const std::vector<std::string>& files, const std::string& csv_path,
               const std::string& target, const std::string& map_spec, const std::string& out_path) {
  std::vector<ColumnMapping> columns;
  try {
    columns = parse_column_map(map_spec);
  } catch (const DiagnosticError& e) {
    s.err() << "error: " << e.diagnostic().message << '\n';
    return kUsage;
  }
  const auto* loaded = s.load(files, false);
  if (!loaded) return kDiagnostics;
  const auto& o = *loaded->ontology;
  auto csv = s.read_file(csv_path);
  auto generated = ingest_csv(o, csv, target, columns, csv_path);
  if (!generated) {
    s.report(generated.diagnostics());
    return kDiagnostics;
  }
  auto axioms = o.axioms();
  axioms.insert(axioms.end(), generated->begin(), generated->end());
  auto provenance = o.provenance();
  provenance.push_back(csv_path);
  auto combined = build_ontology(o.name(), std::move(axioms), std::move(provenance));
  if (!combined) {
    s.report(combined.diagnostics());
    return kDiagnostics;
  }
  s.write_file(out_path, serialize_oft(*combined));
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ontology toolkit for OFT files: check, query, export, merge and ingest"};
  app.name("ontokit");
  app.require_subcommand(1, 1);

  std::vector<std::string> files;
  std::string query_text, mode = "instances", merge_a, merge_b, output, csv_path, target, map_spec;
  bool inferred = false;

  auto* check = app.add_subcommand("check", "Parse, build, reason and validate; report diagnostics");
  check->add_option("files", files, "OFT files (concatenated in order)")->required();

  auto* query = app.add_subcommand("query", "Evaluate a class expression");
  query->add_option("files", files, "OFT files")->required();
  query->add_option("-q,--query", query_text, "Class expression")->required();
  query->add_option("-m,--mode", mode, "Result mode")
      ->check(CLI::IsMember({"instances", "subclasses", "direct-subclasses", "superclasses", "direct-superclasses"}));

  auto* dot = app.add_subcommand("export-dot", "Write the class hierarchy as Graphviz DOT");
  dot->add_option("files", files, "OFT files")->required();
  dot->add_flag("--inferred", inferred, "Draw the inferred hierarchy (transitive reduction)");

  auto* stats = app.add_subcommand("stats", "Count classes, properties, individuals and assertions");
  stats->add_option("files", files, "OFT files")->required();

  auto* mrg = app.add_subcommand("merge", "Merge two ontologies; the first wins on conflicts");
  mrg->add_option("a", merge_a, "First ontology")->required();
  mrg->add_option("b", merge_b, "Second ontology")->required();
  mrg->add_option("-o,--output", output, "Output OFT file")->required();

  auto* ingest = app.add_subcommand("ingest", "Create individuals from CSV rows");
  ingest->add_option("files", files, "OFT files")->required();
  ingest->add_option("--csv", csv_path, "CSV file with an 'id' column")->required();
  ingest->add_option("--class", target, "Class of the new individuals")->required();
  ingest->add_option("--map", map_spec, "header=property,...")->required();
  ingest->add_option("-o,--output", output, "Output OFT file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  Session session(in, out, err);
  try {
    if (*check) return cmd_check(session, files);
    if (*query) return cmd_query(session, files, query_text, mode);
    if (*dot) return cmd_export_dot(session, files, inferred);
    if (*stats) return cmd_stats(session, files);
    if (*mrg) return cmd_merge(session, merge_a, merge_b, output);
    if (*ingest) return cmd_ingest(session, files, csv_path, target, map_spec, output);
  } catch (const IoError& e) {
    err << "error: " << e.message << '\n';
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

Invocation run(const std::vector<std::string>& args, std::string_view stdin_text) {
  std::istringstream in{std::string(stdin_text)};
  std::ostringstream out, err;
  int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace ontokit::cli
