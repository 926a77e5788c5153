#include "ontokit/exchange.hpp"

#include <map>
#include <set>

namespace ontokit {

namespace {

std::vector<std::string> split_record(std::string_view line, const std::string& file, int line_no) {
  std::vector<std::string> fields;
  std::string cur;
  std::size_t i = 0;
  bool quoted_field = false;
  while (true) {
    if (i < line.size() && line[i] == '"' && cur.empty() && !quoted_field) {
      quoted_field = true;
      ++i;
      bool closed = false;
      while (i < line.size()) {
        if (line[i] == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            cur.push_back('"');
            i += 2;
            continue;
          }
          ++i;
          closed = true;
          break;
        }
        cur.push_back(line[i++]);
      }
      if (!closed) throw DiagnosticError(make_error(code::Syntax, "unterminated quoted field", file, line_no));
      if (i < line.size() && line[i] != ',')
        throw DiagnosticError(make_error(code::Syntax, "text after closing quote", file, line_no));
    }
    if (i >= line.size()) {
      fields.push_back(std::move(cur));
      break;
    }
    if (line[i] == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
      quoted_field = false;
      ++i;
      continue;
    }
    if (quoted_field) throw DiagnosticError(make_error(code::Syntax, "text after closing quote", file, line_no));
    cur.push_back(line[i++]);
  }
  return fields;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<ColumnMapping> parse_column_map(std::string_view spec) {
  std::vector<ColumnMapping> out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto end = spec.find(',', start);
    auto item = spec.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    auto eq = item.find('=');
    auto header = eq == std::string_view::npos ? std::string_view{} : trim(item.substr(0, eq));
    auto property = eq == std::string_view::npos ? std::string_view{} : trim(item.substr(eq + 1));
    if (header.empty() || property.empty()) {
      throw DiagnosticError(
          make_error(code::Syntax, "column mapping '" + std::string(item) + "' is not header=property"));
    }
    out.push_back({std::string(header), std::string(property)});
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::vector<CsvRow> read_csv(std::string_view text, std::string_view file_name) {
  const std::string file(file_name);
  std::vector<CsvRow> rows;
  int line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    auto line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    start = end == std::string_view::npos ? text.size() : end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    rows.push_back({line_no, split_record(line, file, line_no)});
  }
  return rows;
}

Result<std::vector<Axiom>> ingest_csv(const Ontology& o, std::string_view csv, std::string_view target_class,
                                      const std::vector<ColumnMapping>& columns, std::string_view file_name) {
  const std::string file(file_name);
  std::vector<Diagnostic> diags;

  auto check_name = [&](std::string_view name, Kind kind) {
    auto k = o.kind_of(name);
    if (!k) {
      diags.push_back(make_error(code::UnknownRef,
                                 "unknown " + std::string(kind_name(kind)) + " '" + std::string(name) + "'", file, 1));
    } else if (*k != kind) {
      diags.push_back(make_error(code::KindClash,
                                 "'" + std::string(name) + "' is a " + std::string(kind_name(*k)) + ", expected " +
                                     std::string(kind_name(kind)),
                                 file, 1));
    }
  };
  check_name(target_class, Kind::Class);
  for (const auto& col : columns) check_name(col.property, Kind::DataProperty);

  std::vector<CsvRow> rows;
  try {
    rows = read_csv(csv, file_name);
  } catch (const DiagnosticError& e) {
    diags.push_back(e.diagnostic());
    return diags;
  }
  if (rows.empty()) {
    diags.push_back(make_error(code::CsvHeader, "missing header row", file, 1));
    return diags;
  }

  const auto& header = rows.front();
  std::map<std::string, std::size_t, std::less<>> position;
  for (std::size_t i = 0; i < header.fields.size(); ++i) position.emplace(header.fields[i], i);
  auto column_of = [&](std::string_view h) -> std::optional<std::size_t> {
    auto it = position.find(h);
    if (it == position.end()) {
      diags.push_back(make_error(code::CsvHeader, "header has no column '" + std::string(h) + "'", file, header.line));
      return std::nullopt;
    }
    return it->second;
  };
  auto id_col = column_of(kCsvIdColumn);
  std::vector<std::optional<std::size_t>> mapped;
  for (const auto& col : columns) mapped.push_back(column_of(col.header));
  if (!diags.empty()) return diags;

  std::vector<Axiom> out;
  std::set<std::string, std::less<>> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    SourceLoc loc{file, row.line};
    if (row.fields.size() != header.fields.size()) {
      diags.push_back(make_error(code::Syntax,
                                 "expected " + std::to_string(header.fields.size()) + " fields, found " +
                                     std::to_string(row.fields.size()),
                                 file, row.line));
      continue;
    }
    const auto& id = row.fields[*id_col];
    if (!is_identifier(id)) {
      diags.push_back(make_error(code::Ident, "row id '" + id + "' is not an identifier", file, row.line));
      continue;
    }
    if (o.kind_of(id) || !seen.insert(id).second) {
      diags.push_back(make_error(code::DupIndividual, "'" + id + "' is already declared", file, row.line));
      continue;
    }
    out.push_back(Axiom{IndividualDecl{id, {std::string(target_class)}}, loc});
    for (std::size_t m = 0; m < columns.size(); ++m) {
      const auto& cell = row.fields[*mapped[m]];
      if (cell.empty()) continue;
      const auto* decl = o.data_property(columns[m].property);
      if (!decl) continue;  // already reported above
      auto lit = Literal::parse_as(decl->facet.value_type, cell);
      if (!lit) {
        diags.push_back(make_error(code::TypeMismatch,
                                   columns[m].property + " expects " +
                                       std::string(value_type_name(decl->facet.value_type)) + ", got '" + cell + "'",
                                   file, row.line));
        continue;
      }
      out.push_back(Axiom{DataAssertion{id, columns[m].property, *lit}, loc});
    }
  }
  if (!diags.empty()) return diags;
  return out;
}

}  // namespace ontokit
