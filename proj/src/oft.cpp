#include "ontokit/oft.hpp"

#include <set>

namespace ontokit {

namespace {

struct Token {
  enum class Type { Word, Quoted, Comma };
  Type type;
  std::string text;
};

struct SyntaxError {
  std::string message;
};

// Splits one line into tokens, dropping any trailing comment.
std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == ' ' || c == '\t') {
      ++i;
    } else if (c == '#') {
      break;
    } else if (c == ',') {
      out.push_back({Token::Type::Comma, ","});
      ++i;
    } else if (c == '"') {
      std::string text;
      ++i;
      bool closed = false;
      while (i < line.size()) {
        char d = line[i++];
        if (d == '"') {
          closed = true;
          break;
        }
        if (d == '\\') {
          if (i >= line.size() || (line[i] != '"' && line[i] != '\\'))
            throw SyntaxError{"invalid escape in string literal"};
          d = line[i++];
        }
        text.push_back(d);
      }
      if (!closed) throw SyntaxError{"unterminated string literal"};
      out.push_back({Token::Type::Quoted, std::move(text)});
    } else {
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != ',' &&
             line[i] != '#' && line[i] != '"')
        ++i;
      out.push_back({Token::Type::Word, std::string(line.substr(start, i - start))});
    }
  }
  return out;
}

class StatementParser {
 public:
  StatementParser(const std::vector<Token>& toks, SourceLoc loc) : toks_(toks), loc_(std::move(loc)) {}

  bool at_end() const { return pos_ >= toks_.size(); }

  bool peek_keyword(std::string_view kw) const {
    return !at_end() && toks_[pos_].type == Token::Type::Word && toks_[pos_].text == kw;
  }

  bool accept_keyword(std::string_view kw) {
    if (!peek_keyword(kw)) return false;
    ++pos_;
    return true;
  }

  void expect_keyword(std::string_view kw) {
    if (!accept_keyword(kw)) throw SyntaxError{"expected '" + std::string(kw) + "'" + found()};
  }

  bool accept_comma() {
    if (at_end() || toks_[pos_].type != Token::Type::Comma) return false;
    ++pos_;
    return true;
  }

  std::string ident(std::string_view what) {
    if (at_end() || toks_[pos_].type != Token::Type::Word || !is_identifier(toks_[pos_].text))
      throw SyntaxError{"expected " + std::string(what) + found()};
    return toks_[pos_++].text;
  }

  std::vector<std::string> ident_list(std::string_view what) {
    std::vector<std::string> out{ident(what)};
    while (accept_comma()) out.push_back(ident(what));
    return out;
  }

  Literal literal() {
    if (at_end()) throw SyntaxError{"expected literal at end of line"};
    const auto& t = toks_[pos_];
    std::optional<Literal> lit;
    if (t.type == Token::Type::Quoted) {
      lit = Literal::string(t.text);
    } else if (t.type == Token::Type::Word) {
      lit = Literal::from_bare_token(t.text);
    }
    if (!lit) throw SyntaxError{"expected literal" + found()};
    ++pos_;
    return *lit;
  }

  void finish() {
    if (!at_end()) throw SyntaxError{"unexpected trailing" + found()};
  }

  const SourceLoc& loc() const { return loc_; }

 private:
  std::string found() const {
    if (at_end()) return " at end of line";
    return ", found '" + toks_[pos_].text + "'";
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
  SourceLoc loc_;
};

struct FileState {
  ParseResult result;
  bool saw_header = false;
  std::set<std::string, std::less<>> declared_classes;
};

void parse_statement(StatementParser& p, FileState& st) {
  auto emit = [&](AxiomBody body) { st.result.axioms.push_back(Axiom{std::move(body), p.loc()}); };

  if (p.accept_keyword("ontology")) {
    auto name = p.ident("ontology name");
    p.finish();
    if (st.saw_header) throw SyntaxError{"duplicate ontology header"};
    st.saw_header = true;
    st.result.ontology_name = std::move(name);
  } else if (p.accept_keyword("class")) {
    auto name = p.ident("class name");
    std::vector<std::string> parents;
    if (p.accept_keyword("sub")) parents = p.ident_list("superclass name");
    p.finish();
    if (st.declared_classes.insert(name).second) emit(ClassDecl{name});
    for (auto& parent : parents) emit(SubClassOf{name, std::move(parent)});
  } else if (p.accept_keyword("objprop")) {
    ObjPropDecl d{p.ident("property name"), std::nullopt, std::nullopt};
    if (p.accept_keyword("domain")) d.domain = p.ident("domain class");
    if (p.accept_keyword("range")) d.range = p.ident("range class");
    p.finish();
    emit(std::move(d));
  } else if (p.accept_keyword("dataprop")) {
    DataPropDecl d{p.ident("property name"), std::nullopt, {}};
    if (p.accept_keyword("domain")) d.domain = p.ident("domain class");
    p.expect_keyword("type");
    auto vt_word = p.ident("value type");
    auto vt = parse_value_type(vt_word);
    if (!vt) throw SyntaxError{"unknown value type '" + vt_word + "'"};
    d.facet.value_type = *vt;
    if (p.accept_keyword("allowed")) {
      std::vector<Literal> vals{p.literal()};
      while (p.accept_comma()) vals.push_back(p.literal());
      d.facet.allowed_values = std::move(vals);
    }
    if (p.accept_keyword("card")) {
      if (p.accept_keyword("single")) {
        d.facet.cardinality = Cardinality::Single;
      } else if (p.accept_keyword("multiple")) {
        d.facet.cardinality = Cardinality::Multiple;
      } else {
        throw SyntaxError{"expected 'single' or 'multiple' after 'card'"};
      }
    }
    p.finish();
    emit(std::move(d));
  } else if (p.accept_keyword("individual")) {
    auto name = p.ident("individual name");
    p.expect_keyword("type");
    auto types = p.ident_list("class name");
    p.finish();
    emit(IndividualDecl{std::move(name), std::move(types)});
  } else if (p.accept_keyword("rel")) {
    auto s = p.ident("subject individual");
    auto prop = p.ident("object property");
    auto o = p.ident("object individual");
    p.finish();
    emit(ObjAssertion{std::move(s), std::move(prop), std::move(o)});
  } else if (p.accept_keyword("attr")) {
    auto s = p.ident("subject individual");
    auto prop = p.ident("data property");
    auto v = p.literal();
    p.finish();
    emit(DataAssertion{std::move(s), std::move(prop), std::move(v)});
  } else {
    throw SyntaxError{"unknown statement keyword"};
  }
}

}  // namespace

ParseResult parse_oft(std::string_view source, std::string_view file_name) {
  FileState st;
  const std::string file(file_name);
  if (source.starts_with("\xEF\xBB\xBF")) source.remove_prefix(3);

  int line_no = 0;
  std::size_t start = 0;
  while (start < source.size()) {
    auto end = source.find('\n', start);
    auto line = source.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    start = end == std::string_view::npos ? source.size() : end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto before = st.result.axioms.size();
    try {
      auto toks = tokenize(line);
      if (toks.empty()) continue;
      StatementParser p(toks, SourceLoc{file, line_no});
      parse_statement(p, st);
    } catch (const SyntaxError& e) {
      st.result.axioms.resize(before);
      st.result.diagnostics.push_back(make_error(code::Syntax, e.message, file, line_no));
    }
  }
  return std::move(st.result);
}

std::string format_axiom(const Axiom& a) {
  std::string out;
  std::visit(
      [&](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, ClassDecl>) {
          out = "class " + b.name;
        } else if constexpr (std::is_same_v<T, SubClassOf>) {
          out = "class " + b.child + " sub " + b.parent;
        } else if constexpr (std::is_same_v<T, ObjPropDecl>) {
          out = "objprop " + b.name;
          if (b.domain) out += " domain " + *b.domain;
          if (b.range) out += " range " + *b.range;
        } else if constexpr (std::is_same_v<T, DataPropDecl>) {
          out = "dataprop " + b.name;
          if (b.domain) out += " domain " + *b.domain;
          out += " type ";
          out += value_type_name(b.facet.value_type);
          if (b.facet.allowed_values) {
            out += " allowed ";
            bool first = true;
            for (const auto& v : *b.facet.allowed_values) {
              if (!first) out += ", ";
              first = false;
              out += v.to_source();
            }
          }
          out += b.facet.cardinality == Cardinality::Single ? " card single" : " card multiple";
        } else if constexpr (std::is_same_v<T, IndividualDecl>) {
          out = "individual " + b.name + " type ";
          for (std::size_t i = 0; i < b.types.size(); ++i) {
            if (i > 0) out += ", ";
            out += b.types[i];
          }
        } else if constexpr (std::is_same_v<T, ObjAssertion>) {
          out = "rel " + b.subject + " " + b.property + " " + b.object;
        } else if constexpr (std::is_same_v<T, DataAssertion>) {
          out = "attr " + b.subject + " " + b.property + " " + b.value.to_source();
        }
      },
      a.body);
  return out;
}

std::string serialize_oft(const Ontology& o) {
  std::string out = "ontology " + o.name() + "\n";
  for (const auto& a : canonical_axioms(o)) {
    out += format_axiom(a);
    out += '\n';
  }
  return out;
}

}  // namespace ontokit
