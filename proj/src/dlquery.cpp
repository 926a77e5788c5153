#include "ontokit/dlquery.hpp"

#include <algorithm>
#include <iterator>

#include "ontokit/diagnostic.hpp"

namespace ontokit {

namespace expr {
bool operator==(const And& a, const And& b) { return a.operands == b.operands; }
}  // namespace expr

ClassExpr named(std::string cls) { return ClassExpr{expr::Named{std::move(cls)}}; }

ClassExpr conj(std::vector<ClassExpr> operands) {
  return normalize(ClassExpr{expr::And{std::move(operands)}});
}

ClassExpr some(std::string property, ClassExpr filler) {
  return ClassExpr{expr::Some{std::move(property), Box<ClassExpr>(std::move(filler))}};
}

ClassExpr value_obj(std::string property, std::string individual) {
  return ClassExpr{expr::ValueObj{std::move(property), std::move(individual)}};
}

ClassExpr value_data(std::string property, Literal value) {
  return ClassExpr{expr::ValueData{std::move(property), std::move(value)}};
}

// ---------------------------------------------------------------------------
// Printing and normalization

namespace {

bool is_and(const ClassExpr& e) { return std::holds_alternative<expr::And>(e.node); }

}  // namespace

std::string to_string(const ClassExpr& e) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, expr::Named>) {
          return n.cls;
        } else if constexpr (std::is_same_v<T, expr::And>) {
          std::string out;
          for (const auto& op : n.operands) {
            if (!out.empty()) out += " and ";
            out += is_and(op) ? "(" + to_string(op) + ")" : to_string(op);
          }
          return out;
        } else if constexpr (std::is_same_v<T, expr::Some>) {
          const auto& f = *n.filler;
          return n.property + " some " + (is_and(f) ? "(" + to_string(f) + ")" : to_string(f));
        } else if constexpr (std::is_same_v<T, expr::ValueObj>) {
          return n.property + " value " + n.individual;
        } else {
          return n.property + " value " + n.value.to_source();
        }
      },
      e.node);
}

ClassExpr normalize(ClassExpr e) {
  if (auto* s = std::get_if<expr::Some>(&e.node)) {
    return some(s->property, normalize(ClassExpr(*s->filler)));
  }
  auto* a = std::get_if<expr::And>(&e.node);
  if (!a) return e;

  std::vector<ClassExpr> flat;
  for (auto& op : a->operands) {
    auto n = normalize(std::move(op));
    if (auto* inner = std::get_if<expr::And>(&n.node)) {
      std::move(inner->operands.begin(), inner->operands.end(), std::back_inserter(flat));
    } else {
      flat.push_back(std::move(n));
    }
  }
  std::vector<std::pair<std::string, ClassExpr>> keyed;
  for (auto& op : flat) {
    auto key = to_string(op);
    keyed.emplace_back(std::move(key), std::move(op));
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& x, const auto& y) { return x.first == y.first; }),
              keyed.end());
  if (keyed.size() == 1) return std::move(keyed.front().second);
  expr::And out;
  for (auto& [k, op] : keyed) out.operands.push_back(std::move(op));
  return ClassExpr{std::move(out)};
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct QToken {
  enum class Type { Word, Quoted, LParen, RParen, End };
  Type type;
  std::string text;
  int column;
};

[[noreturn]] void syntax_error(std::string msg, int column) {
  Diagnostic d = make_error(code::Syntax, msg + " at column " + std::to_string(column), "<query>", 1);
  d.column = column;
  throw DiagnosticError(std::move(d));
}

std::vector<QToken> lex_query(std::string_view text) {
  std::vector<QToken> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    int col = static_cast<int>(i) + 1;
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
    } else if (c == '(' || c == ')') {
      out.push_back({c == '(' ? QToken::Type::LParen : QToken::Type::RParen, std::string(1, c), col});
      ++i;
    } else if (c == '"') {
      std::string s;
      ++i;
      bool closed = false;
      while (i < text.size()) {
        char d = text[i++];
        if (d == '"') {
          closed = true;
          break;
        }
        if (d == '\\') {
          if (i >= text.size() || (text[i] != '"' && text[i] != '\\'))
            syntax_error("invalid escape in string literal", static_cast<int>(i));
          d = text[i++];
        }
        s.push_back(d);
      }
      if (!closed) syntax_error("unterminated string literal", col);
      out.push_back({QToken::Type::Quoted, std::move(s), col});
    } else {
      std::size_t start = i;
      while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r' &&
             text[i] != '\n' && text[i] != '(' && text[i] != ')' && text[i] != '"')
        ++i;
      out.push_back({QToken::Type::Word, std::string(text.substr(start, i - start)), col});
    }
  }
  out.push_back({QToken::Type::End, "", static_cast<int>(text.size()) + 1});
  return out;
}

bool is_reserved(std::string_view w) { return w == "and" || w == "some" || w == "value"; }

class QueryParser {
 public:
  explicit QueryParser(std::vector<QToken> toks) : toks_(std::move(toks)) {}

  ClassExpr parse() {
    auto e = expression();
    if (peek().type != QToken::Type::End) unexpected("expected 'and' or end of query");
    return e;
  }

 private:
  const QToken& peek() const { return toks_[pos_]; }
  const QToken& next() { return toks_[pos_++]; }

  bool peek_word(std::string_view w) const {
    return peek().type == QToken::Type::Word && peek().text == w;
  }

  [[noreturn]] void unexpected(std::string_view expected) const {
    const auto& t = peek();
    std::string found = t.type == QToken::Type::End ? "end of query" : "'" + t.text + "'";
    syntax_error(std::string(expected) + ", found " + found, t.column);
  }

  ClassExpr expression() {
    std::vector<ClassExpr> terms{term()};
    while (peek_word("and")) {
      ++pos_;
      terms.push_back(term());
    }
    if (terms.size() == 1) return std::move(terms.front());
    return conj(std::move(terms));
  }

  std::string ident(std::string_view what) {
    if (peek().type != QToken::Type::Word || !is_identifier(peek().text) || is_reserved(peek().text))
      unexpected("expected " + std::string(what));
    return next().text;
  }

  ClassExpr term() {
    if (peek().type == QToken::Type::LParen) {
      ++pos_;
      auto e = expression();
      if (peek().type != QToken::Type::RParen) unexpected("expected ')'");
      ++pos_;
      return e;
    }
    auto name = ident("class name, property or '('");
    if (peek_word("some")) {
      ++pos_;
      return some(std::move(name), term());
    }
    if (peek_word("value")) {
      ++pos_;
      const auto& t = peek();
      if (t.type == QToken::Type::Quoted) {
        auto lit = Literal::string(t.text);
        if (!lit) unexpected("expected single-line string");
        ++pos_;
        return value_data(std::move(name), *lit);
      }
      if (t.type == QToken::Type::Word) {
        if (auto lit = Literal::from_bare_token(t.text)) {
          ++pos_;
          return value_data(std::move(name), *lit);
        }
        if (is_identifier(t.text) && !is_reserved(t.text)) {
          ++pos_;
          return value_obj(std::move(name), t.text);
        }
      }
      unexpected("expected individual or literal after 'value'");
    }
    return named(std::move(name));
  }

  std::vector<QToken> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ClassExpr parse_query(std::string_view text) { return normalize(QueryParser(lex_query(text)).parse()); }

// ---------------------------------------------------------------------------
// Evaluation

std::string_view query_mode_name(QueryMode m) {
  switch (m) {
    case QueryMode::Instances: return "instances";
    case QueryMode::Subclasses: return "subclasses";
    case QueryMode::DirectSubclasses: return "direct-subclasses";
    case QueryMode::Superclasses: return "superclasses";
    case QueryMode::DirectSuperclasses: return "direct-superclasses";
  }
  return "?";
}

std::optional<QueryMode> parse_query_mode(std::string_view name) {
  for (auto m : {QueryMode::Instances, QueryMode::Subclasses, QueryMode::DirectSubclasses,
                 QueryMode::Superclasses, QueryMode::DirectSuperclasses}) {
    if (query_mode_name(m) == name) return m;
  }
  return std::nullopt;
}

namespace {

class Evaluator {
 public:
  Evaluator(const Ontology& o, const TaxonomyClosure& c, const Realization& r) : o_(o), c_(c), r_(r) {}

  void resolve(const ClassExpr& e) const {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, expr::Named>) {
            require(n.cls, Kind::Class);
          } else if constexpr (std::is_same_v<T, expr::And>) {
            for (const auto& op : n.operands) resolve(op);
          } else if constexpr (std::is_same_v<T, expr::Some>) {
            require(n.property, Kind::ObjectProperty);
            resolve(*n.filler);
          } else if constexpr (std::is_same_v<T, expr::ValueObj>) {
            require(n.property, Kind::ObjectProperty);
            require(n.individual, Kind::Individual);
          } else {
            require(n.property, Kind::DataProperty);
          }
        },
        e.node);
  }

  NameSet extension(const ClassExpr& e) const {
    return std::visit(
        [&](const auto& n) -> NameSet {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, expr::Named>) {
            return r_.members(n.cls);
          } else if constexpr (std::is_same_v<T, expr::And>) {
            NameSet acc = extension(n.operands.front());
            for (std::size_t i = 1; i < n.operands.size() && !acc.empty(); ++i) {
              acc = intersect(acc, extension(n.operands[i]));
            }
            return acc;
          } else if constexpr (std::is_same_v<T, expr::Some>) {
            NameSet fillers = extension(*n.filler);
            NameSet out;
            for (const auto& a : o_.axioms()) {
              const auto* oa = a.as<ObjAssertion>();
              if (oa && oa->property == n.property && fillers.contains(oa->object)) out.insert(oa->subject);
            }
            return out;
          } else if constexpr (std::is_same_v<T, expr::ValueObj>) {
            NameSet out;
            for (const auto& a : o_.axioms()) {
              const auto* oa = a.as<ObjAssertion>();
              if (oa && oa->property == n.property && oa->object == n.individual) out.insert(oa->subject);
            }
            return out;
          } else {
            NameSet out;
            for (const auto& a : o_.axioms()) {
              const auto* da = a.as<DataAssertion>();
              if (da && da->property == n.property && da->value == n.value) out.insert(da->subject);
            }
            return out;
          }
        },
        e.node);
  }

  std::vector<std::string> classes(const ClassExpr& e, QueryMode mode) const {
    std::vector<std::string> conjuncts;
    if (const auto* n = std::get_if<expr::Named>(&e.node)) {
      conjuncts.push_back(n->cls);
    } else if (const auto* a = std::get_if<expr::And>(&e.node)) {
      for (const auto& op : a->operands) {
        const auto* n = std::get_if<expr::Named>(&op.node);
        if (!n) unsupported(mode);
        conjuncts.push_back(n->cls);
      }
    } else {
      unsupported(mode);
    }

    const bool sub = mode == QueryMode::Subclasses || mode == QueryMode::DirectSubclasses;
    NameSet result;
    for (std::size_t i = 0; i < conjuncts.size(); ++i) {
      NameSet step = sub ? c_.descendants_of(conjuncts[i]) : c_.ancestors_of(conjuncts[i]);
      if (!sub) step.insert(conjuncts[i]);
      result = i == 0 ? std::move(step) : intersect(result, step);
    }
    if (!sub) {
      for (const auto& q : conjuncts) result.erase(q);
    }

    if (mode == QueryMode::DirectSubclasses) {
      // keep the top-most members: those with no ancestor inside the result
      std::erase_if(result, [&](const std::string& x) { return overlaps(c_.ancestors_of(x), result); });
    } else if (mode == QueryMode::DirectSuperclasses) {
      std::erase_if(result, [&](const std::string& x) { return overlaps(c_.descendants_of(x), result); });
    }
    return {result.begin(), result.end()};
  }

 private:
  static NameSet intersect(const NameSet& a, const NameSet& b) {
    NameSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
  }

  static bool overlaps(const NameSet& a, const NameSet& b) {
    const auto& small = a.size() < b.size() ? a : b;
    const auto& large = a.size() < b.size() ? b : a;
    return std::any_of(small.begin(), small.end(), [&](const std::string& x) { return large.contains(x); });
  }

  void require(const std::string& name, Kind kind) const {
    auto actual = o_.kind_of(name);
    if (!actual) {
      throw DiagnosticError(make_error(code::UnknownRef, "unknown " + std::string(kind_name(kind)) + " '" +
                                                             name + "'", "<query>", 1));
    }
    if (*actual != kind) {
      throw DiagnosticError(make_error(code::KindClash,
                                       "'" + name + "' is a " + std::string(kind_name(*actual)) +
                                           ", expected " + std::string(kind_name(kind)),
                                       "<query>", 1));
    }
  }

  [[noreturn]] static void unsupported(QueryMode mode) {
    throw DiagnosticError(make_error(code::UnsupportedMode,
                                     std::string(query_mode_name(mode)) +
                                         " needs a class name or a conjunction of class names",
                                     "<query>", 1));
  }

  const Ontology& o_;
  const TaxonomyClosure& c_;
  const Realization& r_;
};

}  // namespace

std::vector<std::string> eval_query(const Ontology& o, const TaxonomyClosure& c, const Realization& r,
                                    const ClassExpr& e, QueryMode mode) {
  Evaluator ev(o, c, r);
  ev.resolve(e);
  if (mode == QueryMode::Instances) {
    auto ext = ev.extension(e);
    return {ext.begin(), ext.end()};
  }
  return ev.classes(e, mode);
}

}  // namespace ontokit
