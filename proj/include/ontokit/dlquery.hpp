#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ontokit/literal.hpp"
#include "ontokit/model.hpp"
#include "ontokit/reasoner.hpp"

namespace ontokit {

/// Copyable owning pointer for recursive value types.
template <class T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;

  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }
  friend bool operator==(const Box& a, const Box& b) { return *a == *b; }

 private:
  std::unique_ptr<T> ptr_;
};

struct ClassExpr;

namespace expr {
struct Named {
  std::string cls;
  friend bool operator==(const Named&, const Named&) = default;
};
struct And {
  std::vector<ClassExpr> operands;
  friend bool operator==(const And&, const And&);
};
struct Some {
  std::string property;
  Box<ClassExpr> filler;
  friend bool operator==(const Some&, const Some&) = default;
};
struct ValueObj {
  std::string property;
  std::string individual;
  friend bool operator==(const ValueObj&, const ValueObj&) = default;
};
struct ValueData {
  std::string property;
  Literal value;
  friend bool operator==(const ValueData&, const ValueData&) = default;
};
}  // namespace expr

/// Manchester-style class expression. Values built by parse_query() or
/// normalize() keep And operands flattened, deduplicated and sorted.
struct ClassExpr {
  std::variant<expr::Named, expr::And, expr::Some, expr::ValueObj, expr::ValueData> node;

  friend bool operator==(const ClassExpr&, const ClassExpr&) = default;
};

ClassExpr named(std::string cls);
ClassExpr conj(std::vector<ClassExpr> operands);
ClassExpr some(std::string property, ClassExpr filler);
ClassExpr value_obj(std::string property, std::string individual);
ClassExpr value_data(std::string property, Literal value);

ClassExpr normalize(ClassExpr e);

/// Renders `e` in the query syntax; parse_query(to_string(e)) == normalize(e).
std::string to_string(const ClassExpr& e);

/// Grammar:
///   expr := term ('and' term)*
///   term := IDENT | IDENT 'some' term | IDENT 'value' (IDENT | lit) | '(' expr ')'
/// `true`/`false` after `value` are boolean literals. Throws
/// DiagnosticError(E_SYNTAX) with a 1-based column.
ClassExpr parse_query(std::string_view text);

enum class QueryMode { Instances, Subclasses, DirectSubclasses, Superclasses, DirectSuperclasses };

std::string_view query_mode_name(QueryMode m);
std::optional<QueryMode> parse_query_mode(std::string_view name);

/// Sorted answer names. Class modes accept only named classes and their
/// conjunctions (E_UNSUPPORTED_MODE otherwise); unresolvable names raise
/// E_UNKNOWN_REF or E_KIND_CLASH.
std::vector<std::string> eval_query(const Ontology& o, const TaxonomyClosure& c, const Realization& r,
                                    const ClassExpr& e, QueryMode mode);

}  // namespace ontokit
