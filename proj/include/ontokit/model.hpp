#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ontokit/diagnostic.hpp"
#include "ontokit/literal.hpp"

namespace ontokit {

/// Name of the implicit root class present in every ontology.
inline constexpr std::string_view kThing = "Thing";

enum class Kind { Class, ObjectProperty, DataProperty, Individual };

std::string_view kind_name(Kind k);

/// `[A-Za-z_][A-Za-z0-9_]*`
bool is_identifier(std::string_view text);

struct Ident {
  std::string name;
  Kind kind = Kind::Class;

  friend bool operator==(const Ident&, const Ident&) = default;
};

enum class Cardinality { Single, Multiple };

struct FacetSpec {
  ValueType value_type = ValueType::String;
  std::optional<std::vector<Literal>> allowed_values;
  Cardinality cardinality = Cardinality::Multiple;

  bool allows(const Literal& value) const;
  friend bool operator==(const FacetSpec&, const FacetSpec&) = default;
};

struct SourceLoc {
  std::string file;
  int line = 0;
};

struct ClassDecl {
  std::string name;
  friend bool operator==(const ClassDecl&, const ClassDecl&) = default;
};

struct SubClassOf {
  std::string child;
  std::string parent;
  friend bool operator==(const SubClassOf&, const SubClassOf&) = default;
};

struct ObjPropDecl {
  std::string name;
  std::optional<std::string> domain;
  std::optional<std::string> range;
  friend bool operator==(const ObjPropDecl&, const ObjPropDecl&) = default;
};

struct DataPropDecl {
  std::string name;
  std::optional<std::string> domain;
  FacetSpec facet;
  friend bool operator==(const DataPropDecl&, const DataPropDecl&) = default;
};

struct IndividualDecl {
  std::string name;
  std::vector<std::string> types;
  friend bool operator==(const IndividualDecl&, const IndividualDecl&) = default;
};

struct ObjAssertion {
  std::string subject;
  std::string property;
  std::string object;
  friend bool operator==(const ObjAssertion&, const ObjAssertion&) = default;
};

struct DataAssertion {
  std::string subject;
  std::string property;
  Literal value;
  friend bool operator==(const DataAssertion&, const DataAssertion&) = default;
};

/// Alternative order is the canonical statement order.
using AxiomBody = std::variant<ClassDecl, SubClassOf, ObjPropDecl, DataPropDecl, IndividualDecl,
                               ObjAssertion, DataAssertion>;

/// One statement. Equality ignores the source location.
struct Axiom {
  AxiomBody body;
  SourceLoc loc;

  template <class T>
  const T* as() const {
    return std::get_if<T>(&body);
  }
  friend bool operator==(const Axiom& a, const Axiom& b) { return a.body == b.body; }
};

/// Immutable, referentially closed axiom set. Only build_ontology creates one.
class Ontology {
 public:
  const std::string& name() const { return name_; }
  const std::vector<Axiom>& axioms() const { return axioms_; }
  const std::vector<std::string>& provenance() const { return provenance_; }
  /// Declared names including the implicit Thing.
  const std::map<std::string, Kind, std::less<>>& symbols() const { return symbols_; }

  std::optional<Kind> kind_of(std::string_view name) const;
  bool has(std::string_view name, Kind kind) const;

  /// Sorted declared names of one kind. classes() excludes Thing.
  std::vector<std::string> names_of(Kind kind) const;
  std::vector<std::string> classes() const { return names_of(Kind::Class); }
  std::vector<std::string> individuals() const { return names_of(Kind::Individual); }

  /// Classes that get the implicit `SubClassOf(c, Thing)` edge.
  const std::vector<std::string>& root_classes() const { return root_classes_; }

  /// Asserted plus implicit subclass edges as (child, parent), input order.
  std::vector<SubClassOf> subclass_edges() const;

  const ObjPropDecl* object_property(std::string_view name) const;
  const DataPropDecl* data_property(std::string_view name) const;

  /// Union of types over every IndividualDecl of `individual`, sorted.
  std::vector<std::string> asserted_types(std::string_view individual) const;
  /// Source location of the first declaration of `name`, if any.
  std::optional<SourceLoc> declaration_site(std::string_view name) const;

  std::size_t count_assertions() const;

 private:
  friend Result<Ontology> build_ontology(std::string name, std::vector<Axiom> axioms,
                                         std::vector<std::string> provenance);

  std::string name_;
  std::vector<Axiom> axioms_;
  std::vector<std::string> provenance_;
  std::map<std::string, Kind, std::less<>> symbols_;
  std::vector<std::string> root_classes_;
  std::map<std::string, std::size_t, std::less<>> obj_props_;
  std::map<std::string, std::size_t, std::less<>> data_props_;
  std::map<std::string, std::vector<std::string>, std::less<>> individual_types_;
  std::map<std::string, std::size_t, std::less<>> first_decl_;
};

/// Checks identifiers, kinds, references and facet invariants, reporting
/// every problem found in one pass.
Result<Ontology> build_ontology(std::string name, std::vector<Axiom> axioms,
                                std::vector<std::string> provenance = {});

/// Per-axiom findings from the same checks build_ontology runs; `first` is
/// the index of the offending axiom.
std::vector<std::pair<std::size_t, Diagnostic>> check_axioms(const std::vector<Axiom>& axioms);

/// Deduplicated, sorted statements with per-statement lists normalized.
/// Implicit Thing edges are not axioms and never appear.
std::vector<Axiom> canonical_axioms(const Ontology& o);
std::vector<Axiom> canonicalize(std::vector<Axiom> axioms);

/// Stable textual key of an axiom body: tag index then constituent names.
std::string axiom_sort_key(const Axiom& a);

/// Names an axiom mentions, with the kind each position requires.
std::vector<Ident> referenced_names(const Axiom& a);

}  // namespace ontokit
