#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "ontokit/diagnostic.hpp"
#include "ontokit/model.hpp"

namespace ontokit {

using NameSet = std::set<std::string, std::less<>>;
using NameSetMap = std::map<std::string, NameSet, std::less<>>;

/// Inferred class hierarchy. Every class (Thing included) has an entry in
/// each map, possibly empty.
struct TaxonomyClosure {
  /// Strict ancestors; Thing is an ancestor of every other class.
  NameSetMap ancestors;
  NameSetMap descendants;
  /// Told parents: asserted edges plus the implicit Thing edges of roots.
  NameSetMap direct_parents;

  const NameSet& ancestors_of(std::string_view cls) const;
  const NameSet& descendants_of(std::string_view cls) const;
  /// `sub` is `sup` or one of its descendants.
  bool subsumed_by(std::string_view sub, std::string_view sup) const;
};

struct Realization {
  NameSetMap members_of;
  NameSetMap types_of;

  const NameSet& members(std::string_view cls) const;
  const NameSet& types(std::string_view individual) const;
};

/// Fails with one E_CYCLE diagnostic per strongly connected group of classes.
Result<TaxonomyClosure> compute_closure(const Ontology& o);

Realization realize(const Ontology& o, const TaxonomyClosure& c);

/// Properties whose domain is `cls`, one of its ancestors, or unspecified.
/// Throws DiagnosticError(E_UNKNOWN_REF) when `cls` is not a class.
NameSet applicable_properties(const Ontology& o, const TaxonomyClosure& c, std::string_view cls);

}  // namespace ontokit
