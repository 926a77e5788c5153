#include "ontokit/model.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace ontokit {

// ---------------------------------------------------------------------------
// Diagnostics

Diagnostic make_error(std::string_view code, std::string message, std::string file, int line) {
  return Diagnostic{Severity::Error, std::string(code), std::move(message), std::move(file), line, 0};
}

Diagnostic make_warning(std::string_view code, std::string message, std::string file, int line) {
  return Diagnostic{Severity::Warning, std::string(code), std::move(message), std::move(file), line,
                    0};
}

std::string_view severity_name(Severity s) { return s == Severity::Error ? "error" : "warning"; }

std::string format_diagnostic(const Diagnostic& d) {
  std::string out = d.file.empty() ? std::string("<input>") : d.file;
  out += ':';
  out += std::to_string(d.line);
  out += ": ";
  out += severity_name(d.severity);
  out += ' ';
  out += d.code;
  out += ' ';
  out += d.message;
  return out;
}

void sort_diagnostics(std::vector<Diagnostic>& diags) {
  std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return std::tie(a.file, a.line, a.code, a.message) < std::tie(b.file, b.line, b.code, b.message);
  });
}

bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) { return d.is_error(); });
}

DiagnosticError::DiagnosticError(Diagnostic d)
    : std::runtime_error(format_diagnostic(d)), diag_(std::move(d)) {}

// ---------------------------------------------------------------------------
// Identifiers and facets

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::Class: return "class";
    case Kind::ObjectProperty: return "object property";
    case Kind::DataProperty: return "data property";
    case Kind::Individual: return "individual";
  }
  return "?";
}

bool is_identifier(std::string_view text) {
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (text.empty() || !alpha(text.front())) return false;
  return std::all_of(text.begin() + 1, text.end(), [&](char c) { return alpha(c) || digit(c); });
}

bool FacetSpec::allows(const Literal& value) const {
  if (!value.conforms_to(value_type)) return false;
  if (!allowed_values) return true;
  return std::find(allowed_values->begin(), allowed_values->end(), value) != allowed_values->end();
}

// ---------------------------------------------------------------------------
// Axiom structure

namespace {

struct Usage {
  std::optional<Ident> declares;
  std::vector<Ident> refs;
};

Usage usage_of(const Axiom& a) {
  Usage u;
  std::visit(
      [&](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, ClassDecl>) {
          u.declares = Ident{b.name, Kind::Class};
        } else if constexpr (std::is_same_v<T, SubClassOf>) {
          u.refs = {{b.child, Kind::Class}, {b.parent, Kind::Class}};
        } else if constexpr (std::is_same_v<T, ObjPropDecl>) {
          u.declares = Ident{b.name, Kind::ObjectProperty};
          if (b.domain) u.refs.push_back({*b.domain, Kind::Class});
          if (b.range) u.refs.push_back({*b.range, Kind::Class});
        } else if constexpr (std::is_same_v<T, DataPropDecl>) {
          u.declares = Ident{b.name, Kind::DataProperty};
          if (b.domain) u.refs.push_back({*b.domain, Kind::Class});
        } else if constexpr (std::is_same_v<T, IndividualDecl>) {
          u.declares = Ident{b.name, Kind::Individual};
          for (const auto& t : b.types) u.refs.push_back({t, Kind::Class});
        } else if constexpr (std::is_same_v<T, ObjAssertion>) {
          u.refs = {{b.subject, Kind::Individual},
                    {b.property, Kind::ObjectProperty},
                    {b.object, Kind::Individual}};
        } else if constexpr (std::is_same_v<T, DataAssertion>) {
          u.refs = {{b.subject, Kind::Individual}, {b.property, Kind::DataProperty}};
        }
      },
      a.body);
  return u;
}

FacetSpec normalized(FacetSpec f) {
  if (f.allowed_values) {
    auto& vals = *f.allowed_values;
    std::stable_sort(vals.begin(), vals.end(), [](const Literal& x, const Literal& y) {
      return x.sort_key() < y.sort_key();
    });
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  }
  return f;
}

Axiom normalized(Axiom a) {
  if (auto* ind = std::get_if<IndividualDecl>(&a.body)) {
    std::sort(ind->types.begin(), ind->types.end());
    ind->types.erase(std::unique(ind->types.begin(), ind->types.end()), ind->types.end());
  } else if (auto* dp = std::get_if<DataPropDecl>(&a.body)) {
    dp->facet = normalized(std::move(dp->facet));
  }
  return a;
}

bool is_thing_decl(const Axiom& a) {
  const auto* c = a.as<ClassDecl>();
  return c != nullptr && c->name == kThing;
}

void check_facet(const DataPropDecl& d, const SourceLoc& loc,
                 std::vector<Diagnostic>& out) {
  const auto& f = d.facet;
  if (f.value_type == ValueType::Enumerated && !f.allowed_values) {
    out.push_back(make_error(code::Facet, "enum property '" + d.name + "' needs an allowed list",
                             loc.file, loc.line));
  }
  if (!f.allowed_values) return;
  const auto& vals = *f.allowed_values;
  if (vals.empty()) {
    out.push_back(make_error(code::Facet, "allowed list of '" + d.name + "' is empty", loc.file,
                             loc.line));
  }
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (!vals[i].conforms_to(f.value_type)) {
      out.push_back(make_error(code::TypeMismatch,
                               "allowed value " + vals[i].to_source() + " of '" + d.name +
                                   "' is not of type " + std::string(value_type_name(f.value_type)),
                               loc.file, loc.line));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (vals[j] == vals[i]) {
        out.push_back(make_error(code::Facet,
                                 "duplicate allowed value " + vals[i].to_source() + " for '" +
                                     d.name + "'",
                                 loc.file, loc.line));
        break;
      }
    }
  }
}

}  // namespace

std::vector<Ident> referenced_names(const Axiom& a) {
  auto u = usage_of(a);
  std::vector<Ident> out;
  if (u.declares) out.push_back(*u.declares);
  out.insert(out.end(), u.refs.begin(), u.refs.end());
  return out;
}

// ---------------------------------------------------------------------------
// Checking and building

std::vector<std::pair<std::size_t, Diagnostic>> check_axioms(const std::vector<Axiom>& axioms) {
  std::vector<std::pair<std::size_t, Diagnostic>> out;
  auto report = [&](std::size_t i, std::string_view code, std::string msg) {
    out.emplace_back(i, make_error(code, std::move(msg), axioms[i].loc.file, axioms[i].loc.line));
  };

  std::vector<Usage> usages;
  usages.reserve(axioms.size());
  for (const auto& a : axioms) usages.push_back(usage_of(a));

  // Local shape checks.
  for (std::size_t i = 0; i < axioms.size(); ++i) {
    const auto& a = axioms[i];
    for (const auto& id : referenced_names(a)) {
      if (!is_identifier(id.name)) report(i, code::Ident, "'" + id.name + "' is not an identifier");
    }
    if (const auto* s = a.as<SubClassOf>(); s && s->child == s->parent) {
      report(i, code::SelfSubclass, "class '" + s->child + "' cannot be its own subclass");
    }
    if (const auto* ind = a.as<IndividualDecl>(); ind && ind->types.empty()) {
      report(i, code::EmptyTypes, "individual '" + ind->name + "' has no type");
    }
    if (const auto* dp = a.as<DataPropDecl>()) {
      std::vector<Diagnostic> facet;
      check_facet(*dp, a.loc, facet);
      for (auto& d : facet) out.emplace_back(i, std::move(d));
    }
  }

  // Declarations: first kind wins, later conflicting declarations clash.
  std::map<std::string, Kind, std::less<>> kinds{{std::string(kThing), Kind::Class}};
  for (std::size_t i = 0; i < axioms.size(); ++i) {
    const auto& decl = usages[i].declares;
    if (!decl) continue;
    auto [it, inserted] = kinds.emplace(decl->name, decl->kind);
    if (!inserted && it->second != decl->kind) {
      report(i, code::KindClash,
             "'" + decl->name + "' declared as " + std::string(kind_name(decl->kind)) +
                 " but already a " + std::string(kind_name(it->second)));
    }
  }

  // References.
  for (std::size_t i = 0; i < axioms.size(); ++i) {
    for (const auto& ref : usages[i].refs) {
      auto it = kinds.find(ref.name);
      if (it == kinds.end()) {
        report(i, code::UnknownRef,
               "undeclared " + std::string(kind_name(ref.kind)) + " '" + ref.name + "'");
      } else if (it->second != ref.kind) {
        report(i, code::KindClash,
               "'" + ref.name + "' used as " + std::string(kind_name(ref.kind)) + " but declared " +
                   std::string(kind_name(it->second)));
      }
    }
  }

  // A property may be declared more than once only with identical content.
  std::map<std::string, std::size_t, std::less<>> first_prop;
  for (std::size_t i = 0; i < axioms.size(); ++i) {
    const auto& a = axioms[i];
    if (!a.as<ObjPropDecl>() && !a.as<DataPropDecl>()) continue;
    const auto& name = usages[i].declares->name;
    auto [it, inserted] = first_prop.emplace(name, i);
    if (inserted) continue;
    const auto& first = axioms[it->second];
    if (first.body.index() == a.body.index() && !(normalized(first) == normalized(a))) {
      report(i, code::DeclClash,
             "property '" + name + "' redeclared with a different domain, range or facet (first at line " +
                 std::to_string(first.loc.line) + ")");
    }
  }

  std::stable_sort(out.begin(), out.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

Result<Ontology> build_ontology(std::string name, std::vector<Axiom> axioms,
                                std::vector<std::string> provenance) {
  std::vector<Diagnostic> diags;
  if (!is_identifier(name)) {
    diags.push_back(make_error(code::Ident, "ontology name '" + name + "' is not an identifier"));
  }
  for (auto& [idx, d] : check_axioms(axioms)) diags.push_back(std::move(d));
  if (!diags.empty()) return diags;

  Ontology o;
  o.name_ = std::move(name);
  o.provenance_ = std::move(provenance);
  o.symbols_.emplace(std::string(kThing), Kind::Class);
  std::erase_if(axioms, is_thing_decl);
  o.axioms_ = std::move(axioms);

  std::set<std::string, std::less<>> has_parent;
  for (std::size_t i = 0; i < o.axioms_.size(); ++i) {
    const auto& a = o.axioms_[i];
    auto u = usage_of(a);
    if (u.declares) {
      o.symbols_.emplace(u.declares->name, u.declares->kind);
      o.first_decl_.emplace(u.declares->name, i);
    }
    if (const auto* s = a.as<SubClassOf>()) has_parent.insert(s->child);
    if (const auto* p = a.as<ObjPropDecl>()) o.obj_props_.emplace(p->name, i);
    if (const auto* p = a.as<DataPropDecl>()) o.data_props_.emplace(p->name, i);
    if (const auto* ind = a.as<IndividualDecl>()) {
      auto& types = o.individual_types_[ind->name];
      types.insert(types.end(), ind->types.begin(), ind->types.end());
    }
  }
  for (auto& [ind, types] : o.individual_types_) {
    std::sort(types.begin(), types.end());
    types.erase(std::unique(types.begin(), types.end()), types.end());
  }
  for (const auto& [sym, kind] : o.symbols_) {
    if (kind == Kind::Class && sym != kThing && !has_parent.contains(sym)) {
      o.root_classes_.push_back(sym);
    }
  }
  return o;
}

// ---------------------------------------------------------------------------
// Ontology accessors

std::optional<Kind> Ontology::kind_of(std::string_view name) const {
  auto it = symbols_.find(name);
  if (it == symbols_.end()) return std::nullopt;
  return it->second;
}

bool Ontology::has(std::string_view name, Kind kind) const { return kind_of(name) == kind; }

std::vector<std::string> Ontology::names_of(Kind kind) const {
  std::vector<std::string> out;
  for (const auto& [name, k] : symbols_) {
    if (k == kind && name != kThing) out.push_back(name);
  }
  return out;
}

std::vector<SubClassOf> Ontology::subclass_edges() const {
  std::vector<SubClassOf> out;
  for (const auto& a : axioms_) {
    if (const auto* s = a.as<SubClassOf>()) out.push_back(*s);
  }
  for (const auto& c : root_classes_) out.push_back({c, std::string(kThing)});
  return out;
}

const ObjPropDecl* Ontology::object_property(std::string_view name) const {
  auto it = obj_props_.find(name);
  return it == obj_props_.end() ? nullptr : axioms_[it->second].as<ObjPropDecl>();
}

const DataPropDecl* Ontology::data_property(std::string_view name) const {
  auto it = data_props_.find(name);
  return it == data_props_.end() ? nullptr : axioms_[it->second].as<DataPropDecl>();
}

std::vector<std::string> Ontology::asserted_types(std::string_view individual) const {
  auto it = individual_types_.find(individual);
  return it == individual_types_.end() ? std::vector<std::string>{} : it->second;
}

std::optional<SourceLoc> Ontology::declaration_site(std::string_view name) const {
  auto it = first_decl_.find(name);
  if (it == first_decl_.end()) return std::nullopt;
  return axioms_[it->second].loc;
}

std::size_t Ontology::count_assertions() const {
  return static_cast<std::size_t>(std::count_if(axioms_.begin(), axioms_.end(), [](const Axiom& a) {
    return a.as<ObjAssertion>() != nullptr || a.as<DataAssertion>() != nullptr;
  }));
}

// ---------------------------------------------------------------------------
// Canonical form

std::string axiom_sort_key(const Axiom& a) {
  constexpr char kSep = '\x1f';
  std::string key(1, static_cast<char>('0' + a.body.index()));
  auto field = [&](std::string_view s) {
    key.push_back(kSep);
    key.append(s);
  };
  auto opt_field = [&](const std::optional<std::string>& s) {
    key.push_back(kSep);
    if (s) {
      key.push_back('+');
      key.append(*s);
    }
  };
  std::visit(
      [&](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, ClassDecl>) {
          field(b.name);
        } else if constexpr (std::is_same_v<T, SubClassOf>) {
          field(b.child);
          field(b.parent);
        } else if constexpr (std::is_same_v<T, ObjPropDecl>) {
          field(b.name);
          opt_field(b.domain);
          opt_field(b.range);
        } else if constexpr (std::is_same_v<T, DataPropDecl>) {
          field(b.name);
          opt_field(b.domain);
          field(value_type_name(b.facet.value_type));
          key.push_back(kSep);
          if (b.facet.allowed_values) {
            key.push_back('+');
            for (const auto& v : *b.facet.allowed_values) {
              key.append(v.sort_key());
              key.push_back('\x1e');
            }
          }
          field(b.facet.cardinality == Cardinality::Single ? "single" : "multiple");
        } else if constexpr (std::is_same_v<T, IndividualDecl>) {
          field(b.name);
          for (const auto& t : b.types) field(t);
        } else if constexpr (std::is_same_v<T, ObjAssertion>) {
          field(b.subject);
          field(b.property);
          field(b.object);
        } else if constexpr (std::is_same_v<T, DataAssertion>) {
          field(b.subject);
          field(b.property);
          field(b.value.sort_key());
        }
      },
      a.body);
  return key;
}

std::vector<Axiom> canonicalize(std::vector<Axiom> axioms) {
  std::vector<std::pair<std::string, Axiom>> keyed;
  keyed.reserve(axioms.size());
  for (auto& a : axioms) {
    if (is_thing_decl(a)) continue;
    auto n = normalized(std::move(a));
    auto key = axiom_sort_key(n);
    keyed.emplace_back(std::move(key), std::move(n));
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Axiom> out;
  out.reserve(keyed.size());
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i > 0 && keyed[i].first == keyed[i - 1].first) continue;
    out.push_back(std::move(keyed[i].second));
  }
  return out;
}

std::vector<Axiom> canonical_axioms(const Ontology& o) { return canonicalize(o.axioms()); }

}  // namespace ontokit
