#include "ontokit/validator.hpp"

#include <map>
#include <utility>

namespace ontokit {

ValidationReport validate(const Ontology& o, const TaxonomyClosure& /*c*/, const Realization& r) {
  ValidationReport report;
  auto& out = report.diagnostics;
  auto err = [&](std::string_view code, std::string msg, const SourceLoc& loc) {
    out.push_back(make_error(code, std::move(msg), loc.file, loc.line));
  };
  auto outside = [&](const std::string& ind, const std::optional<std::string>& cls) {
    return cls && !r.members(*cls).contains(ind);
  };

  // (individual, property) -> number of data assertions seen so far
  std::map<std::pair<std::string, std::string>, int> counts;

  for (const auto& a : o.axioms()) {
    if (const auto* da = a.as<DataAssertion>()) {
      ++report.checked_assertions;
      const auto* decl = o.data_property(da->property);
      const auto& facet = decl->facet;
      if (!da->value.conforms_to(facet.value_type)) {
        err(code::TypeMismatch,
            da->property + " expects " + std::string(value_type_name(facet.value_type)) + ", got " +
                da->value.to_source(),
            a.loc);
      } else if (!facet.allows(da->value)) {
        err(code::AllowedValue, da->value.to_source() + " is not an allowed value of " + da->property,
            a.loc);
      }
      if (outside(da->subject, decl->domain)) {
        err(code::Domain, da->subject + " is not a " + *decl->domain + " (domain of " + da->property + ")",
            a.loc);
      }
      int seen = ++counts[{da->subject, da->property}];
      if (facet.cardinality == Cardinality::Single && seen > 1) {
        err(code::CardSingle, da->property + " is single-valued but " + da->subject + " has " +
                                  std::to_string(seen) + " values",
            a.loc);
      }
    } else if (const auto* oa = a.as<ObjAssertion>()) {
      ++report.checked_assertions;
      const auto* decl = o.object_property(oa->property);
      if (outside(oa->subject, decl->domain)) {
        err(code::Domain, oa->subject + " is not a " + *decl->domain + " (domain of " + oa->property + ")",
            a.loc);
      }
      if (outside(oa->object, decl->range)) {
        err(code::Range, oa->object + " is not a " + *decl->range + " (range of " + oa->property + ")",
            a.loc);
      }
    }
  }

  for (const auto& prop : o.names_of(Kind::DataProperty)) {
    const auto* decl = o.data_property(prop);
    if (decl->facet.cardinality != Cardinality::Multiple || !decl->domain) continue;
    for (const auto& ind : r.members(*decl->domain)) {
      if (counts.contains({ind, prop})) continue;
      auto loc = o.declaration_site(ind).value_or(SourceLoc{});
      out.push_back(make_warning(code::CardMultiple, ind + " has no value for " + prop, loc.file, loc.line));
    }
  }

  sort_diagnostics(out);
  report.ok = !has_errors(out);
  return report;
}

}  // namespace ontokit
