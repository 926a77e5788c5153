#include "ontokit/exchange.hpp"

#include <algorithm>

namespace ontokit {

namespace {

Diagnostic conflict(std::string_view code, std::string msg, const SourceLoc& loc) {
  return make_warning(code, std::move(msg), loc.file, loc.line);
}

// Returns a conflict when `x` (from the second ontology) disagrees with `a`.
std::optional<Diagnostic> clash_with(const Ontology& a, const Axiom& x) {
  for (const auto& id : referenced_names(x)) {
    auto k = a.kind_of(id.name);
    if (k && *k != id.kind) {
      return conflict(code::KindClash,
                      "'" + id.name + "' is a " + std::string(kind_name(*k)) + " in the first ontology, not a " +
                          std::string(kind_name(id.kind)),
                      x.loc);
    }
  }
  if (const auto* d = x.as<DataPropDecl>()) {
    if (const auto* mine = a.data_property(d->name)) {
      auto lhs = canonicalize({Axiom{*mine, {}}});
      auto rhs = canonicalize({Axiom{*d, {}}});
      const auto& fa = lhs.front().as<DataPropDecl>()->facet;
      const auto& fb = rhs.front().as<DataPropDecl>()->facet;
      if (!(fa == fb)) {
        return conflict(code::FacetClash, "facet of '" + d->name + "' differs from the first ontology; kept first",
                        x.loc);
      }
      if (mine->domain != d->domain) {
        return conflict(code::DeclClash, "domain of '" + d->name + "' differs from the first ontology; kept first",
                        x.loc);
      }
    }
  }
  if (const auto* p = x.as<ObjPropDecl>()) {
    if (const auto* mine = a.object_property(p->name); mine && !(*mine == *p)) {
      return conflict(code::DeclClash,
                      "domain/range of '" + p->name + "' differs from the first ontology; kept first", x.loc);
    }
  }
  return std::nullopt;
}

}  // namespace

MergeReport merge(const Ontology& a, const Ontology& b, std::string name) {
  std::vector<Diagnostic> conflicts;
  auto combined = canonical_axioms(a);
  const std::size_t base = combined.size();

  for (auto& x : canonical_axioms(b)) {
    if (auto c = clash_with(a, x)) {
      conflicts.push_back(std::move(*c));
    } else {
      combined.push_back(std::move(x));
    }
  }

  // Dropping an axiom can orphan others from the second ontology (for
  // example assertions about an individual whose declaration clashed), so
  // repeat until the union checks clean. The first ontology alone is valid.
  while (true) {
    auto findings = check_axioms(combined);
    std::vector<std::size_t> drop;
    for (auto& [idx, d] : findings) {
      if (idx < base) continue;
      d.severity = Severity::Warning;
      conflicts.push_back(std::move(d));
      drop.push_back(idx);
    }
    if (drop.empty()) break;
    std::sort(drop.begin(), drop.end());
    drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
    for (auto it = drop.rbegin(); it != drop.rend(); ++it) combined.erase(combined.begin() + static_cast<std::ptrdiff_t>(*it));
  }

  auto provenance = a.provenance();
  provenance.insert(provenance.end(), b.provenance().begin(), b.provenance().end());
  auto built = build_ontology(std::move(name), std::move(combined), std::move(provenance));
  if (!built) {
    // Only reachable when `name` is not an identifier.
    throw DiagnosticError(built.diagnostics().front());
  }

  MergeReport report{std::move(built).value(), 0, std::move(conflicts)};
  report.added = canonical_axioms(report.merged).size() - base;
  auto closure = compute_closure(report.merged);
  if (!closure) {
    report.conflicts.insert(report.conflicts.end(), closure.diagnostics().begin(), closure.diagnostics().end());
  }
  sort_diagnostics(report.conflicts);
  return report;
}

}  // namespace ontokit
