#include "ontokit/reasoner.hpp"

#include <algorithm>
#include <functional>
#include <tuple>
#include <vector>

namespace ontokit {

namespace {

const NameSet& lookup(const NameSetMap& m, std::string_view key) {
  static const NameSet kEmpty;
  auto it = m.find(key);
  return it == m.end() ? kEmpty : it->second;
}

// Tarjan's algorithm over the child -> parent graph.
class CycleFinder {
 public:
  explicit CycleFinder(const NameSetMap& parents) : parents_(parents) {}

  std::vector<std::vector<std::string>> cycles() {
    for (const auto& [cls, ps] : parents_) {
      if (!index_.contains(cls)) visit(cls);
    }
    return std::move(found_);
  }

 private:
  void visit(const std::string& v) {
    index_[v] = low_[v] = counter_++;
    stack_.push_back(v);
    on_stack_.insert(v);
    for (const auto& w : lookup(parents_, v)) {
      if (!index_.contains(w)) {
        visit(w);
        low_[v] = std::min(low_[v], low_[w]);
      } else if (on_stack_.contains(w)) {
        low_[v] = std::min(low_[v], index_[w]);
      }
    }
    if (low_[v] != index_[v]) return;
    std::vector<std::string> component;
    std::string w;
    do {
      w = stack_.back();
      stack_.pop_back();
      on_stack_.erase(w);
      component.push_back(w);
    } while (w != v);
    if (component.size() > 1) {
      std::sort(component.begin(), component.end());
      found_.push_back(std::move(component));
    }
  }

  const NameSetMap& parents_;
  std::map<std::string, int, std::less<>> index_, low_;
  std::vector<std::string> stack_;
  NameSet on_stack_;
  int counter_ = 0;
  std::vector<std::vector<std::string>> found_;
};

}  // namespace

const NameSet& TaxonomyClosure::ancestors_of(std::string_view cls) const {
  return lookup(ancestors, cls);
}

const NameSet& TaxonomyClosure::descendants_of(std::string_view cls) const {
  return lookup(descendants, cls);
}

bool TaxonomyClosure::subsumed_by(std::string_view sub, std::string_view sup) const {
  return sub == sup || ancestors_of(sub).contains(sup);
}

const NameSet& Realization::members(std::string_view cls) const { return lookup(members_of, cls); }

const NameSet& Realization::types(std::string_view individual) const {
  return lookup(types_of, individual);
}

Result<TaxonomyClosure> compute_closure(const Ontology& o) {
  TaxonomyClosure c;
  for (const auto& [name, kind] : o.symbols()) {
    if (kind != Kind::Class) continue;
    c.direct_parents[name];
    c.ancestors[name];
    c.descendants[name];
  }
  for (const auto& e : o.subclass_edges()) c.direct_parents[e.child].insert(e.parent);

  auto cycles = CycleFinder(c.direct_parents).cycles();
  if (!cycles.empty()) {
    std::vector<Diagnostic> diags;
    for (const auto& members : cycles) {
      // Anchor the report at the earliest asserted edge inside the cycle.
      const SourceLoc* anchor = nullptr;
      for (const auto& a : o.axioms()) {
        const auto* s = a.as<SubClassOf>();
        if (!s || !std::binary_search(members.begin(), members.end(), s->child) ||
            !std::binary_search(members.begin(), members.end(), s->parent))
          continue;
        if (!anchor || std::tie(a.loc.file, a.loc.line) < std::tie(anchor->file, anchor->line))
          anchor = &a.loc;
      }
      std::string names;
      for (const auto& m : members) names += (names.empty() ? "" : ", ") + m;
      diags.push_back(make_error(code::Cycle, "subclass cycle through " + names,
                                 anchor ? anchor->file : std::string{}, anchor ? anchor->line : 0));
    }
    sort_diagnostics(diags);
    return diags;
  }

  // Memoized depth-first accumulation; the graph is a DAG here.
  NameSet done;
  std::function<const NameSet&(const std::string&)> fill = [&](const std::string& cls) -> const NameSet& {
    auto& anc = c.ancestors[cls];
    if (done.contains(cls)) return anc;
    for (const auto& p : c.direct_parents[cls]) {
      anc.insert(p);
      const auto& up = fill(p);
      anc.insert(up.begin(), up.end());
    }
    done.insert(cls);
    return anc;
  };
  for (const auto& [cls, ps] : c.direct_parents) fill(cls);

  for (const auto& [cls, anc] : c.ancestors) {
    for (const auto& a : anc) c.descendants[a].insert(cls);
  }
  return c;
}

Realization realize(const Ontology& o, const TaxonomyClosure& c) {
  Realization r;
  for (const auto& cls : c.ancestors) r.members_of[cls.first];
  for (const auto& ind : o.individuals()) {
    auto& types = r.types_of[ind];
    for (const auto& t : o.asserted_types(ind)) {
      types.insert(t);
      const auto& anc = c.ancestors_of(t);
      types.insert(anc.begin(), anc.end());
    }
    for (const auto& t : types) r.members_of[t].insert(ind);
  }
  return r;
}

NameSet applicable_properties(const Ontology& o, const TaxonomyClosure& c, std::string_view cls) {
  if (!o.has(cls, Kind::Class)) {
    throw DiagnosticError(make_error(code::UnknownRef, "unknown class '" + std::string(cls) + "'"));
  }
  NameSet out;
  auto consider = [&](const std::string& prop, const std::optional<std::string>& domain) {
    if (!domain || c.subsumed_by(cls, *domain)) out.insert(prop);
  };
  for (const auto& p : o.names_of(Kind::ObjectProperty)) consider(p, o.object_property(p)->domain);
  for (const auto& p : o.names_of(Kind::DataProperty)) consider(p, o.data_property(p)->domain);
  return out;
}

}  // namespace ontokit
