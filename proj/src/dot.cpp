#include "ontokit/exchange.hpp"

#include <algorithm>
#include <set>

namespace ontokit {

std::vector<std::pair<std::string, std::string>> transitive_reduction(const TaxonomyClosure& c) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [child, anc] : c.ancestors) {
    for (const auto& parent : anc) {
      // parent is redundant when some other ancestor already lies below it
      bool implied = std::any_of(anc.begin(), anc.end(), [&](const std::string& mid) {
        return mid != parent && c.ancestors_of(mid).contains(parent);
      });
      if (!implied) edges.emplace_back(parent, child);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::string export_dot(const Ontology& o, const TaxonomyClosure& c, bool inferred) {
  std::vector<std::pair<std::string, std::string>> edges;
  if (inferred) {
    edges = transitive_reduction(c);
  } else {
    for (const auto& [child, parents] : c.direct_parents) {
      for (const auto& p : parents) edges.emplace_back(p, child);
    }
    std::sort(edges.begin(), edges.end());
  }

  std::set<std::string> nodes;
  for (const auto& cls : o.classes()) nodes.insert(cls);
  if (std::any_of(edges.begin(), edges.end(), [](const auto& e) { return e.first == kThing; }))
    nodes.insert(std::string(kThing));

  std::string out = "digraph taxonomy {\n";
  for (const auto& n : nodes) out += "  \"" + n + "\";\n";
  for (const auto& [parent, child] : edges) out += "  \"" + parent + "\" -> \"" + child + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace ontokit
