#pragma once

// Brute-force reference computations. These read raw axioms only and share
// no code with the reasoner, query evaluator or exporter they check.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ontokit/dlquery.hpp"
#include "ontokit/model.hpp"

namespace ontokit::testkit {

/// Dense boolean reachability over all classes (Thing included), computed
/// with Floyd-Warshall over asserted edges plus child->Thing for every class
/// without an asserted parent.
class ReachabilityOracle {
 public:
  explicit ReachabilityOracle(const Ontology& o) {
    names_.push_back(std::string(kThing));
    for (const auto& [name, kind] : o.symbols())
      if (kind == Kind::Class && name != kThing) names_.push_back(name);
    for (std::size_t i = 0; i < names_.size(); ++i) index_[names_[i]] = i;

    std::vector<std::pair<std::string, std::string>> edges;
    std::set<std::string> has_parent;
    for (const auto& a : o.axioms()) {
      if (const auto* s = a.as<SubClassOf>()) {
        edges.emplace_back(s->child, s->parent);
        has_parent.insert(s->child);
      }
    }
    for (std::size_t i = 1; i < names_.size(); ++i)
      if (!has_parent.count(names_[i])) edges.emplace_back(names_[i], std::string(kThing));
    init(edges);
  }

  /// Reachability over an explicit child->parent edge list.
  ReachabilityOracle(std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& edges)
      : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) index_[names_[i]] = i;
    init(edges);
  }

  bool reaches(const std::string& from, const std::string& to) const {
    return reach_[index_.at(from)][index_.at(to)];
  }

  std::set<std::string> targets(const std::string& from) const {
    std::set<std::string> out;
    for (std::size_t j = 0; j < names_.size(); ++j)
      if (reach_[index_.at(from)][j]) out.insert(names_[j]);
    return out;
  }

  const std::vector<std::string>& names() const { return names_; }

 private:
  void init(const std::vector<std::pair<std::string, std::string>>& edges) {
    const std::size_t n = names_.size();
    reach_.assign(n, std::vector<bool>(n, false));
    for (const auto& [c, p] : edges) reach_[index_.at(c)][index_.at(p)] = true;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (reach_[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (reach_[k][j]) reach_[i][j] = true;
  }

  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<bool>> reach_;
};

/// Every class an individual belongs to, by walking parent edges upward
/// from each asserted type.
inline std::map<std::string, std::set<std::string>> types_by_path_walk(const Ontology& o) {
  std::map<std::string, std::vector<std::string>> parents;
  std::set<std::string> has_parent;
  for (const auto& a : o.axioms()) {
    if (const auto* s = a.as<SubClassOf>()) {
      parents[s->child].push_back(s->parent);
      has_parent.insert(s->child);
    }
  }
  for (const auto& [name, kind] : o.symbols())
    if (kind == Kind::Class && name != kThing && !has_parent.count(name)) parents[name].push_back(std::string(kThing));

  std::map<std::string, std::set<std::string>> out;
  for (const auto& a : o.axioms()) {
    const auto* ind = a.as<IndividualDecl>();
    if (!ind) continue;
    auto& types = out[ind->name];
    std::vector<std::string> stack(ind->types.begin(), ind->types.end());
    while (!stack.empty()) {
      auto c = stack.back();
      stack.pop_back();
      if (!types.insert(c).second) continue;
      for (const auto& p : parents[c]) stack.push_back(p);
    }
  }
  return out;
}

/// Does `individual` satisfy `e`? Evaluated one individual at a time.
class MembershipOracle {
 public:
  explicit MembershipOracle(const Ontology& o) : o_(o), types_(types_by_path_walk(o)) {}

  bool holds(const std::string& ind, const ClassExpr& e) const {
    if (const auto* n = std::get_if<expr::Named>(&e.node)) return types_.at(ind).count(n->cls) > 0;
    if (const auto* a = std::get_if<expr::And>(&e.node)) {
      for (const auto& op : a->operands)
        if (!holds(ind, op)) return false;
      return true;
    }
    if (const auto* s = std::get_if<expr::Some>(&e.node)) {
      for (const auto& ax : o_.axioms()) {
        const auto* oa = ax.as<ObjAssertion>();
        if (oa && oa->subject == ind && oa->property == s->property && holds(oa->object, *s->filler)) return true;
      }
      return false;
    }
    if (const auto* v = std::get_if<expr::ValueObj>(&e.node)) {
      for (const auto& ax : o_.axioms()) {
        const auto* oa = ax.as<ObjAssertion>();
        if (oa && oa->subject == ind && oa->property == v->property && oa->object == v->individual) return true;
      }
      return false;
    }
    const auto& d = std::get<expr::ValueData>(e.node);
    for (const auto& ax : o_.axioms()) {
      const auto* da = ax.as<DataAssertion>();
      if (da && da->subject == ind && da->property == d.property && da->value == d.value) return true;
    }
    return false;
  }

  std::vector<std::string> instances(const ClassExpr& e) const {
    std::vector<std::string> out;
    for (const auto& [ind, types] : types_)
      if (holds(ind, e)) out.push_back(ind);
    return out;  // std::map iteration is already sorted
  }

 private:
  const Ontology& o_;
  std::map<std::string, std::set<std::string>> types_;
};

/// (parent, child) edges parsed back out of DOT text.
inline std::vector<std::pair<std::string, std::string>> dot_edges(const std::string& dot) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t pos = 0;
  while ((pos = dot.find("\" -> \"", pos)) != std::string::npos) {
    auto line_start = dot.rfind('\n', pos) + 1;
    auto line_end = dot.find('\n', pos);
    auto line = dot.substr(line_start, line_end - line_start);
    auto q1 = line.find('"');
    auto q2 = line.find('"', q1 + 1);
    auto q3 = line.find('"', q2 + 1);
    auto q4 = line.find('"', q3 + 1);
    out.emplace_back(line.substr(q1 + 1, q2 - q1 - 1), line.substr(q3 + 1, q4 - q3 - 1));
    pos = line_end;
  }
  return out;
}

}  // namespace ontokit::testkit
