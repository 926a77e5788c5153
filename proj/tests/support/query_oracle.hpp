#pragma once

// Reference answers for every query mode, from reachability and membership
// oracles rather than the closure maps.

#include <set>
#include <string>
#include <vector>

#include "support/oracles.hpp"

namespace ontokit::testkit {

inline std::vector<std::string> oracle_answer(const Ontology& o, const ClassExpr& e, QueryMode mode) {
  if (mode == QueryMode::Instances) return MembershipOracle(o).instances(e);

  std::vector<std::string> conj;
  if (const auto* n = std::get_if<expr::Named>(&e.node)) {
    conj.push_back(n->cls);
  } else {
    for (const auto& op : std::get<expr::And>(e.node).operands) conj.push_back(std::get<expr::Named>(op.node).cls);
  }
  ReachabilityOracle reach(o);
  const bool sub = mode == QueryMode::Subclasses || mode == QueryMode::DirectSubclasses;
  // below(x, y): x is y or strictly under y
  auto below = [&](const std::string& x, const std::string& y) { return x == y || reach.reaches(x, y); };

  std::set<std::string> result;
  for (const auto& x : reach.names()) {
    bool ok = true;
    for (const auto& q : conj) {
      if (sub ? !reach.reaches(x, q) : !below(q, x)) ok = false;
      if (!sub && x == q) ok = false;
    }
    if (ok) result.insert(x);
  }
  if (mode == QueryMode::DirectSubclasses || mode == QueryMode::DirectSuperclasses) {
    std::set<std::string> kept;
    for (const auto& x : result) {
      bool dominated = false;
      for (const auto& y : result) {
        if (x == y) continue;
        if (mode == QueryMode::DirectSubclasses ? reach.reaches(x, y) : reach.reaches(y, x)) dominated = true;
      }
      if (!dominated) kept.insert(x);
    }
    result = std::move(kept);
  }
  return {result.begin(), result.end()};
}

}  // namespace ontokit::testkit
