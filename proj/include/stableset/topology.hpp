#ifndef STABLESET_TOPOLOGY_HPP
#define STABLESET_TOPOLOGY_HPP

#include <string>
#include <vector>

#include "stableset/problem.hpp"
#include "stableset/solutions.hpp"

namespace stableset {

/// Thrown by build_witness when the excluded set is not w-stable (a caller
/// error, not a failed check).
struct NotWStable : std::runtime_error {
  explicit NotWStable(const std::string& what) : std::runtime_error(what) {}
};

/// Openness of one strict upper set under the excluded-set rule.
struct PointVerdict {
  int x;
  std::vector<int> strict_upper;  // { y : x strictly reaches y in the closure }
  bool disjoint_from_excluded;
  bool whole_space;
  bool open() const { return disjoint_from_excluded || whole_space; }
};

/// A machine-checkable record that the excluded-set topology generated by a
/// w-stable set is compact and keeps every strict upper set of the closure
/// open. The topology itself is never materialized; the rule "U open iff
/// U does not meet F, or U = X" decides openness of each recorded set.
struct TopologyWitness {
  std::vector<int> excluded_set;
  std::string open_set_rule;
  std::vector<PointVerdict> per_point;
  bool compact;
  std::string compact_reason;

  bool passes() const;
};

TopologyWitness build_witness(const DecisionProblem& p, const std::vector<int>& f,
                              int dense_threshold = kDefaultDenseThreshold);
TopologyWitness build_witness(const DecisionProblem& p, const std::vector<int>& f,
                              const Reachability& reach);

/// Summary of building a witness for every w-stable set of a problem.
struct WitnessReport {
  std::size_t sets_checked = 0;
  bool all_pass = true;
  std::vector<std::vector<int>> failures;
  bool truncated = false;
};

/// Enumerates the w-stable sets and witnesses each one. Any failure would
/// falsify the implementation, not the underlying mathematics.
WitnessReport verify_all_witnesses(const DecisionProblem& p, const Limits& limits = {});

}  // namespace stableset

#endif
