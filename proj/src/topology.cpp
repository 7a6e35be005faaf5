#include "stableset/topology.hpp"

#include <algorithm>

#include "stableset/relation.hpp"

namespace stableset {

namespace {
constexpr const char* kOpenSetRule = "U open iff U does not meet the excluded set, or U = X";
constexpr const char* kCompactReason =
    "every open cover contains X itself, so {X} is a finite subcover";
}  // namespace

bool TopologyWitness::passes() const {
  if (!compact) return false;
  return std::all_of(per_point.begin(), per_point.end(),
                     [](const PointVerdict& v) { return v.open(); });
}

TopologyWitness build_witness(const DecisionProblem& p, const std::vector<int>& f,
                              int dense_threshold) {
  return build_witness(p, f, transitive_closure(p, dense_threshold));
}

TopologyWitness build_witness(const DecisionProblem& p, const std::vector<int>& f,
                              const Reachability& reach) {
  if (!is_w_stable(p, reach, f)) {
    throw NotWStable("the excluded set is not w-stable, no witness to build");
  }

  TopologyWitness w;
  w.excluded_set = f;
  w.open_set_rule = kOpenSetRule;
  w.compact = true;
  w.compact_reason = kCompactReason;

  const int n = p.size();
  std::vector<char> in_f(n, 0);
  for (int x : f) in_f[x] = 1;

  StrictRelation strict = asymmetric_part(reach.rel, StrictKind::asymmetric_of_closure);
  for (int x = 0; x < n; ++x) {
    PointVerdict v;
    v.x = x;
    v.strict_upper = strict.rel.row(x);
    v.disjoint_from_excluded =
        std::none_of(v.strict_upper.begin(), v.strict_upper.end(),
                     [&](int y) { return in_f[y]; });
    v.whole_space = static_cast<int>(v.strict_upper.size()) == n;
    w.per_point.push_back(std::move(v));
  }
  return w;
}

WitnessReport verify_all_witnesses(const DecisionProblem& p, const Limits& limits) {
  Enumeration w_sets = w_stable_sets(p, limits);
  const Reachability reach = transitive_closure(p, limits.dense_threshold);
  WitnessReport report;
  report.truncated = w_sets.truncated;
  for (const SolutionSet& s : w_sets.sets) {
    ++report.sets_checked;
    TopologyWitness witness = build_witness(p, s.members, reach);
    if (!witness.passes()) {
      report.all_pass = false;
      report.failures.push_back(s.members);
    }
  }
  return report;
}

}  // namespace stableset
