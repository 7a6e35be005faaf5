#ifndef STABLESET_ORACLE_HPP
#define STABLESET_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "stableset/problem.hpp"
#include "stableset/solutions.hpp"

namespace stableset {

/// Output of a definitional brute-force enumeration. Sets appear in the order
/// they were examined (increasing cardinality, then lexicographic).
struct OracleResult {
  Concept kind;
  std::vector<std::vector<int>> sets;
  std::uint64_t subsets_examined = 0;
  double elapsed_seconds = 0.0;
};

/// Enumerates every non-empty subset of X and applies the literal definition
/// of the concept. Shares nothing with the fast implementations except the
/// problem representation; the closure is recomputed here by a different
/// algorithm. Supports the four stable-set concepts.
OracleResult oracle_enumerate(const DecisionProblem& p, Concept kind, int max_n = 20);

/// All non-empty subsets D that no outsider dominates, minimal under set
/// inclusion. Their union is the GOCHA (Schwartz) set.
std::vector<std::vector<int>> oracle_minimal_undominated(const DecisionProblem& p,
                                                         int max_n = 20);

}  // namespace stableset

#endif
