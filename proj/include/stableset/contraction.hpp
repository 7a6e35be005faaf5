#ifndef STABLESET_CONTRACTION_HPP
#define STABLESET_CONTRACTION_HPP

#include <utility>
#include <vector>

#include "stableset/problem.hpp"

namespace stableset {

/// One block of the strong-component partition. Members of a block of size
/// >= 2 are pairwise mutually reachable; a singleton {x} is a block either
/// because x lies on no cycle or because of a self-loop.
struct StrongComponent {
  int index;
  std::vector<int> members;  // ascending
};

/// The contraction of a problem: the component partition plus the acyclic
/// component-level relation. edges hold (i, j) with i != j meaning some
/// member of component i dominates some member of component j.
struct Condensation {
  std::vector<StrongComponent> components;
  std::vector<std::pair<int, int>> edges;  // sorted, deduplicated
  std::vector<int> component_of;           // alternative id -> component index
};

/// Ground sets of the components with no incoming component edge. Non-empty
/// for every valid problem.
struct MaximalFamily {
  std::vector<int> indices;                    // ascending component indices
  std::vector<std::vector<int>> ground_sets;   // corresponding member sets
};

/// Partition of the alternatives into strong components, in canonical order
/// (ascending smallest member). Linear time in n + |edges|.
std::vector<StrongComponent> strong_components(const DecisionProblem& p);

Condensation contraction(const DecisionProblem& p);

MaximalFamily maximal_components(const Condensation& c);

/// Literal reading of strong connectedness: the closure relates every ordered
/// pair, including each x to itself. A single loop-free alternative is not
/// strongly connected (no path of length >= 1).
bool is_strongly_connected(const DecisionProblem& p);

}  // namespace stableset

#endif
