#ifndef STABLESET_SOLUTIONS_HPP
#define STABLESET_SOLUTIONS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

#include "stableset/contraction.hpp"
#include "stableset/problem.hpp"
#include "stableset/relation.hpp"

namespace stableset {

using BigCount = boost::multiprecision::cpp_int;

enum class Concept {
  core,
  schwartz,
  vnm_stable,
  generalized_stable,
  m_stable,
  w_stable,
};

std::string concept_name(Concept c);
/// Inverse of concept_name; throws std::invalid_argument on unknown names.
Concept concept_from_name(const std::string& name);

/// A labeled subset of the alternatives. `verified` is set when the
/// definitional checker for the concept confirmed the set (enumerators
/// re-check every set they emit; the core is definitional by construction).
struct SolutionSet {
  Concept kind;
  std::vector<int> members;  // ascending
  bool verified = false;
};

/// Budgets shared by the enumerators.
struct Limits {
  std::size_t limit = 10000;             // sets materialized per enumeration
  int brute_force_max_n = 20;            // ceiling for 2^n subset scans
  std::size_t materialize_budget = std::size_t{1} << 21;
  int dense_threshold = kDefaultDenseThreshold;
};

/// Enumeration output in canonical order (lexicographic by sorted member
/// ids), truncated at Limits::limit with the marker set. `total` is the exact
/// family size regardless of truncation.
struct Enumeration {
  Concept kind;
  std::vector<SolutionSet> sets;
  bool truncated = false;
  BigCount total = 0;
};

/// Maximal elements under strict dominance P(R). May be empty.
SolutionSet core(const DecisionProblem& p);

/// The GOCHA / Schwartz set, computed as the union of the ground sets of the
/// maximal components of the contraction. Closure-free.
SolutionSet schwartz_set(const DecisionProblem& p);

/// The two maximal-element routes to the Schwartz set that the literature
/// uses: strict part of the closure vs closure of the strict part. They
/// disagree on some relations with symmetric pairs; reports surface this.
struct SchwartzVariants {
  std::vector<int> strict_of_closure;   // maximal under P(closure(R))
  std::vector<int> closure_of_strict;   // maximal under closure(P(R))
  bool agree = true;
};

SchwartzVariants schwartz_variants(const DecisionProblem& p,
                                   int dense_threshold = kDefaultDenseThreshold);

// Definitional checkers. f must be a non-empty ascending id set. Overloads
// taking a Reachability reuse a precomputed closure.
bool is_vnm_stable(const DecisionProblem& p, const std::vector<int>& f);
bool is_generalized_stable(const DecisionProblem& p, const std::vector<int>& f);
bool is_generalized_stable(const DecisionProblem& p, const Reachability& reach,
                           const std::vector<int>& f);
bool is_m_stable(const DecisionProblem& p, const std::vector<int>& f);
bool is_m_stable(const DecisionProblem& p, const Reachability& reach,
                 const std::vector<int>& f);
bool is_w_stable(const DecisionProblem& p, const std::vector<int>& f);
bool is_w_stable(const DecisionProblem& p, const Reachability& reach,
                 const std::vector<int>& f);

/// Human-readable reason a checker rejects f, or empty when it accepts.
std::string reject_reason(const DecisionProblem& p, Concept kind,
                          const std::vector<int>& f,
                          int dense_threshold = kDefaultDenseThreshold);

/// Brute force over all non-empty subsets; throws ProblemTooLarge when n
/// exceeds Limits::brute_force_max_n.
Enumeration vnm_stable_sets(const DecisionProblem& p, const Limits& limits = {});

/// Stable sets of (X, closure(R)): one representative from every maximal
/// component. Streams in canonical order; total = product of the maximal
/// ground-set sizes.
Enumeration generalized_stable_sets(const DecisionProblem& p, const Limits& limits = {});

/// Non-empty unions of maximal ground sets. Falls back to the definitional
/// oracle if any emitted set fails its re-check (which the corpus tests show
/// never happens); throws ProblemTooLarge past the materialization budget.
Enumeration m_stable_sets(const DecisionProblem& p, const Limits& limits = {});

/// Non-empty sets with at most one member per maximal ground set and nothing
/// outside their union. Streams in canonical order. Never empty.
Enumeration w_stable_sets(const DecisionProblem& p, const Limits& limits = {});

/// Closed form for |w_stable_sets|: product over maximal ground sets of
/// (size + 1), minus one.
BigCount count_w_stable(const DecisionProblem& p);
BigCount count_w_stable(const MaximalFamily& mu);

}  // namespace stableset

#endif
