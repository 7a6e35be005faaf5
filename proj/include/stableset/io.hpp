#ifndef STABLESET_IO_HPP
#define STABLESET_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stableset/contraction.hpp"
#include "stableset/problem.hpp"
#include "stableset/solutions.hpp"
#include "stableset/topology.hpp"

namespace stableset {

// Problem file grammar (one statement per line, '#' starts a comment):
//   n <count>            header, required first
//   label <id> <text>    optional display label
//   <u> <v>              u dominates v
// Ids must lie in [0, n); duplicate edge lines collapse to one pair.

DecisionProblem parse_problem(std::istream& in);
DecisionProblem parse_problem(const std::string& text);

/// Canonical text form: header, labels, then sorted edges.
std::string to_problem_text(const DecisionProblem& p);

enum class GenKind { erdos_digraph, tournament, k_cycle, layered_dag };

GenKind gen_kind_from_name(const std::string& name);
std::string gen_kind_name(GenKind kind);

/// Deterministic function of (kind, n, density, seed). density is ignored by
/// tournament and k_cycle. Throws std::invalid_argument on bad parameters.
DecisionProblem generate(GenKind kind, int n, double density, std::uint64_t seed);

/// DOT digraph with one cluster per strong component. Maximal-component
/// clusters are filled; highlighted alternatives get a double border.
std::string export_dot(const DecisionProblem& p, const Condensation& c,
                       const std::vector<int>* highlight = nullptr);

/// Concept/section tokens accepted by solve reports, e.g. "w_stable",
/// "w_stable-count", "condensation", "deb_variants".
const std::vector<std::string>& solve_tokens();

struct SolveOptions {
  std::vector<std::string> concepts;  // empty -> all tokens
  bool explicit_concepts = false;     // explicit requests propagate ProblemTooLarge
  Limits limits;
  bool no_timing = true;
  int variants_max_n = 256;  // ceiling for closure-based variants when defaulted
};

/// The full JSON report for a problem. With explicit_concepts, a concept over
/// its budget throws; otherwise it is reported as skipped.
nlohmann::json solve_report(const DecisionProblem& p, const SolveOptions& options);

nlohmann::json witness_report_json(const DecisionProblem& p, const WitnessReport& report);
nlohmann::json witness_json(const TopologyWitness& w);

}  // namespace stableset

#endif
