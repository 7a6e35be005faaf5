#ifndef STABLESET_SELFTEST_HPP
#define STABLESET_SELFTEST_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "stableset/problem.hpp"
#include "stableset/solutions.hpp"

namespace stableset {

struct SelftestOptions {
  int n_max = 3;                 // exhaustive relation scan up to this n (3 or 4)
  int random_count = 500;        // seeded random instances
  int random_n_max = 10;         // sizes stay oracle-friendly
  std::uint64_t seed = 0;
  Limits limits;
};

struct SelftestResult {
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::uint64_t variant_divergences = 0;  // closure-of-strict vs strict-of-closure
  std::vector<std::string> messages;      // one per failure
  bool ok() const { return failures == 0; }
};

/// A deterministic member of the seeded random corpus: generator kind, size
/// and density all derive from (seed, index).
DecisionProblem corpus_problem(std::uint64_t seed, int index, int n_max);

/// Checks the fast solution paths against the definitional oracle over the
/// exhaustive small-relation corpus plus the seeded random corpus, and the
/// openness witness over every w-stable set found.
SelftestResult run_selftest(const SelftestOptions& options, std::ostream& log);

}  // namespace stableset

#endif
