#include <doctest.h>

#include <algorithm>

#include "stableset/oracle.hpp"
#include "stableset/relation.hpp"

using namespace stableset;

namespace {
const DecisionProblem kCycle3(3, {{0, 1}, {1, 2}, {2, 0}});
const DecisionProblem kChain3(3, {{0, 1}, {1, 2}, {0, 2}});
}  // namespace

TEST_CASE("oracle enumerations on the stated examples") {
  OracleResult w = oracle_enumerate(kCycle3, Concept::w_stable);
  CHECK(w.sets == std::vector<std::vector<int>>{{0}, {1}, {2}});
  CHECK(w.subsets_examined == 7);

  OracleResult vnm = oracle_enumerate(kCycle3, Concept::vnm_stable);
  CHECK(vnm.sets.empty());
  CHECK(vnm.subsets_examined == 7);

  OracleResult m = oracle_enumerate(DecisionProblem(1, {{0, 0}}), Concept::m_stable);
  CHECK(m.sets == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("oracle results are deterministic and ordered by cardinality") {
  DecisionProblem p(4, {{0, 1}, {1, 2}, {2, 0}});
  OracleResult a = oracle_enumerate(p, Concept::w_stable);
  OracleResult b = oracle_enumerate(p, Concept::w_stable);
  CHECK(a.sets == b.sets);
  CHECK(a.subsets_examined == 15);
  for (std::size_t i = 1; i < a.sets.size(); ++i) {
    CHECK(a.sets[i - 1].size() <= a.sets[i].size());
  }
  CHECK(a.sets == std::vector<std::vector<int>>{{0}, {1}, {2}, {3}, {0, 3}, {1, 3}, {2, 3}});
}

TEST_CASE("minimal undominated sets on the stated examples") {
  CHECK(oracle_minimal_undominated(kChain3) == std::vector<std::vector<int>>{{0}});
  CHECK(oracle_minimal_undominated(kCycle3) == std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(oracle_minimal_undominated(DecisionProblem(2, {})) ==
        std::vector<std::vector<int>>{{0}, {1}});
}

TEST_CASE("union of minimal undominated sets matches the strict-closure maxima") {
  for (std::uint64_t mask = 0; mask < 512; ++mask) {
    std::vector<Edge> edges;
    for (int b = 0; b < 9; ++b) {
      if (mask >> b & 1) edges.emplace_back(b / 3, b % 3);
    }
    DecisionProblem p(3, std::move(edges));
    std::vector<int> u;
    for (const auto& d : oracle_minimal_undominated(p)) u.insert(u.end(), d.begin(), d.end());
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    CHECK(u == maximal_elements(p, strict_closure_dominance(p)));
  }
}

TEST_CASE("oracle rejects oversized problems and non-set concepts") {
  DecisionProblem big(21, {});
  CHECK_THROWS_AS(oracle_enumerate(big, Concept::w_stable), ProblemTooLarge);
  CHECK_THROWS_AS(oracle_minimal_undominated(big), ProblemTooLarge);
  CHECK_THROWS_AS(oracle_enumerate(kCycle3, Concept::core), std::invalid_argument);
}
