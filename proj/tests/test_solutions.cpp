#include <doctest.h>

#include <algorithm>

#include "stableset/io.hpp"
#include "stableset/oracle.hpp"
#include "stableset/solutions.hpp"

using namespace stableset;

namespace {

const DecisionProblem kCycle3(3, {{0, 1}, {1, 2}, {2, 0}});
const DecisionProblem kChain3(3, {{0, 1}, {1, 2}, {0, 2}});
const DecisionProblem kPath3(3, {{0, 1}, {1, 2}});
const DecisionProblem kTwoTwoCycles(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
const DecisionProblem kCyclePlusIsolated(4, {{0, 1}, {1, 2}, {2, 0}});

std::vector<std::vector<int>> members_of(const Enumeration& e) {
  std::vector<std::vector<int>> out;
  for (const auto& s : e.sets) out.push_back(s.members);
  return out;
}

std::vector<std::vector<int>> canonical(std::vector<std::vector<int>> sets) {
  std::sort(sets.begin(), sets.end());
  return sets;
}

DecisionProblem from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (int b = 0; b < n * n; ++b) {
    if (mask >> b & 1) edges.emplace_back(b / n, b % n);
  }
  return DecisionProblem(n, std::move(edges));
}

}  // namespace

TEST_CASE("core on the stated examples") {
  CHECK(core(kCycle3).members.empty());
  CHECK(core(kChain3).members == std::vector<int>{0});
  CHECK(core(DecisionProblem(2, {{0, 1}, {1, 0}})).members == std::vector<int>{0, 1});
  CHECK(core(kCycle3).verified);
}

TEST_CASE("schwartz set on the stated examples") {
  CHECK(schwartz_set(kCycle3).members == std::vector<int>{0, 1, 2});
  CHECK(schwartz_set(kChain3).members == std::vector<int>{0});
  CHECK(schwartz_set(kTwoTwoCycles).members == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("the two maximal-element routes to the schwartz set can diverge") {
  // Mutual pair {0,2} entered from outside at 2: the strict-closure route
  // drops 0, the closure-of-strict route keeps it.
  DecisionProblem p(3, {{2, 0}, {0, 2}, {1, 2}});
  SchwartzVariants v = schwartz_variants(p);
  CHECK(v.strict_of_closure == std::vector<int>{1});
  CHECK(v.closure_of_strict == std::vector<int>{0, 1});
  CHECK_FALSE(v.agree);
  CHECK(v.strict_of_closure == schwartz_set(p).members);

  SchwartzVariants w = schwartz_variants(kCycle3);
  CHECK(w.agree);
}

TEST_CASE("stable-set checker on the stated examples") {
  CHECK(is_vnm_stable(kPath3, {0, 2}));
  CHECK_FALSE(is_vnm_stable(kCycle3, {0}));
  CHECK(is_vnm_stable(DecisionProblem(3, {}), {0, 1, 2}));
}

TEST_CASE("stable-set enumeration on the stated examples") {
  CHECK(vnm_stable_sets(kCycle3).sets.empty());

  DecisionProblem square(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(members_of(vnm_stable_sets(square)) == std::vector<std::vector<int>>{{0, 2}, {1, 3}});

  CHECK(members_of(vnm_stable_sets(DecisionProblem(2, {}))) ==
        std::vector<std::vector<int>>{{0, 1}});
}

TEST_CASE("odd cycles have no stable set, even cycles have exactly two") {
  for (int k : {3, 5, 7}) {
    CHECK(vnm_stable_sets(generate(GenKind::k_cycle, k, 0, 0)).sets.empty());
  }
  for (int k : {4, 6}) {
    CHECK(vnm_stable_sets(generate(GenKind::k_cycle, k, 0, 0)).sets.size() == 2);
  }
}

TEST_CASE("generalized stable sets on the stated examples") {
  CHECK(members_of(generalized_stable_sets(kCycle3)) ==
        std::vector<std::vector<int>>{{0}, {1}, {2}});
  CHECK(members_of(generalized_stable_sets(kChain3)) == std::vector<std::vector<int>>{{0}});
  CHECK(members_of(generalized_stable_sets(kTwoTwoCycles)) ==
        std::vector<std::vector<int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(generalized_stable_sets(kTwoTwoCycles).total == 4);
}

TEST_CASE("m-stability checker on the stated examples") {
  CHECK(is_m_stable(kCycle3, {0, 1, 2}));
  CHECK_FALSE(is_m_stable(kCycle3, {0}));
  CHECK(is_m_stable(kChain3, {0}));
}

TEST_CASE("m-stable enumeration on the stated examples") {
  CHECK(members_of(m_stable_sets(kCycle3)) == std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(members_of(m_stable_sets(kTwoTwoCycles)) ==
        std::vector<std::vector<int>>{{0, 1}, {0, 1, 2, 3}, {2, 3}});
  CHECK(members_of(m_stable_sets(kChain3)) == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("w-stability checker on the stated examples") {
  CHECK(is_w_stable(kCycle3, {0}));
  CHECK_FALSE(is_w_stable(kCycle3, {0, 1}));
  CHECK_FALSE(is_w_stable(kChain3, {1}));
}

TEST_CASE("w-stable enumeration on the stated examples") {
  CHECK(members_of(w_stable_sets(kCycle3)) == std::vector<std::vector<int>>{{0}, {1}, {2}});
  CHECK(members_of(w_stable_sets(kChain3)) == std::vector<std::vector<int>>{{0}});
  CHECK(members_of(w_stable_sets(kCyclePlusIsolated)) ==
        std::vector<std::vector<int>>{{0}, {0, 3}, {1}, {1, 3}, {2}, {2, 3}, {3}});
}

TEST_CASE("w-stable count formula on the stated examples") {
  CHECK(count_w_stable(kCycle3) == 3);
  CHECK(count_w_stable(kCyclePlusIsolated) == 7);
  CHECK(count_w_stable(DecisionProblem(1, {{0, 0}})) == 1);
  // Wide products leave 64 bits without trouble.
  CHECK(count_w_stable(DecisionProblem(80, {})).str() ==
        BigCount((BigCount(1) << 80) - 1).str());
}

TEST_CASE("enumerations truncate in canonical order with exact totals") {
  Limits limits;
  limits.limit = 2;
  Enumeration w = w_stable_sets(kCyclePlusIsolated, limits);
  CHECK(members_of(w) == std::vector<std::vector<int>>{{0}, {0, 3}});
  CHECK(w.truncated);
  CHECK(w.total == 7);

  Enumeration m = m_stable_sets(kTwoTwoCycles, limits);
  CHECK(members_of(m) == std::vector<std::vector<int>>{{0, 1}, {0, 1, 2, 3}});
  CHECK(m.truncated);
  CHECK(m.total == 3);

  Enumeration g = generalized_stable_sets(kTwoTwoCycles, limits);
  CHECK(members_of(g) == std::vector<std::vector<int>>{{0, 2}, {0, 3}});
  CHECK(g.truncated);
  CHECK(g.total == 4);

  Enumeration vnm = vnm_stable_sets(kTwoTwoCycles, limits);
  CHECK(members_of(vnm) == std::vector<std::vector<int>>{{0, 2}, {0, 3}});
  CHECK(vnm.truncated);
  CHECK(vnm.total == 4);
}

TEST_CASE("budget guards raise problem-too-large") {
  Limits limits;
  limits.brute_force_max_n = 20;
  CHECK_THROWS_AS(vnm_stable_sets(DecisionProblem(21, {}), limits), ProblemTooLarge);
  // 24 isolated alternatives make 2^24 - 1 unions, past the default budget.
  limits.materialize_budget = std::size_t{1} << 21;
  CHECK_THROWS_AS(m_stable_sets(DecisionProblem(24, {}), limits), ProblemTooLarge);
  CHECK_NOTHROW(count_w_stable(DecisionProblem(24, {})));
}

TEST_CASE("every emitted set passes its own checker") {
  for (int i = 0; i < 40; ++i) {
    DecisionProblem p = generate(GenKind::erdos_digraph, 1 + i % 7, 0.35, 7000 + i);
    Reachability reach = transitive_closure(p);
    for (const auto& s : w_stable_sets(p).sets) {
      CHECK(s.verified);
      CHECK(is_w_stable(p, reach, s.members));
    }
    for (const auto& s : m_stable_sets(p).sets) CHECK(is_m_stable(p, reach, s.members));
    for (const auto& s : generalized_stable_sets(p).sets) {
      CHECK(is_generalized_stable(p, reach, s.members));
      // Picking one representative per maximal component is also w-stable.
      CHECK(is_w_stable(p, reach, s.members));
    }
    for (const auto& s : vnm_stable_sets(p).sets) CHECK(is_vnm_stable(p, s.members));
  }
}

TEST_CASE("fast enumerations agree with the oracle on every n=3 relation") {
  for (std::uint64_t mask = 0; mask < 512; ++mask) {
    DecisionProblem p = from_mask(3, mask);
    CHECK(canonical(members_of(w_stable_sets(p))) ==
          canonical(oracle_enumerate(p, Concept::w_stable).sets));
    CHECK(canonical(members_of(m_stable_sets(p))) ==
          canonical(oracle_enumerate(p, Concept::m_stable).sets));
    CHECK(canonical(members_of(generalized_stable_sets(p))) ==
          canonical(oracle_enumerate(p, Concept::generalized_stable).sets));
    CHECK(canonical(members_of(vnm_stable_sets(p))) ==
          canonical(oracle_enumerate(p, Concept::vnm_stable).sets));
  }
}

TEST_CASE("reject reasons name the violated clause") {
  CHECK(reject_reason(kCycle3, Concept::w_stable, {0}).empty());
  CHECK(reject_reason(kCycle3, Concept::w_stable, {0, 1}).find("internal") !=
        std::string::npos);
  CHECK(reject_reason(kChain3, Concept::w_stable, {1}).find("external") !=
        std::string::npos);
  CHECK(reject_reason(kCycle3, Concept::m_stable, {0}).find("outside") !=
        std::string::npos);
  CHECK(reject_reason(kCycle3, Concept::vnm_stable, {0}).find("external") !=
        std::string::npos);
  CHECK(reject_reason(kCycle3, Concept::schwartz, {0, 1, 2}).empty());
  CHECK_FALSE(reject_reason(kCycle3, Concept::core, {0}).empty());
}

TEST_CASE("concept names round-trip") {
  for (Concept c : {Concept::core, Concept::schwartz, Concept::vnm_stable,
                    Concept::generalized_stable, Concept::m_stable, Concept::w_stable}) {
    CHECK(concept_from_name(concept_name(c)) == c);
  }
  CHECK_THROWS_AS(concept_from_name("nope"), std::invalid_argument);
}
