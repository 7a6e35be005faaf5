#include "stableset/selftest.hpp"

#include <algorithm>
#include <ostream>

#include "stableset/io.hpp"
#include "stableset/oracle.hpp"
#include "stableset/relation.hpp"
#include "stableset/topology.hpp"

namespace stableset {

namespace {

std::vector<std::vector<int>> member_lists(const Enumeration& e) {
  std::vector<std::vector<int>> out;
  out.reserve(e.sets.size());
  for (const auto& s : e.sets) out.push_back(s.members);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> sorted_sets(std::vector<std::vector<int>> sets) {
  std::sort(sets.begin(), sets.end());
  return sets;
}

std::string describe(const DecisionProblem& p) {
  std::string out = "n=" + std::to_string(p.size()) + " edges={";
  bool first = true;
  for (const auto& [u, v] : p.edges()) {
    if (!first) out += ",";
    first = false;
    out += "(" + std::to_string(u) + "," + std::to_string(v) + ")";
  }
  return out + "}";
}

struct InstanceCheck {
  SelftestResult& result;
  const Limits& limits;

  void fail(const DecisionProblem& p, const std::string& what) {
    ++result.failures;
    if (result.messages.size() < 50) {
      result.messages.push_back(what + " on " + describe(p));
    }
  }

  void run(const DecisionProblem& p) {
    ++result.instances;
    Limits local = limits;
    local.limit = std::size_t{1} << 20;  // corpus problems are small; never truncate

    const Enumeration w_fast = w_stable_sets(p, local);
    const OracleResult w_ref = oracle_enumerate(p, Concept::w_stable, local.brute_force_max_n);
    if (w_fast.sets.empty()) fail(p, "w-stable enumeration came back empty");
    if (member_lists(w_fast) != sorted_sets(w_ref.sets)) {
      fail(p, "w-stable fast enumeration disagrees with the oracle");
    }
    if (count_w_stable(p) != BigCount(w_ref.sets.size())) {
      fail(p, "w-stable count formula disagrees with the oracle");
    }

    const Enumeration m_fast = m_stable_sets(p, local);
    const OracleResult m_ref = oracle_enumerate(p, Concept::m_stable, local.brute_force_max_n);
    if (member_lists(m_fast) != sorted_sets(m_ref.sets)) {
      fail(p, "m-stable fast enumeration disagrees with the oracle");
    }

    const Enumeration g_fast = generalized_stable_sets(p, local);
    const OracleResult g_ref =
        oracle_enumerate(p, Concept::generalized_stable, local.brute_force_max_n);
    if (member_lists(g_fast) != sorted_sets(g_ref.sets)) {
      fail(p, "generalized-stable fast enumeration disagrees with the oracle");
    }

    const Enumeration vnm = vnm_stable_sets(p, local);
    const OracleResult vnm_ref =
        oracle_enumerate(p, Concept::vnm_stable, local.brute_force_max_n);
    if (member_lists(vnm) != sorted_sets(vnm_ref.sets)) {
      fail(p, "stable-set brute force disagrees with the oracle");
    }

    // The Schwartz set through three more routes: maximal ground sets are the
    // library path, the strict closure and the minimal-undominated union are
    // independent.
    const SolutionSet schwartz = schwartz_set(p);
    const std::vector<int> deb =
        maximal_elements(p, strict_closure_dominance(p, local.dense_threshold));
    std::vector<int> gocha;
    for (const auto& d : oracle_minimal_undominated(p, local.brute_force_max_n)) {
      gocha.insert(gocha.end(), d.begin(), d.end());
    }
    std::sort(gocha.begin(), gocha.end());
    gocha.erase(std::unique(gocha.begin(), gocha.end()), gocha.end());
    if (schwartz.members != deb || schwartz.members != gocha) {
      fail(p, "schwartz routes disagree");
    }
    SchwartzVariants variants = schwartz_variants(p, local.dense_threshold);
    if (!variants.agree) ++result.variant_divergences;

    // Union of all w-stable sets = schwartz.
    std::vector<int> w_union;
    for (const auto& s : w_ref.sets) w_union.insert(w_union.end(), s.begin(), s.end());
    std::sort(w_union.begin(), w_union.end());
    w_union.erase(std::unique(w_union.begin(), w_union.end()), w_union.end());
    if (w_union != schwartz.members) {
      fail(p, "union of w-stable sets is not the schwartz set");
    }

    const WitnessReport witness = verify_all_witnesses(p, local);
    if (!witness.all_pass) fail(p, "an openness witness failed");
  }
};

}  // namespace

DecisionProblem corpus_problem(std::uint64_t seed, int index, int n_max) {
  const std::uint64_t salt =
      (seed ^ 0x9e3779b97f4a7c15ull) + 0x9e3779b97f4a7c15ull * (index + 1);
  const int n = 1 + index % n_max;
  static constexpr double kDensities[] = {0.02, 0.1, 0.2, 0.3, 0.5, 0.7, 0.9};
  const double density = kDensities[index % 7];
  switch (index % 6) {
    case 0:
    case 3:
      return generate(GenKind::erdos_digraph, n, density, salt);
    case 1:
      return generate(GenKind::tournament, n, 0.0, salt);
    case 2:
      return generate(GenKind::layered_dag, n, density, salt);
    case 4:
      return generate(GenKind::k_cycle, n, 0.0, salt);
    default:
      return generate(GenKind::erdos_digraph, n, 1.0 - density, salt);
  }
}

SelftestResult run_selftest(const SelftestOptions& options, std::ostream& log) {
  SelftestResult result;
  InstanceCheck check{result, options.limits};

  for (int n = 1; n <= std::min(options.n_max, 4); ++n) {
    const int bits = n * n;
    const std::uint64_t masks = std::uint64_t{1} << bits;
    log << "exhaustive n=" << n << ": " << masks << " relations\n";
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      std::vector<Edge> edges;
      for (int b = 0; b < bits; ++b) {
        if (mask >> b & 1) edges.emplace_back(b / n, b % n);
      }
      check.run(DecisionProblem(n, std::move(edges)));
    }
  }

  log << "random corpus: " << options.random_count << " instances, n <= "
      << options.random_n_max << ", seed " << options.seed << "\n";
  for (int i = 0; i < options.random_count; ++i) {
    check.run(corpus_problem(options.seed, i, options.random_n_max));
  }

  log << "instances: " << result.instances << ", failures: " << result.failures
      << ", schwartz variant divergences: " << result.variant_divergences << "\n";
  for (const auto& message : result.messages) log << "MISMATCH: " << message << "\n";
  return result;
}

}  // namespace stableset
