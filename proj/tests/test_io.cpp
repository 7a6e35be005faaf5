#include <doctest.h>

#include <algorithm>

#include "stableset/contraction.hpp"
#include "stableset/io.hpp"

using namespace stableset;

TEST_CASE("problem files parse on the stated examples") {
  DecisionProblem cycle = parse_problem("n 3\n0 1\n1 2\n2 0\n");
  CHECK(cycle.size() == 3);
  CHECK(cycle.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});

  DecisionProblem dedup = parse_problem("n 2\n0 1\n0 1\n");
  CHECK(dedup.edges() == std::vector<Edge>{{0, 1}});

  CHECK_THROWS_AS(parse_problem("n 2\n0 5\n"), ParseError);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_problem("n 3\n0 1\n0 9\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
  try {
    parse_problem("# only a comment\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("header") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_problem("0 1\n"), ParseError);         // missing header
  CHECK_THROWS_AS(parse_problem("n 0\n"), ParseError);         // empty ground set
  CHECK_THROWS_AS(parse_problem("n 2\n0 1 2\n"), ParseError);  // arity
  CHECK_THROWS_AS(parse_problem("n 2\nlabel 7 x\n"), ParseError);
}

TEST_CASE("comments, blank lines and labels are handled") {
  DecisionProblem p = parse_problem(
      "# horses\nn 2\n\nlabel 0 Alpha Prime\nlabel 1 Beta\n0 1 # trailing\n");
  CHECK(p.has_labels());
  CHECK(p.label(0) == "Alpha Prime");
  CHECK(p.label(1) == "Beta");
  CHECK(p.edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("text round trip preserves the problem") {
  DecisionProblem p = generate(GenKind::erdos_digraph, 9, 0.4, 77);
  DecisionProblem q = parse_problem(to_problem_text(p));
  CHECK(p.size() == q.size());
  CHECK(p.edges() == q.edges());
  CHECK(p.digest() == q.digest());
}

TEST_CASE("generators match their contracts") {
  DecisionProblem cycle = generate(GenKind::k_cycle, 3, 0, 9);
  CHECK(cycle.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});
  CHECK(generate(GenKind::k_cycle, 1, 0, 0).edges() == std::vector<Edge>{{0, 0}});

  DecisionProblem t = generate(GenKind::tournament, 5, 0, 123);
  CHECK(t.edge_count() == 10);
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) {
      CHECK((t.has_edge(u, v) != t.has_edge(v, u)));
    }
  }

  DecisionProblem a = generate(GenKind::erdos_digraph, 8, 0.3, 42);
  DecisionProblem b = generate(GenKind::erdos_digraph, 8, 0.3, 42);
  CHECK(a.edges() == b.edges());
  CHECK(a.edges() != generate(GenKind::erdos_digraph, 8, 0.3, 43).edges());

  DecisionProblem dag = generate(GenKind::layered_dag, 12, 0.5, 7);
  CHECK(strong_components(dag).size() == 12);  // acyclic by construction

  CHECK_THROWS_AS(generate(GenKind::erdos_digraph, 4, 1.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(generate(GenKind::erdos_digraph, 0, 0.5, 0), std::invalid_argument);
  CHECK(gen_kind_from_name("tournament") == GenKind::tournament);
  CHECK_THROWS_AS(gen_kind_from_name("moon"), std::invalid_argument);
}

TEST_CASE("dot export shows clusters, edges and highlights") {
  DecisionProblem cycle = parse_problem("n 3\n0 1\n1 2\n2 0\n");
  std::string dot = export_dot(cycle, contraction(cycle));
  CHECK(dot.find("subgraph cluster_0") != std::string::npos);
  CHECK(dot.find("subgraph cluster_1") == std::string::npos);
  CHECK(dot.find("0 -> 1;") != std::string::npos);
  CHECK(dot.find("C0*") != std::string::npos);  // the lone component is maximal

  DecisionProblem chain(3, {{0, 1}, {1, 2}, {0, 2}});
  std::vector<int> highlight{0};
  std::string marked = export_dot(chain, contraction(chain), &highlight);
  CHECK(marked.find("peripheries=2") != std::string::npos);
  CHECK(marked.find("cluster_2") != std::string::npos);

  DecisionProblem loose(3, {});
  std::string no_edges = export_dot(loose, contraction(loose));
  CHECK(no_edges.find("->") == std::string::npos);

  // Stable under fixed input.
  CHECK(export_dot(cycle, contraction(cycle)) == dot);
}

TEST_CASE("solve reports are deterministic and echo a parsable problem") {
  DecisionProblem p = parse_problem("n 4\n0 1\n1 2\n2 0\n");
  SolveOptions options;
  options.no_timing = true;
  nlohmann::json a = solve_report(p, options);
  nlohmann::json b = solve_report(p, options);
  CHECK(a.dump() == b.dump());
  CHECK_FALSE(a.contains("timing"));

  // Round trip: the echoed problem reproduces the digest.
  std::vector<Edge> edges;
  for (const auto& e : a["problem"]["edges"]) edges.emplace_back(e[0], e[1]);
  DecisionProblem echoed(a["problem"]["n"], std::move(edges));
  CHECK(echoed.digest() == a["problem"]["digest"]);

  options.no_timing = false;
  CHECK(solve_report(p, options).contains("timing"));
}

TEST_CASE("solve reports carry the expected concept payloads") {
  DecisionProblem p = parse_problem("n 4\n0 1\n1 2\n2 0\n");
  SolveOptions options;
  nlohmann::json r = solve_report(p, options);

  CHECK(r["concepts"]["w_stable"]["count"] == 7);
  CHECK(r["concepts"]["w_stable"]["total"] == "7");
  CHECK(r["concepts"]["w_stable"]["truncated"] == false);
  CHECK(r["concepts"]["w_stable"]["verified_all"] == true);
  CHECK(r["concepts"]["w_stable_count"]["total"] == "7");
  CHECK(r["concepts"]["schwartz"]["members"] == std::vector<int>({0, 1, 2, 3}));
  CHECK(r["concepts"]["schwartz"]["verified"] == true);
  CHECK(r["concepts"]["deb_variants"]["agree"] == true);
  CHECK(r["condensation"]["components"].size() == 2);
  CHECK(r["condensation"]["maximal_indices"] == std::vector<int>({0, 1}));

  SUBCASE("explicit oversized requests propagate") {
    DecisionProblem big = generate(GenKind::erdos_digraph, 25, 0.2, 5);
    SolveOptions explicit_options;
    explicit_options.concepts = {"vnm_stable"};
    explicit_options.explicit_concepts = true;
    CHECK_THROWS_AS(solve_report(big, explicit_options), ProblemTooLarge);

    SolveOptions defaulted;
    nlohmann::json skipped = solve_report(big, defaulted);
    CHECK(skipped["concepts"]["vnm_stable"]["skipped"] == "problem-too-large");
    CHECK(skipped["concepts"]["w_stable"].contains("sets"));
  }

  SUBCASE("unknown tokens are rejected") {
    SolveOptions bad;
    bad.concepts = {"w_stable", "wat"};
    CHECK_THROWS_AS(solve_report(p, bad), std::invalid_argument);
  }
}

TEST_CASE("witness reports serialize") {
  DecisionProblem p = parse_problem("n 3\n0 1\n1 2\n2 0\n");
  WitnessReport report = verify_all_witnesses(p);
  nlohmann::json j = witness_report_json(p, report);
  CHECK(j["sets_checked"] == 3);
  CHECK(j["all_pass"] == true);
  CHECK(j["problem"]["digest"] == p.digest());

  TopologyWitness w = build_witness(p, {0});
  nlohmann::json detail = witness_json(w);
  CHECK(detail["passes"] == true);
  CHECK(detail["per_point"].size() == 3);
  CHECK(detail["compact"] == true);
}
