// Command-line front end: solve, check, count, witness, gen, export-dot,
// selftest. Exit codes: 0 success or accepted, 1 check rejected, 2 usage or
// parse error, 3 problem too large for the requested enumeration.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "stableset/io.hpp"
#include "stableset/oracle.hpp"
#include "stableset/selftest.hpp"
#include "stableset/solutions.hpp"
#include "stableset/topology.hpp"

namespace {

using namespace stableset;

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTooLarge = 3;

DecisionProblem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_problem(in);
}

std::vector<int> parse_id_set(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    std::size_t used = 0;
    int id = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument("bad id in set: " + token);
    out.push_back(id);
  }
  if (out.empty()) throw std::invalid_argument("--set needs at least one id");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("STABLESET_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

struct Cli {
  std::string file;
  std::string out_path;
  std::string json_path;
  std::string set_text;
  std::string concept_text = "w_stable";
  std::vector<std::string> concepts;
  Limits limits;
  bool no_timing = false;
  bool full_witness = false;
  std::string gen_kind = "erdos_digraph";
  int gen_n = 8;
  double gen_density = 0.3;
  std::uint64_t seed = default_seed();
  int selftest_n_max = 3;
  int selftest_random = 500;
};

int run(int argc, char** argv) {
  Cli cli;
  CLI::App app{"solution concepts of finite abstract decision problems"};
  app.require_subcommand(1);

  auto add_limits = [&](CLI::App* cmd) {
    cmd->add_option("--limit", cli.limits.limit, "max sets materialized per enumeration");
    cmd->add_option("--brute-max-n", cli.limits.brute_force_max_n,
                    "ceiling for 2^n subset scans");
    cmd->add_option("--dense-threshold", cli.limits.dense_threshold,
                    "bit-row storage up to this n, adjacency sets above");
  };

  CLI::App* solve = app.add_subcommand("solve", "compute solution concepts, emit a JSON report");
  solve->add_option("file", cli.file, "problem file")->required();
  solve->add_option("--concepts", cli.concepts,
                    "concepts to compute (default: all)")
      ->delimiter(',');
  solve->add_option("--json", cli.json_path, "write the report here instead of stdout");
  solve->add_flag("--no-timing", cli.no_timing, "omit timing for byte-stable output");
  add_limits(solve);

  CLI::App* check = app.add_subcommand("check", "test one set against a concept");
  check->add_option("file", cli.file, "problem file")->required();
  check->add_option("--set", cli.set_text, "comma-separated ids")->required();
  check->add_option("--concept", cli.concept_text, "concept to check against");
  add_limits(check);

  CLI::App* count = app.add_subcommand("count", "print the number of w-stable sets");
  count->add_option("file", cli.file, "problem file")->required();

  CLI::App* witness = app.add_subcommand(
      "witness", "build the excluded-set openness witness for every w-stable set");
  witness->add_option("file", cli.file, "problem file")->required();
  witness->add_option("--json", cli.json_path, "write the witness report here");
  witness->add_flag("--full", cli.full_witness, "include per-point verdicts in the JSON");
  add_limits(witness);

  CLI::App* gen = app.add_subcommand("gen", "write a generated problem file");
  gen->add_option("--kind", cli.gen_kind, "erdos_digraph | tournament | k_cycle | layered_dag");
  gen->add_option("--n", cli.gen_n, "alternatives")->required();
  gen->add_option("--density", cli.gen_density, "edge probability where applicable");
  gen->add_option("--seed", cli.seed, "RNG seed (default: STABLESET_SEED or 0)");
  gen->add_option("-o,--out", cli.out_path, "output path (default stdout)");

  CLI::App* dot = app.add_subcommand("export-dot", "emit a DOT drawing with component clusters");
  dot->add_option("file", cli.file, "problem file")->required();
  dot->add_option("--set", cli.set_text, "comma-separated ids to highlight");
  dot->add_option("-o,--out", cli.out_path, "output path (default stdout)");

  CLI::App* selftest = app.add_subcommand(
      "selftest", "fast paths vs the definitional oracle over exhaustive and random corpora");
  selftest->add_option("--n-max", cli.selftest_n_max, "exhaustive relation scan up to this n");
  selftest->add_option("--random", cli.selftest_random, "random corpus size");
  selftest->add_option("--seed", cli.seed, "corpus seed (default: STABLESET_SEED or 0)");
  add_limits(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (solve->parsed()) {
    SolveOptions options;
    options.concepts = cli.concepts;
    options.explicit_concepts = !cli.concepts.empty();
    options.limits = cli.limits;
    options.no_timing = cli.no_timing;
    nlohmann::json report = solve_report(load_problem(cli.file), options);
    write_output(cli.json_path, report.dump(2) + "\n");
    return kExitOk;
  }

  if (check->parsed()) {
    DecisionProblem p = load_problem(cli.file);
    std::vector<int> f = parse_id_set(cli.set_text);
    Concept kind = concept_from_name(cli.concept_text);
    std::string reason = reject_reason(p, kind, f, cli.limits.dense_threshold);
    if (reason.empty()) {
      std::cout << "ACCEPTED: the set is " << concept_name(kind) << "\n";
      return kExitOk;
    }
    std::cout << "REJECTED: " << reason << "\n";
    return kExitRejected;
  }

  if (count->parsed()) {
    std::cout << count_w_stable(load_problem(cli.file)).str() << "\n";
    return kExitOk;
  }

  if (witness->parsed()) {
    DecisionProblem p = load_problem(cli.file);
    WitnessReport report = verify_all_witnesses(p, cli.limits);
    nlohmann::json j = witness_report_json(p, report);
    if (cli.full_witness) {
      Enumeration sets = w_stable_sets(p, cli.limits);
      Reachability reach = transitive_closure(p, cli.limits.dense_threshold);
      nlohmann::json detail = nlohmann::json::array();
      for (const auto& s : sets.sets) detail.push_back(witness_json(build_witness(p, s.members, reach)));
      j["witnesses"] = std::move(detail);
    }
    if (!cli.json_path.empty()) write_output(cli.json_path, j.dump(2) + "\n");
    std::cout << "checked " << report.sets_checked << " w-stable set(s): "
              << (report.all_pass ? "all witnesses pass" : "WITNESS FAILURE") << "\n";
    return report.all_pass ? kExitOk : kExitRejected;
  }

  if (gen->parsed()) {
    DecisionProblem p = generate(gen_kind_from_name(cli.gen_kind), cli.gen_n,
                                 cli.gen_density, cli.seed);
    write_output(cli.out_path, to_problem_text(p));
    return kExitOk;
  }

  if (dot->parsed()) {
    DecisionProblem p = load_problem(cli.file);
    std::vector<int> highlight;
    if (!cli.set_text.empty()) highlight = parse_id_set(cli.set_text);
    std::string text = export_dot(p, contraction(p), cli.set_text.empty() ? nullptr : &highlight);
    write_output(cli.out_path, text);
    return kExitOk;
  }

  if (selftest->parsed()) {
    SelftestOptions options;
    options.n_max = cli.selftest_n_max;
    options.random_count = cli.selftest_random;
    options.seed = cli.seed;
    options.limits = cli.limits;
    SelftestResult result = run_selftest(options, std::cout);
    return result.ok() ? kExitOk : kExitRejected;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ProblemTooLarge& e) {
    std::cerr << "problem too large: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
