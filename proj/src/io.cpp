#include "stableset/io.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <cmath>
#include <random>
#include <sstream>

namespace stableset {

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool parse_int(const std::string& token, int& out) {
  try {
    std::size_t used = 0;
    long value = std::stol(token, &used);
    if (used != token.size() || value < INT_MIN || value > INT_MAX) return false;
    out = static_cast<int>(value);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

DecisionProblem parse_problem(std::istream& in) {
  int n = -1;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream line(strip_comment(raw));
    std::string first;
    if (!(line >> first)) continue;  // blank or comment-only

    if (n < 0) {
      if (first != "n") throw ParseError(line_no, "expected the header line `n <count>`");
      std::string count;
      if (!(line >> count) || !parse_int(count, n) || n < 1) {
        throw ParseError(line_no, "the alternative count must be a positive integer");
      }
      std::string extra;
      if (line >> extra) throw ParseError(line_no, "trailing tokens after the header");
      labels.assign(n, "");
      continue;
    }

    if (first == "label") {
      std::string id_token;
      int id;
      if (!(line >> id_token) || !parse_int(id_token, id)) {
        throw ParseError(line_no, "expected `label <id> <text>`");
      }
      if (id < 0 || id >= n) {
        throw ParseError(line_no, "label id " + std::to_string(id) + " outside [0, " +
                                      std::to_string(n) + ")");
      }
      std::string text;
      std::getline(line, text);
      auto start = text.find_first_not_of(" \t");
      labels[id] = start == std::string::npos ? "" : text.substr(start);
      continue;
    }

    int u, v;
    std::string second;
    if (!parse_int(first, u) || !(line >> second) || !parse_int(second, v)) {
      throw ParseError(line_no, "expected an edge line `<u> <v>`");
    }
    std::string extra;
    if (line >> extra) throw ParseError(line_no, "trailing tokens after the edge");
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError(line_no, "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                    ") outside [0, " + std::to_string(n) + ")");
    }
    edges.emplace_back(u, v);
  }
  if (n < 0) throw ParseError(line_no, "missing header line `n <count>`");
  const bool any_label = std::any_of(labels.begin(), labels.end(),
                                     [](const std::string& s) { return !s.empty(); });
  return DecisionProblem(n, std::move(edges), any_label ? std::move(labels) : std::vector<std::string>{});
}

DecisionProblem parse_problem(const std::string& text) {
  std::istringstream in(text);
  return parse_problem(in);
}

std::string to_problem_text(const DecisionProblem& p) {
  std::ostringstream out;
  out << "# <u> <v> means u dominates v\n";
  out << "n " << p.size() << "\n";
  if (p.has_labels()) {
    for (int i = 0; i < p.size(); ++i) {
      if (!p.labels()[i].empty()) out << "label " << i << " " << p.labels()[i] << "\n";
    }
  }
  for (const auto& [u, v] : p.edges()) out << u << " " << v << "\n";
  return out.str();
}

GenKind gen_kind_from_name(const std::string& name) {
  if (name == "erdos_digraph") return GenKind::erdos_digraph;
  if (name == "tournament") return GenKind::tournament;
  if (name == "k_cycle") return GenKind::k_cycle;
  if (name == "layered_dag") return GenKind::layered_dag;
  throw std::invalid_argument("unknown generator kind: " + name);
}

std::string gen_kind_name(GenKind kind) {
  switch (kind) {
    case GenKind::erdos_digraph: return "erdos_digraph";
    case GenKind::tournament: return "tournament";
    case GenKind::k_cycle: return "k_cycle";
    case GenKind::layered_dag: return "layered_dag";
  }
  return "unknown";
}

DecisionProblem generate(GenKind kind, int n, double density, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generators need n >= 1");
  const bool uses_density = kind == GenKind::erdos_digraph || kind == GenKind::layered_dag;
  if (uses_density && !(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("density must lie in [0, 1]");
  }

  std::mt19937_64 eng(seed);
  // Engine words mapped to [0, 1) by hand so output is identical across
  // standard libraries.
  auto coin = [&](double prob) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53 < prob;
  };

  std::vector<Edge> edges;
  switch (kind) {
    case GenKind::erdos_digraph:
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          if (u != v && coin(density)) edges.emplace_back(u, v);
        }
      }
      break;
    case GenKind::tournament:
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (eng() & 1) {
            edges.emplace_back(u, v);
          } else {
            edges.emplace_back(v, u);
          }
        }
      }
      break;
    case GenKind::k_cycle:
      for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
      break;
    case GenKind::layered_dag: {
      const int layers = std::max(2, static_cast<int>(std::lround(std::sqrt(n))));
      auto layer_of = [&](int v) {
        return static_cast<int>(static_cast<long long>(v) * layers / n);
      };
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          if (layer_of(u) < layer_of(v) && coin(density)) edges.emplace_back(u, v);
        }
      }
      break;
    }
  }
  return DecisionProblem(n, std::move(edges));
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string export_dot(const DecisionProblem& p, const Condensation& c,
                       const std::vector<int>* highlight) {
  std::vector<char> marked(p.size(), 0);
  if (highlight) {
    for (int x : *highlight) marked[x] = 1;
  }
  std::vector<char> maximal(c.components.size(), 1);
  for (const auto& [i, j] : c.edges) maximal[j] = 0;

  std::ostringstream out;
  out << "digraph problem {\n";
  out << "  // an edge from u to v reads: u dominates v\n";
  out << "  node [shape=circle];\n";
  for (const auto& comp : c.components) {
    out << "  subgraph cluster_" << comp.index << " {\n";
    out << "    label=\"C" << comp.index << (maximal[comp.index] ? "*" : "") << "\";\n";
    if (maximal[comp.index]) out << "    style=filled;\n    fillcolor=lightcyan;\n";
    for (int x : comp.members) {
      out << "    " << x << " [label=" << dot_quote(p.label(x));
      if (marked[x]) out << ", peripheries=2, style=filled, fillcolor=palegreen";
      out << "];\n";
    }
    out << "  }\n";
  }
  for (const auto& [u, v] : p.edges()) {
    out << "  " << u << " -> " << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

nlohmann::json sets_json(const std::vector<SolutionSet>& sets) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : sets) arr.push_back(s.members);
  return arr;
}

nlohmann::json enumeration_json(const Enumeration& e) {
  nlohmann::json j;
  j["sets"] = sets_json(e.sets);
  j["count"] = e.sets.size();
  j["total"] = e.total.str();
  j["truncated"] = e.truncated;
  j["verified_all"] = std::all_of(e.sets.begin(), e.sets.end(),
                                  [](const SolutionSet& s) { return s.verified; });
  return j;
}

nlohmann::json problem_json(const DecisionProblem& p) {
  nlohmann::json j;
  j["n"] = p.size();
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : p.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (p.has_labels()) {
    nlohmann::json labels = nlohmann::json::object();
    for (int i = 0; i < p.size(); ++i) {
      if (!p.labels()[i].empty()) labels[std::to_string(i)] = p.labels()[i];
    }
    j["labels"] = std::move(labels);
  }
  j["digest"] = p.digest();
  return j;
}

nlohmann::json condensation_json(const Condensation& c) {
  nlohmann::json j;
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& comp : c.components) comps.push_back(comp.members);
  j["components"] = std::move(comps);
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : c.edges) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  MaximalFamily mu = maximal_components(c);
  j["maximal_indices"] = mu.indices;
  return j;
}

nlohmann::json skipped_json(const std::string& reason) {
  nlohmann::json j;
  j["skipped"] = "problem-too-large";
  j["reason"] = reason;
  return j;
}

}  // namespace

const std::vector<std::string>& solve_tokens() {
  static const std::vector<std::string> tokens = {
      "core",     "schwartz", "condensation",       "vnm_stable", "generalized_stable",
      "m_stable", "w_stable", "w_stable-count",     "deb_variants",
  };
  return tokens;
}

nlohmann::json solve_report(const DecisionProblem& p, const SolveOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  std::vector<std::string> wanted = options.concepts.empty() ? solve_tokens() : options.concepts;
  for (const auto& token : wanted) {
    if (std::find(solve_tokens().begin(), solve_tokens().end(), token) == solve_tokens().end()) {
      throw std::invalid_argument("unknown concept token: " + token);
    }
  }
  auto selected = [&](const std::string& token) {
    return std::find(wanted.begin(), wanted.end(), token) != wanted.end();
  };

  nlohmann::json report;
  report["problem"] = problem_json(p);
  report["config"] = {
      {"concepts", wanted},
      {"limit", options.limits.limit},
      {"brute_force_max_n", options.limits.brute_force_max_n},
      {"dense_threshold", options.limits.dense_threshold},
  };

  nlohmann::json concepts = nlohmann::json::object();

  if (selected("core")) {
    SolutionSet c = core(p);
    concepts["core"] = {{"members", c.members}, {"verified", c.verified}};
  }

  std::optional<SolutionSet> schwartz;
  if (selected("schwartz")) {
    schwartz = schwartz_set(p);
  }

  if (selected("condensation")) {
    report["condensation"] = condensation_json(contraction(p));
  }

  if (selected("deb_variants")) {
    const bool defaulted = options.concepts.empty();
    if (defaulted && p.size() > options.variants_max_n) {
      concepts["deb_variants"] = skipped_json(
          "closure-based variants are skipped by default above n = " +
          std::to_string(options.variants_max_n) + "; request deb_variants explicitly");
    } else {
      SchwartzVariants v = schwartz_variants(p, options.limits.dense_threshold);
      concepts["deb_variants"] = {
          {"strict_of_closure", v.strict_of_closure},
          {"closure_of_strict", v.closure_of_strict},
          {"agree", v.agree},
      };
      if (schwartz) {
        // Independent cross-route: maximality under the strict closure.
        schwartz->verified = v.strict_of_closure == schwartz->members;
      }
    }
  }

  if (schwartz) {
    concepts["schwartz"] = {{"members", schwartz->members}, {"verified", schwartz->verified}};
  }

  auto run_enumeration = [&](const std::string& token, auto&& fn) {
    if (!selected(token)) return;
    try {
      concepts[token] = enumeration_json(fn());
    } catch (const ProblemTooLarge& e) {
      if (options.explicit_concepts) throw;
      concepts[token] = skipped_json(e.what());
    }
  };
  run_enumeration("vnm_stable", [&] { return vnm_stable_sets(p, options.limits); });
  run_enumeration("generalized_stable",
                  [&] { return generalized_stable_sets(p, options.limits); });
  run_enumeration("m_stable", [&] { return m_stable_sets(p, options.limits); });
  run_enumeration("w_stable", [&] { return w_stable_sets(p, options.limits); });

  if (selected("w_stable-count")) {
    concepts["w_stable_count"] = {{"total", count_w_stable(p).str()}};
  }

  report["concepts"] = std::move(concepts);
  if (!options.no_timing) {
    report["timing"] = {{"total_seconds",
                         std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                             .count()}};
  }
  return report;
}

nlohmann::json witness_json(const TopologyWitness& w) {
  nlohmann::json j;
  j["excluded_set"] = w.excluded_set;
  j["open_set_rule"] = w.open_set_rule;
  j["compact"] = w.compact;
  j["compact_reason"] = w.compact_reason;
  nlohmann::json points = nlohmann::json::array();
  for (const auto& v : w.per_point) {
    points.push_back({{"x", v.x},
                      {"strict_upper", v.strict_upper},
                      {"open", v.open()},
                      {"disjoint_from_excluded", v.disjoint_from_excluded},
                      {"whole_space", v.whole_space}});
  }
  j["per_point"] = std::move(points);
  j["passes"] = w.passes();
  return j;
}

nlohmann::json witness_report_json(const DecisionProblem& p, const WitnessReport& report) {
  nlohmann::json j;
  j["problem"] = problem_json(p);
  j["sets_checked"] = report.sets_checked;
  j["all_pass"] = report.all_pass;
  j["failures"] = report.failures;
  j["truncated"] = report.truncated;
  return j;
}

}  // namespace stableset
