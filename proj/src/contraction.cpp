#include "stableset/contraction.hpp"

#include <algorithm>

namespace stableset {

namespace {

// Iterative Tarjan. Returns an arbitrary component id per vertex plus the
// member lists; callers canonicalize the ordering.
struct TarjanState {
  std::vector<std::vector<int>> members;
  std::vector<int> component_of;
};

TarjanState tarjan(const DecisionProblem& p) {
  const int n = p.size();
  constexpr int kUnvisited = -1;
  std::vector<int> index(n, kUnvisited), lowlink(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<int> scc_stack;
  TarjanState out;
  out.component_of.assign(n, -1);

  struct Frame {
    int v;
    std::size_t next_edge;
  };
  std::vector<Frame> call_stack;
  int next_index = 0;

  for (int root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call_stack.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    scc_stack.push_back(root);
    on_stack[root] = 1;

    while (!call_stack.empty()) {
      Frame& frame = call_stack.back();
      const auto& succ = p.successors(frame.v);
      if (frame.next_edge < succ.size()) {
        int w = succ[frame.next_edge++];
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = next_index++;
          scc_stack.push_back(w);
          on_stack[w] = 1;
          call_stack.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[frame.v] = std::min(lowlink[frame.v], index[w]);
        }
      } else {
        int v = frame.v;
        call_stack.pop_back();
        if (!call_stack.empty()) {
          lowlink[call_stack.back().v] = std::min(lowlink[call_stack.back().v], lowlink[v]);
        }
        if (lowlink[v] == index[v]) {
          std::vector<int> comp;
          int w;
          do {
            w = scc_stack.back();
            scc_stack.pop_back();
            on_stack[w] = 0;
            out.component_of[w] = static_cast<int>(out.members.size());
            comp.push_back(w);
          } while (w != v);
          out.members.push_back(std::move(comp));
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<StrongComponent> strong_components(const DecisionProblem& p) {
  TarjanState state = tarjan(p);
  for (auto& comp : state.members) std::sort(comp.begin(), comp.end());
  std::sort(state.members.begin(), state.members.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::vector<StrongComponent> out;
  out.reserve(state.members.size());
  for (std::size_t i = 0; i < state.members.size(); ++i) {
    out.push_back({static_cast<int>(i), std::move(state.members[i])});
  }
  return out;
}

Condensation contraction(const DecisionProblem& p) {
  Condensation c;
  c.components = strong_components(p);
  c.component_of.assign(p.size(), -1);
  for (const auto& comp : c.components) {
    for (int x : comp.members) c.component_of[x] = comp.index;
  }
  for (const auto& [u, v] : p.edges()) {
    int i = c.component_of[u], j = c.component_of[v];
    if (i != j) c.edges.emplace_back(i, j);
  }
  std::sort(c.edges.begin(), c.edges.end());
  c.edges.erase(std::unique(c.edges.begin(), c.edges.end()), c.edges.end());
  return c;
}

MaximalFamily maximal_components(const Condensation& c) {
  std::vector<char> has_incoming(c.components.size(), 0);
  for (const auto& [i, j] : c.edges) has_incoming[j] = 1;
  MaximalFamily out;
  for (const auto& comp : c.components) {
    if (!has_incoming[comp.index]) {
      out.indices.push_back(comp.index);
      out.ground_sets.push_back(comp.members);
    }
  }
  return out;
}

bool is_strongly_connected(const DecisionProblem& p) {
  // One component covers all pairs of distinct alternatives; a closure from
  // any x back to itself then exists whenever n >= 2. A lone alternative
  // needs its own loop.
  if (p.size() == 1) return p.has_edge(0, 0);
  return strong_components(p).size() == 1;
}

}  // namespace stableset
