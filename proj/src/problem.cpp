#include "stableset/problem.hpp"

#include <algorithm>
#include <cstdio>

namespace stableset {

DecisionProblem::DecisionProblem(int n, std::vector<Edge> edges,
                                 std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (n_ < 1) {
    throw std::invalid_argument("a decision problem needs at least one alternative");
  }
  for (const auto& [u, v] : edges_) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
      throw std::out_of_range("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") references an id outside [0, " + std::to_string(n_) + ")");
    }
  }
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n_) {
    labels_.resize(n_);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  adjacency_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);  // edges are sorted, so rows come out ascending
  }
}

bool DecisionProblem::has_edge(int u, int v) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::string DecisionProblem::label(int id) const {
  if (!labels_.empty() && !labels_[id].empty()) return labels_[id];
  return std::to_string(id);
}

std::string DecisionProblem::digest() const {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
  auto mix = [&h](std::uint64_t word) {
    for (int i = 0; i < 8; ++i) {
      h ^= (word >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(n_));
  for (const auto& [u, v] : edges_) {
    mix((static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace stableset
