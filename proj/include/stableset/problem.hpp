#ifndef STABLESET_PROBLEM_HPP
#define STABLESET_PROBLEM_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stableset {

/// Thrown when an enumeration or brute-force request exceeds its budget.
struct ProblemTooLarge : std::runtime_error {
  explicit ProblemTooLarge(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by parse_problem; line is 1-based.
struct ParseError : std::runtime_error {
  ParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
  int line;
};

using Edge = std::pair<int, int>;

/// A finite abstract decision problem: alternatives 0..n-1 and a dominance
/// relation given as ordered pairs (u, v), read "u dominates v". Immutable
/// after construction; edges are stored sorted and deduplicated. Self-pairs
/// are allowed.
class DecisionProblem {
 public:
  DecisionProblem(int n, std::vector<Edge> edges,
                  std::vector<std::string> labels = {});

  int size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(int u, int v) const;

  /// Out-neighbours of u, ascending.
  const std::vector<int>& successors(int u) const { return adjacency_[u]; }

  bool has_labels() const { return !labels_.empty(); }
  /// Display label for id (the id itself when no label was given).
  std::string label(int id) const;
  const std::vector<std::string>& labels() const { return labels_; }

  /// Stable FNV-1a hash of (n, sorted edges), as a 16-char hex string.
  std::string digest() const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::string> labels_;
};

}  // namespace stableset

#endif
