#ifndef STABLESET_RELATION_HPP
#define STABLESET_RELATION_HPP

#include <cstdint>
#include <vector>

#include "stableset/problem.hpp"

namespace stableset {

/// Row storage switches from bit-rows to sorted adjacency vectors above this
/// many alternatives (override per call, or with --dense-threshold on the CLI).
inline constexpr int kDefaultDenseThreshold = 4096;

/// An n x n boolean relation. Rows are bitsets when n <= dense_threshold and
/// sorted vectors otherwise; semantics are identical either way and both modes
/// must produce bit-identical results for every operation.
class Relation {
 public:
  explicit Relation(int n, int dense_threshold = kDefaultDenseThreshold);

  static Relation from_edges(int n, const std::vector<Edge>& edges,
                             int dense_threshold = kDefaultDenseThreshold);

  int size() const { return n_; }
  bool dense() const { return dense_; }

  bool test(int u, int v) const;
  void set(int u, int v);

  /// Members of row u, ascending.
  std::vector<int> row(int u) const;

  /// True when row u has no element in common with the sorted set `s`.
  bool row_disjoint(int u, const std::vector<int>& sorted_set) const;

  std::size_t pair_count() const;

  /// Least transitive relation containing this one (per-source DFS, so
  /// u relates to v iff a directed path of length >= 1 exists).
  Relation transitive_closure() const;

  /// Pairs (u, v) with u->v but not v->u.
  Relation asymmetric_part() const;

  /// Mode-independent semantic equality.
  friend bool operator==(const Relation& a, const Relation& b);

 private:
  int n_;
  bool dense_;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;        // dense: n_ rows of words_ blocks
  std::vector<std::vector<int>> sparse_;   // sparse: sorted rows

  friend class RowView;
};

/// Transitive closure of the dominance relation of a problem.
struct Reachability {
  Relation rel;
  int size() const { return rel.size(); }
  bool test(int u, int v) const { return rel.test(u, v); }
};

Reachability transitive_closure(const DecisionProblem& p,
                                int dense_threshold = kDefaultDenseThreshold);

enum class StrictKind {
  asymmetric_of_relation,  // P(R)
  asymmetric_of_closure,   // P(R-closure)
  closure_of_asymmetric,   // closure of P(R); not asymmetric in general
};

/// Strict (one-directional) part bookkeeping: which construction produced it.
struct StrictRelation {
  Relation rel;
  StrictKind kind;
};

StrictRelation asymmetric_part(const Relation& r, StrictKind kind);

/// P(R) of a problem's dominance relation.
StrictRelation strict_dominance(const DecisionProblem& p,
                                int dense_threshold = kDefaultDenseThreshold);

/// P(R-closure): asymmetric part of the transitive closure.
StrictRelation strict_closure_dominance(const DecisionProblem& p,
                                        int dense_threshold = kDefaultDenseThreshold);

/// closure(P(R)): transitive closure of the asymmetric part.
StrictRelation closed_strict_dominance(const DecisionProblem& p,
                                       int dense_threshold = kDefaultDenseThreshold);

/// { x : no y with strict y->x }. With strict = P(R) this is the core.
std::vector<int> maximal_elements(const DecisionProblem& p, const StrictRelation& strict);

/// True iff every ordered pair over s (including x with itself) is related by
/// the closure. A singleton {x} is a cycle only when x reaches itself.
bool is_r_cycle(const Reachability& reach, const std::vector<int>& s);
bool is_r_cycle(const DecisionProblem& p, const std::vector<int>& s);

}  // namespace stableset

#endif
