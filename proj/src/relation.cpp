#include "stableset/relation.hpp"

#include <algorithm>
#include <bit>

namespace stableset {

Relation::Relation(int n, int dense_threshold) : n_(n), dense_(n <= dense_threshold) {
  if (n < 0) throw std::invalid_argument("relation size must be non-negative");
  if (dense_) {
    words_ = (n_ + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
  } else {
    sparse_.assign(n_, {});
  }
}

Relation Relation::from_edges(int n, const std::vector<Edge>& edges, int dense_threshold) {
  Relation r(n, dense_threshold);
  for (const auto& [u, v] : edges) r.set(u, v);
  if (!r.dense_) {
    for (auto& row : r.sparse_) {
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
    }
  }
  return r;
}

bool Relation::test(int u, int v) const {
  if (dense_) {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  return std::binary_search(sparse_[u].begin(), sparse_[u].end(), v);
}

void Relation::set(int u, int v) {
  if (dense_) {
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
  } else {
    auto& row = sparse_[u];
    auto it = std::lower_bound(row.begin(), row.end(), v);
    if (it == row.end() || *it != v) row.insert(it, v);
  }
}

std::vector<int> Relation::row(int u) const {
  if (!dense_) return sparse_[u];
  std::vector<int> out;
  const std::uint64_t* r = bits_.data() + static_cast<std::size_t>(u) * words_;
  for (int w = 0; w < words_; ++w) {
    std::uint64_t word = r[w];
    while (word) {
      out.push_back(64 * w + std::countr_zero(word));
      word &= word - 1;
    }
  }
  return out;
}

bool Relation::row_disjoint(int u, const std::vector<int>& sorted_set) const {
  for (int v : sorted_set) {
    if (test(u, v)) return false;
  }
  return true;
}

std::size_t Relation::pair_count() const {
  std::size_t total = 0;
  if (dense_) {
    for (std::uint64_t w : bits_) total += std::popcount(w);
  } else {
    for (const auto& row : sparse_) total += row.size();
  }
  return total;
}

Relation Relation::transitive_closure() const {
  Relation out(n_, dense_ ? n_ : 0);
  // Per-source DFS over the adjacency rows: O(n * (n + m)).
  std::vector<int> stack;
  std::vector<char> seen(n_, 0);
  std::vector<int> touched;
  for (int u = 0; u < n_; ++u) {
    stack.clear();
    touched.clear();
    auto push = [&](int v) {
      if (!seen[v]) {
        seen[v] = 1;
        touched.push_back(v);
        stack.push_back(v);
      }
    };
    for (int v : row(u)) push(v);
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      for (int v : row(w)) push(v);
    }
    std::sort(touched.begin(), touched.end());
    for (int v : touched) {
      out.set(u, v);
      seen[v] = 0;
    }
  }
  return out;
}

Relation Relation::asymmetric_part() const {
  Relation out(n_, dense_ ? n_ : 0);
  for (int u = 0; u < n_; ++u) {
    for (int v : row(u)) {
      if (!test(v, u)) out.set(u, v);
    }
  }
  return out;
}

bool operator==(const Relation& a, const Relation& b) {
  if (a.n_ != b.n_) return false;
  for (int u = 0; u < a.n_; ++u) {
    if (a.row(u) != b.row(u)) return false;
  }
  return true;
}

Reachability transitive_closure(const DecisionProblem& p, int dense_threshold) {
  return Reachability{Relation::from_edges(p.size(), p.edges(), dense_threshold).transitive_closure()};
}

StrictRelation asymmetric_part(const Relation& r, StrictKind kind) {
  return StrictRelation{r.asymmetric_part(), kind};
}

StrictRelation strict_dominance(const DecisionProblem& p, int dense_threshold) {
  return asymmetric_part(Relation::from_edges(p.size(), p.edges(), dense_threshold),
                         StrictKind::asymmetric_of_relation);
}

StrictRelation strict_closure_dominance(const DecisionProblem& p, int dense_threshold) {
  return asymmetric_part(transitive_closure(p, dense_threshold).rel,
                         StrictKind::asymmetric_of_closure);
}

StrictRelation closed_strict_dominance(const DecisionProblem& p, int dense_threshold) {
  return StrictRelation{strict_dominance(p, dense_threshold).rel.transitive_closure(),
                        StrictKind::closure_of_asymmetric};
}

std::vector<int> maximal_elements(const DecisionProblem& p, const StrictRelation& strict) {
  const int n = p.size();
  std::vector<char> dominated(n, 0);
  for (int y = 0; y < n; ++y) {
    for (int x : strict.rel.row(y)) dominated[x] = 1;
  }
  std::vector<int> out;
  for (int x = 0; x < n; ++x) {
    if (!dominated[x]) out.push_back(x);
  }
  return out;
}

bool is_r_cycle(const Reachability& reach, const std::vector<int>& s) {
  if (s.empty()) throw std::invalid_argument("an R-cycle is a non-empty set");
  for (int x : s) {
    for (int y : s) {
      if (!reach.test(x, y)) return false;
    }
  }
  return true;
}

bool is_r_cycle(const DecisionProblem& p, const std::vector<int>& s) {
  return is_r_cycle(transitive_closure(p), s);
}

}  // namespace stableset
