#include "stableset/oracle.hpp"

#include <algorithm>
#include <chrono>

namespace stableset {

namespace {

// Warshall's algorithm on a plain boolean matrix. Deliberately a different
// closure route from the library's per-source DFS.
std::vector<char> closure_matrix(const DecisionProblem& p) {
  const int n = p.size();
  std::vector<char> reach(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [u, v] : p.edges()) reach[u * n + v] = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!reach[i * n + k]) continue;
      for (int j = 0; j < n; ++j) {
        if (reach[k * n + j]) reach[i * n + j] = 1;
      }
    }
  }
  return reach;
}

// Literal clause checks. f and the complement are given as membership masks.

bool vnm_ok(const DecisionProblem& p, const std::vector<int>& f,
            const std::vector<char>& in_f) {
  for (int x : f) {
    for (int y : f) {
      if (x != y && p.has_edge(x, y)) return false;  // internal stability
    }
  }
  for (int z = 0; z < p.size(); ++z) {
    if (in_f[z]) continue;
    bool covered = false;
    for (int x : f) {
      if (p.has_edge(x, z)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;  // external stability
  }
  return true;
}

bool vnm_closure_ok(const DecisionProblem& p, const std::vector<char>& reach,
                    const std::vector<int>& f, const std::vector<char>& in_f) {
  const int n = p.size();
  for (int x : f) {
    for (int y : f) {
      if (x != y && reach[x * n + y]) return false;
    }
  }
  for (int z = 0; z < n; ++z) {
    if (in_f[z]) continue;
    bool covered = false;
    for (int x : f) {
      if (reach[x * n + z]) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool m_ok(const DecisionProblem& p, const std::vector<char>& reach,
          const std::vector<int>& f, const std::vector<char>& in_f) {
  const int n = p.size();
  for (int x : f) {
    for (int y : f) {
      if (reach[x * n + y] && !reach[y * n + x]) return false;
    }
  }
  for (int x : f) {
    for (int y = 0; y < n; ++y) {
      if (!in_f[y] && reach[y * n + x]) return false;
    }
  }
  return true;
}

bool w_ok(const DecisionProblem& p, const std::vector<char>& reach,
          const std::vector<int>& f, const std::vector<char>& in_f) {
  const int n = p.size();
  for (int x : f) {
    for (int y : f) {
      if (x != y && reach[x * n + y]) return false;
    }
  }
  for (int x : f) {
    for (int y = 0; y < n; ++y) {
      if (!in_f[y] && reach[y * n + x] && !reach[x * n + y]) return false;
    }
  }
  return true;
}

// Calls visit(subset) for every k-subset of 0..n-1, k = 1..n, lexicographic
// within each cardinality.
template <typename Visit>
void for_each_subset_by_cardinality(int n, Visit visit) {
  std::vector<int> pick;
  for (int k = 1; k <= n; ++k) {
    pick.assign(k, 0);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      visit(pick);
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
}

}  // namespace

OracleResult oracle_enumerate(const DecisionProblem& p, Concept kind, int max_n) {
  if (p.size() > max_n) {
    throw ProblemTooLarge("oracle enumeration needs 2^" + std::to_string(p.size()) +
                          " subsets; the cap is n <= " + std::to_string(max_n));
  }
  if (kind == Concept::core || kind == Concept::schwartz) {
    throw std::invalid_argument("oracle_enumerate handles the stable-set concepts");
  }
  const auto started = std::chrono::steady_clock::now();
  OracleResult out;
  out.kind = kind;

  const std::vector<char> reach = closure_matrix(p);
  std::vector<char> in_f(p.size(), 0);
  for_each_subset_by_cardinality(p.size(), [&](const std::vector<int>& f) {
    ++out.subsets_examined;
    for (int x : f) in_f[x] = 1;
    bool ok = false;
    switch (kind) {
      case Concept::vnm_stable:
        ok = vnm_ok(p, f, in_f);
        break;
      case Concept::generalized_stable:
        ok = vnm_closure_ok(p, reach, f, in_f);
        break;
      case Concept::m_stable:
        ok = m_ok(p, reach, f, in_f);
        break;
      case Concept::w_stable:
        ok = w_ok(p, reach, f, in_f);
        break;
      default:
        break;
    }
    if (ok) out.sets.push_back(f);
    for (int x : f) in_f[x] = 0;
  });

  out.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return out;
}

std::vector<std::vector<int>> oracle_minimal_undominated(const DecisionProblem& p,
                                                         int max_n) {
  if (p.size() > max_n || p.size() > 62) {
    throw ProblemTooLarge("oracle enumeration needs 2^" + std::to_string(p.size()) +
                          " subsets; the cap is n <= " + std::to_string(max_n));
  }
  // D is undominated iff every member's dominators already lie in D.
  std::vector<std::uint64_t> dominators(p.size(), 0);
  for (const auto& [u, v] : p.edges()) dominators[v] |= std::uint64_t{1} << u;

  std::vector<std::vector<int>> minimal;
  std::vector<std::uint64_t> minimal_masks;
  for_each_subset_by_cardinality(p.size(), [&](const std::vector<int>& d) {
    std::uint64_t d_mask = 0;
    for (int x : d) d_mask |= std::uint64_t{1} << x;
    for (int x : d) {
      if (dominators[x] & ~d_mask) return;
    }
    // Cardinality order: d is minimal iff no already-found set is inside it.
    for (std::uint64_t m : minimal_masks) {
      if ((m & d_mask) == m) return;
    }
    minimal.push_back(d);
    minimal_masks.push_back(d_mask);
  });
  return minimal;
}

}  // namespace stableset
