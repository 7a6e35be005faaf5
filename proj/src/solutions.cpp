#include "stableset/solutions.hpp"

#include <algorithm>
#include <stdexcept>

#include "stableset/oracle.hpp"

namespace stableset {

std::string concept_name(Concept c) {
  switch (c) {
    case Concept::core: return "core";
    case Concept::schwartz: return "schwartz";
    case Concept::vnm_stable: return "vnm_stable";
    case Concept::generalized_stable: return "generalized_stable";
    case Concept::m_stable: return "m_stable";
    case Concept::w_stable: return "w_stable";
  }
  return "unknown";
}

Concept concept_from_name(const std::string& name) {
  if (name == "core") return Concept::core;
  if (name == "schwartz") return Concept::schwartz;
  if (name == "vnm_stable") return Concept::vnm_stable;
  if (name == "generalized_stable") return Concept::generalized_stable;
  if (name == "m_stable") return Concept::m_stable;
  if (name == "w_stable") return Concept::w_stable;
  throw std::invalid_argument("unknown concept: " + name);
}

SolutionSet core(const DecisionProblem& p) {
  return SolutionSet{Concept::core, maximal_elements(p, strict_dominance(p)), true};
}

SolutionSet schwartz_set(const DecisionProblem& p) {
  MaximalFamily mu = maximal_components(contraction(p));
  std::vector<int> members;
  for (const auto& ground : mu.ground_sets) {
    members.insert(members.end(), ground.begin(), ground.end());
  }
  std::sort(members.begin(), members.end());
  return SolutionSet{Concept::schwartz, std::move(members), false};
}

SchwartzVariants schwartz_variants(const DecisionProblem& p, int dense_threshold) {
  SchwartzVariants out;
  out.strict_of_closure = maximal_elements(p, strict_closure_dominance(p, dense_threshold));
  // Maximality is read through the asymmetric part, so take P of the closed
  // strict relation before scanning columns.
  StrictRelation closed = closed_strict_dominance(p, dense_threshold);
  StrictRelation strict_of_closed{closed.rel.asymmetric_part(), closed.kind};
  out.closure_of_strict = maximal_elements(p, strict_of_closed);
  out.agree = out.strict_of_closure == out.closure_of_strict;
  return out;
}

namespace {

std::vector<char> membership_mask(int n, const std::vector<int>& f) {
  std::vector<char> mask(n, 0);
  for (int x : f) mask[x] = 1;
  return mask;
}

void require_valid_subset(const DecisionProblem& p, const std::vector<int>& f) {
  if (f.empty()) throw std::invalid_argument("stable-set checkers take a non-empty set");
  for (int x : f) {
    if (x < 0 || x >= p.size()) {
      throw std::out_of_range("set member " + std::to_string(x) + " outside [0, " +
                              std::to_string(p.size()) + ")");
    }
  }
}

}  // namespace

bool is_vnm_stable(const DecisionProblem& p, const std::vector<int>& f) {
  require_valid_subset(p, f);
  for (int x : f) {
    for (int y : f) {
      if (x != y && p.has_edge(x, y)) return false;
    }
  }
  std::vector<char> in_f = membership_mask(p.size(), f);
  for (int z = 0; z < p.size(); ++z) {
    if (in_f[z]) continue;
    bool covered = false;
    for (int x : f) {
      if (p.has_edge(x, z)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool is_generalized_stable(const DecisionProblem& p, const Reachability& reach,
                           const std::vector<int>& f) {
  require_valid_subset(p, f);
  for (int x : f) {
    for (int y : f) {
      if (x != y && reach.test(x, y)) return false;
    }
  }
  std::vector<char> in_f = membership_mask(p.size(), f);
  for (int z = 0; z < p.size(); ++z) {
    if (in_f[z]) continue;
    bool covered = false;
    for (int x : f) {
      if (reach.test(x, z)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool is_generalized_stable(const DecisionProblem& p, const std::vector<int>& f) {
  return is_generalized_stable(p, transitive_closure(p), f);
}

bool is_m_stable(const DecisionProblem& p, const Reachability& reach,
                 const std::vector<int>& f) {
  require_valid_subset(p, f);
  for (int x : f) {
    for (int y : f) {
      if (reach.test(x, y) && !reach.test(y, x)) return false;
    }
  }
  std::vector<char> in_f = membership_mask(p.size(), f);
  for (int x : f) {
    for (int y = 0; y < p.size(); ++y) {
      if (!in_f[y] && reach.test(y, x)) return false;
    }
  }
  return true;
}

bool is_m_stable(const DecisionProblem& p, const std::vector<int>& f) {
  return is_m_stable(p, transitive_closure(p), f);
}

bool is_w_stable(const DecisionProblem& p, const Reachability& reach,
                 const std::vector<int>& f) {
  require_valid_subset(p, f);
  for (int x : f) {
    for (int y : f) {
      if (x != y && reach.test(x, y)) return false;
    }
  }
  std::vector<char> in_f = membership_mask(p.size(), f);
  for (int x : f) {
    for (int y = 0; y < p.size(); ++y) {
      if (!in_f[y] && reach.test(y, x) && !reach.test(x, y)) return false;
    }
  }
  return true;
}

bool is_w_stable(const DecisionProblem& p, const std::vector<int>& f) {
  return is_w_stable(p, transitive_closure(p), f);
}

std::string reject_reason(const DecisionProblem& p, Concept kind,
                          const std::vector<int>& f, int dense_threshold) {
  require_valid_subset(p, f);
  auto pair_str = [&](int a, int b) {
    return "(" + p.label(a) + ", " + p.label(b) + ")";
  };
  if (kind == Concept::core || kind == Concept::schwartz) {
    const SolutionSet want = kind == Concept::core ? core(p) : schwartz_set(p);
    if (want.members == f) return {};
    return "set differs from the computed " + concept_name(kind);
  }
  const bool direct = kind == Concept::vnm_stable;
  Reachability reach = transitive_closure(p, dense_threshold);
  auto related = [&](int a, int b) {
    return direct ? p.has_edge(a, b) : reach.test(a, b);
  };
  std::vector<char> in_f = membership_mask(p.size(), f);

  if (kind == Concept::m_stable) {
    for (int x : f) {
      for (int y : f) {
        if (reach.test(x, y) && !reach.test(y, x)) {
          return "symmetry fails inside the set: " + pair_str(x, y) +
                 " in the closure without the converse";
        }
      }
    }
    for (int x : f) {
      for (int y = 0; y < p.size(); ++y) {
        if (!in_f[y] && reach.test(y, x)) {
          return "outside alternative " + p.label(y) + " reaches member " + p.label(x);
        }
      }
    }
    return {};
  }

  for (int x : f) {
    for (int y : f) {
      if (x != y && related(x, y)) {
        return "internal stability fails: " + pair_str(x, y) +
               (direct ? " is a dominance edge" : " is in the closure");
      }
    }
  }
  if (kind == Concept::w_stable) {
    for (int x : f) {
      for (int y = 0; y < p.size(); ++y) {
        if (!in_f[y] && reach.test(y, x) && !reach.test(x, y)) {
          return "external stability fails: " + p.label(y) + " reaches member " +
                 p.label(x) + " with no path back";
        }
      }
    }
    return {};
  }
  for (int z = 0; z < p.size(); ++z) {
    if (in_f[z]) continue;
    bool covered = false;
    for (int x : f) {
      if (related(x, z)) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      return "external stability fails: nothing in the set dominates " + p.label(z);
    }
  }
  return {};
}

namespace {

// Shared state for the lexicographic prefix walks over the maximal ground
// sets. Candidates are the members of the maximal components, ascending.
struct MuCandidates {
  std::vector<int> ids;
  std::vector<int> comp_of;   // position in mu.indices, per candidate
  std::vector<int> comp_max;  // largest candidate id per component
};

MuCandidates mu_candidates(const MaximalFamily& mu) {
  MuCandidates out;
  for (std::size_t c = 0; c < mu.ground_sets.size(); ++c) {
    out.comp_max.push_back(mu.ground_sets[c].back());
    for (int x : mu.ground_sets[c]) {
      out.ids.push_back(x);
      out.comp_of.push_back(static_cast<int>(c));
    }
  }
  // Sort candidates by id, carrying their component along.
  std::vector<std::size_t> order(out.ids.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return out.ids[a] < out.ids[b]; });
  MuCandidates sorted;
  sorted.comp_max = out.comp_max;
  for (std::size_t i : order) {
    sorted.ids.push_back(out.ids[i]);
    sorted.comp_of.push_back(out.comp_of[i]);
  }
  return sorted;
}

}  // namespace

BigCount count_w_stable(const MaximalFamily& mu) {
  BigCount product = 1;
  for (const auto& ground : mu.ground_sets) product *= BigCount(ground.size() + 1);
  return product - 1;
}

BigCount count_w_stable(const DecisionProblem& p) {
  return count_w_stable(maximal_components(contraction(p)));
}

Enumeration w_stable_sets(const DecisionProblem& p, const Limits& limits) {
  const MaximalFamily mu = maximal_components(contraction(p));
  const MuCandidates cand = mu_candidates(mu);
  const Reachability reach = transitive_closure(p, limits.dense_threshold);

  Enumeration out;
  out.kind = Concept::w_stable;
  out.total = count_w_stable(mu);

  std::vector<char> comp_used(mu.ground_sets.size(), 0);
  std::vector<int> prefix;
  // Prefix walk in ascending id order: every prefix with at most one member
  // per maximal component is itself w-stable, so emit before extending.
  auto walk = [&](auto&& self, std::size_t from) -> bool {
    for (std::size_t i = from; i < cand.ids.size(); ++i) {
      int c = cand.comp_of[i];
      if (comp_used[c]) continue;
      prefix.push_back(cand.ids[i]);
      comp_used[c] = 1;
      if (out.sets.size() == limits.limit) {
        out.truncated = true;
        return false;
      }
      bool ok = is_w_stable(p, reach, prefix);
      if (!ok) {
        throw std::logic_error("w-stable fast path emitted a set its checker rejects");
      }
      out.sets.push_back(SolutionSet{Concept::w_stable, prefix, true});
      bool keep_going = self(self, i + 1);
      prefix.pop_back();
      comp_used[c] = 0;
      if (!keep_going) return false;
    }
    return true;
  };
  walk(walk, 0);
  return out;
}

Enumeration generalized_stable_sets(const DecisionProblem& p, const Limits& limits) {
  const MaximalFamily mu = maximal_components(contraction(p));
  const MuCandidates cand = mu_candidates(mu);
  const Reachability reach = transitive_closure(p, limits.dense_threshold);
  const std::size_t comp_count = mu.ground_sets.size();

  Enumeration out;
  out.kind = Concept::generalized_stable;
  out.total = 1;
  for (const auto& ground : mu.ground_sets) out.total *= BigCount(ground.size());

  // One representative from every maximal component, streamed in ascending
  // id order. A partial selection can be completed iff every still-uncovered
  // component has a member above the last chosen id (components partition the
  // candidates, so picking each uncovered component's maximum in ascending
  // order always works).
  std::vector<char> comp_used(comp_count, 0);
  std::size_t covered = 0;
  std::vector<int> prefix;
  auto feasible = [&](int last) {
    for (std::size_t c = 0; c < comp_count; ++c) {
      if (!comp_used[c] && cand.comp_max[c] <= last) return false;
    }
    return true;
  };
  auto walk = [&](auto&& self, std::size_t from) -> bool {
    for (std::size_t i = from; i < cand.ids.size(); ++i) {
      int c = cand.comp_of[i];
      if (comp_used[c]) continue;
      prefix.push_back(cand.ids[i]);
      comp_used[c] = 1;
      ++covered;
      bool keep_going = true;
      if (covered == comp_count) {
        if (out.sets.size() == limits.limit) {
          out.truncated = true;
          keep_going = false;
        } else {
          if (!is_generalized_stable(p, reach, prefix)) {
            throw std::logic_error(
                "generalized-stable fast path emitted a set its checker rejects");
          }
          out.sets.push_back(SolutionSet{Concept::generalized_stable, prefix, true});
        }
      } else if (feasible(cand.ids[i])) {
        keep_going = self(self, i + 1);
      }
      prefix.pop_back();
      comp_used[c] = 0;
      --covered;
      if (!keep_going) return false;
    }
    return true;
  };
  walk(walk, 0);
  return out;
}

Enumeration m_stable_sets(const DecisionProblem& p, const Limits& limits) {
  const MaximalFamily mu = maximal_components(contraction(p));
  const std::size_t k = mu.ground_sets.size();

  Enumeration out;
  out.kind = Concept::m_stable;
  out.total = (BigCount(1) << k) - 1;

  if (k >= 63 || ((std::uint64_t{1} << k) - 1) > limits.materialize_budget) {
    throw ProblemTooLarge("m-stable enumeration materializes 2^" + std::to_string(k) +
                          " - 1 unions of maximal ground sets, over the budget of " +
                          std::to_string(limits.materialize_budget));
  }

  std::vector<std::vector<int>> unions;
  unions.reserve((std::size_t{1} << k) - 1);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<int> members;
    for (std::size_t c = 0; c < k; ++c) {
      if (mask >> c & 1) {
        members.insert(members.end(), mu.ground_sets[c].begin(), mu.ground_sets[c].end());
      }
    }
    std::sort(members.begin(), members.end());
    unions.push_back(std::move(members));
  }
  std::sort(unions.begin(), unions.end());

  const Reachability reach = transitive_closure(p, limits.dense_threshold);
  for (auto& members : unions) {
    if (out.sets.size() == limits.limit) {
      out.truncated = true;
      break;
    }
    if (!is_m_stable(p, reach, members)) {
      // Structural fast path failed its definitional re-check: fall back to
      // the brute-force oracle rather than trust it.
      if (p.size() <= limits.brute_force_max_n) {
        OracleResult fallback = oracle_enumerate(p, Concept::m_stable, limits.brute_force_max_n);
        Enumeration safe;
        safe.kind = Concept::m_stable;
        safe.total = fallback.sets.size();
        std::sort(fallback.sets.begin(), fallback.sets.end());
        for (auto& f : fallback.sets) {
          if (safe.sets.size() == limits.limit) {
            safe.truncated = true;
            break;
          }
          safe.sets.push_back(SolutionSet{Concept::m_stable, std::move(f), true});
        }
        return safe;
      }
      throw std::logic_error("m-stable fast path emitted a set its checker rejects");
    }
    out.sets.push_back(SolutionSet{Concept::m_stable, std::move(members), true});
  }
  return out;
}

Enumeration vnm_stable_sets(const DecisionProblem& p, const Limits& limits) {
  const int n = p.size();
  if (n > limits.brute_force_max_n || n > 62) {
    throw ProblemTooLarge("stable-set brute force scans 2^" + std::to_string(n) +
                          " subsets; the ceiling is n <= " +
                          std::to_string(limits.brute_force_max_n));
  }

  // Bitmask dominance rows; self-loops never count against internal
  // stability, so the self bit is cleared up front.
  std::vector<std::uint64_t> succ(n, 0), pred(n, 0);
  for (const auto& [u, v] : p.edges()) {
    pred[v] |= std::uint64_t{1} << u;
    if (u != v) succ[u] |= std::uint64_t{1} << v;
  }
  std::vector<std::uint64_t> pred_ns = pred;
  for (int v = 0; v < n; ++v) pred_ns[v] &= ~(std::uint64_t{1} << v);

  Enumeration out;
  out.kind = Concept::vnm_stable;

  std::vector<int> prefix;
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  // Internal instability is inherited by supersets, so the walk prunes as it
  // extends; external stability is checked per emitted candidate.
  auto walk = [&](auto&& self, int from, std::uint64_t f_mask) -> void {
    for (int x = from; x < n; ++x) {
      const std::uint64_t bit = std::uint64_t{1} << x;
      if ((succ[x] & f_mask) || (pred_ns[x] & f_mask)) continue;
      prefix.push_back(x);
      const std::uint64_t next_mask = f_mask | bit;
      bool external = true;
      std::uint64_t outside = all & ~next_mask;
      while (outside) {
        int z = std::countr_zero(outside);
        outside &= outside - 1;
        if (!(pred[z] & next_mask)) {
          external = false;
          break;
        }
      }
      if (external) {
        ++out.total;
        if (out.sets.size() < limits.limit) {
          out.sets.push_back(SolutionSet{Concept::vnm_stable, prefix, true});
        } else {
          out.truncated = true;
        }
      }
      self(self, x + 1, next_mask);
      prefix.pop_back();
    }
  };
  walk(walk, 0, 0);
  return out;
}

}  // namespace stableset
