#ifndef LOOPCHAIN_TESTS_SUPPORT_H_
#define LOOPCHAIN_TESTS_SUPPORT_H_

// Small exhaustive families shared by the unit tests and the acceptance run.

#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "loopchain/chain_model.h"
#include "loopchain/graph_oracle.h"
#include "loopchain/rank.h"

namespace loopchain::testing {

// Every chain with 1 <= genus <= max_genus whose cycles have
// 2 <= size <= max_size and any attach vertex 2..size.
inline std::vector<DiscreteChain> small_chains(int max_genus, int max_size) {
  std::vector<DiscreteChain::Cycle> kinds;
  for (int k = 2; k <= max_size; ++k) {
    for (int j = 2; j <= k; ++j) kinds.push_back({k, j});
  }
  std::vector<DiscreteChain> out;
  std::vector<DiscreteChain> layer{DiscreteChain{}};
  for (int g = 1; g <= max_genus; ++g) {
    std::vector<DiscreteChain> next;
    for (const DiscreteChain& base : layer) {
      for (const auto& c : kinds) {
        DiscreteChain chain = base;
        chain.cycles.push_back(c);
        next.push_back(chain);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

// Every divisor on n vertices with coefficients in [lo, hi] and degree in
// [min_degree, max_degree].
inline void for_each_bounded(int n, int lo, int hi, int min_degree,
                             int max_degree,
                             const std::function<void(const VertexDivisor&)>& visit) {
  VertexDivisor d = VertexDivisor::zero(n);
  std::function<void(int, int)> rec = [&](int v, int sum) {
    if (v == n) {
      if (sum >= min_degree && sum <= max_degree) visit(d);
      return;
    }
    for (int c = lo; c <= hi; ++c) {
      // Remaining vertices can add at most (n - v - 1) * hi.
      if (sum + c + (n - v - 1) * lo > max_degree) break;
      d[v] = c;
      rec(v + 1, sum + c);
    }
    d[v] = 0;
  };
  rec(0, 0);
}

// Smallest positive m with m (j - 1) divisible by k, by counting.
inline int torsion_by_definition(int k, int j) {
  for (int m = 1;; ++m) {
    if ((m * (j - 1)) % k == 0) return m;
  }
}

// Baker-Norine rank straight from the definition: the largest r such that
// D - E is equivalent to an effective divisor for every effective E of
// degree r.
inline int rank_by_definition(const FiniteGraph& graph, const VertexDivisor& D) {
  auto effective_class = [&](const VertexDivisor& x) {
    return x.degree() >= 0 && dhar_reduce(graph, x, 0)[0] >= 0;
  };
  int r = -1;
  while (true) {
    bool all = true;
    for_each_effective(graph.vertex_count(), r + 1, [&](const VertexDivisor& E) {
      all = effective_class(D - E);
      return all;
    });
    if (!all) return r;
    ++r;
  }
}

// Brute force over the finite candidate window: Generic, every residue on a
// finite-torsion cycle, and integers in [-(r + 1), g - d + r] on an
// infinite-torsion cycle. Returns whether some divisor has rank exactly r.
inline bool rank_exactly_by_window(const TorsionProfile& p, int d, int r) {
  const int g = p.genus();
  std::vector<std::vector<PointPosition>> choices(g);
  for (int i = 1; i <= g; ++i) {
    auto& c = choices[i - 1];
    c.push_back(PointPosition::generic());
    const int m = p.torsion(i);
    if (m > 0) {
      for (int xi = 0; xi < m; ++xi) c.push_back(PointPosition::integer_class(xi));
    } else {
      for (int xi = -(r + 1); xi <= g - d + r; ++xi) {
        c.push_back(PointPosition::integer_class(xi));
      }
    }
  }
  std::vector<PointPosition> pos(g);
  std::function<bool(int)> rec = [&](int i) {
    if (i == g) {
      return rank_metric(p, make_representing_divisor(p, d, pos)).rank == r;
    }
    for (const PointPosition& c : choices[i]) {
      pos[i] = c;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

// Connected multigraphs on n vertices with exactly e edges, as edge
// multisets in lexicographic order.
inline std::vector<FiniteGraph> connected_multigraphs(int n, int e) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<FiniteGraph> out;
  std::vector<std::pair<int, int>> edges;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (left == 0) {
      // Union-find connectivity check before the constructor would throw.
      std::vector<int> parent(n);
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
      };
      int components = n;
      for (auto [u, v] : edges) {
        const int a = find(u), b = find(v);
        if (a != b) {
          parent[a] = b;
          --components;
        }
      }
      if (components == 1) out.emplace_back(n, edges);
      return;
    }
    for (std::size_t i = from; i < pairs.size(); ++i) {
      edges.push_back(pairs[i]);
      rec(i, left - 1);
      edges.pop_back();
    }
  };
  if (n == 1 && e == 0) {
    out.emplace_back(1, edges);
    return out;
  }
  rec(0, e);
  return out;
}

}  // namespace loopchain::testing

#endif  // LOOPCHAIN_TESTS_SUPPORT_H_
