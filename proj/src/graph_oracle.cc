#include "loopchain/graph_oracle.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace loopchain {

int VertexDivisor::degree() const {
  return std::accumulate(coeffs.begin(), coeffs.end(), 0);
}

bool VertexDivisor::is_effective() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](int c) { return c >= 0; });
}

VertexDivisor& VertexDivisor::operator+=(const VertexDivisor& other) {
  if (other.size() != size()) {
    throw std::invalid_argument("divisor size mismatch");
  }
  for (int v = 0; v < size(); ++v) coeffs[v] += other.coeffs[v];
  return *this;
}

VertexDivisor& VertexDivisor::operator-=(const VertexDivisor& other) {
  if (other.size() != size()) {
    throw std::invalid_argument("divisor size mismatch");
  }
  for (int v = 0; v < size(); ++v) coeffs[v] -= other.coeffs[v];
  return *this;
}

FiniteGraph::FiniteGraph(int vertices, std::vector<std::pair<int, int>> edges)
    : vertices_(vertices), edges_(std::move(edges)), adjacency_(vertices) {
  if (vertices_ < 1) throw std::invalid_argument("graph needs a vertex");
  for (const auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= vertices_ || v >= vertices_) {
      throw std::invalid_argument("edge [" + std::to_string(u) + "," +
                                  std::to_string(v) +
                                  "] has an endpoint outside 0.." +
                                  std::to_string(vertices_ - 1));
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  std::vector<bool> seen(vertices_, false);
  std::vector<int> stack = {0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : adjacency_[u]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != vertices_) throw std::invalid_argument("graph is disconnected");
}

int FiniteGraph::genus() const {
  return static_cast<int>(edges_.size()) - vertices_ + 1;
}

VertexDivisor canonical_divisor(const FiniteGraph& graph) {
  VertexDivisor k = VertexDivisor::zero(graph.vertex_count());
  for (int v = 0; v < graph.vertex_count(); ++v) k[v] = graph.degree(v) - 2;
  return k;
}

VertexDivisor principal_divisor(const FiniteGraph& graph,
                                const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != graph.vertex_count()) {
    throw std::invalid_argument("function size does not match vertex count");
  }
  VertexDivisor out = VertexDivisor::zero(graph.vertex_count());
  for (int v = 0; v < graph.vertex_count(); ++v) {
    for (int w : graph.neighbors(v)) out[v] += f[v] - f[w];
  }
  return out;
}

namespace {

void check_vertex(const FiniteGraph& graph, int q) {
  if (q < 0 || q >= graph.vertex_count()) {
    throw std::invalid_argument("base vertex " + std::to_string(q) +
                                " outside 0.." +
                                std::to_string(graph.vertex_count() - 1));
  }
}

void check_size(const FiniteGraph& graph, const VertexDivisor& divisor) {
  if (divisor.size() != graph.vertex_count()) {
    throw std::invalid_argument(
        "divisor has " + std::to_string(divisor.size()) +
        " coefficients, graph has " + std::to_string(graph.vertex_count()) +
        " vertices");
  }
}

// Fires every vertex of `in_set` `times` times.
void fire_set(const FiniteGraph& graph, const std::vector<bool>& in_set,
              long times, VertexDivisor& divisor) {
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (!in_set[v]) continue;
    for (int w : graph.neighbors(v)) {
      if (in_set[w]) continue;
      divisor[v] -= static_cast<int>(times);
      divisor[w] += static_cast<int>(times);
    }
  }
}

// Vertices left standing by a fire started at q.
std::vector<bool> unburnt_set(const FiniteGraph& graph,
                              const VertexDivisor& divisor, int q) {
  const int n = graph.vertex_count();
  std::vector<bool> burnt(n, false);
  std::vector<int> heat(n, 0);
  std::vector<int> stack = {q};
  burnt[q] = true;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : graph.neighbors(u)) {
      if (burnt[w]) continue;
      if (++heat[w] > divisor[w]) {
        burnt[w] = true;
        stack.push_back(w);
      }
    }
  }
  std::vector<bool> unburnt(n);
  for (int v = 0; v < n; ++v) unburnt[v] = !burnt[v];
  return unburnt;
}

}  // namespace

bool is_q_reduced(const FiniteGraph& graph, const VertexDivisor& divisor,
                  int q) {
  check_vertex(graph, q);
  check_size(graph, divisor);
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (v != q && divisor[v] < 0) return false;
  }
  const std::vector<bool> unburnt = unburnt_set(graph, divisor, q);
  return std::none_of(unburnt.begin(), unburnt.end(),
                      [](bool b) { return b; });
}

VertexDivisor dhar_reduce(const FiniteGraph& graph, VertexDivisor divisor,
                          int q) {
  check_vertex(graph, q);
  check_size(graph, divisor);
  const int n = graph.vertex_count();

  // Clear debt layer by layer, farthest from q first: firing the ball
  // {dist < L} feeds every vertex at distance L and only drains distance
  // L - 1, so finished outer layers stay non-negative.
  std::vector<int> dist(n, -1);
  std::queue<int> frontier;
  dist[q] = 0;
  frontier.push(q);
  int max_dist = 0;
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int w : graph.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        max_dist = std::max(max_dist, dist[w]);
        frontier.push(w);
      }
    }
  }
  for (int layer = max_dist; layer >= 1; --layer) {
    long times = 0;
    for (int v = 0; v < n; ++v) {
      if (dist[v] != layer || divisor[v] >= 0) continue;
      long inward = 0;
      for (int w : graph.neighbors(v)) inward += dist[w] == layer - 1;
      times = std::max(times, (-divisor[v] + inward - 1) / inward);
    }
    if (times == 0) continue;
    std::vector<bool> ball(n);
    for (int v = 0; v < n; ++v) ball[v] = dist[v] < layer;
    fire_set(graph, ball, times, divisor);
  }

  // Burn from q; fire whatever survives, as often as it legally can.
  while (true) {
    const std::vector<bool> unburnt = unburnt_set(graph, divisor, q);
    long times = std::numeric_limits<long>::max();
    bool any = false;
    for (int v = 0; v < n; ++v) {
      if (!unburnt[v]) continue;
      any = true;
      long out = 0;
      for (int w : graph.neighbors(v)) out += !unburnt[w];
      if (out > 0) times = std::min(times, divisor[v] / out);
    }
    if (!any) break;
    fire_set(graph, unburnt, times, divisor);
  }
  return divisor;
}

bool linear_equivalent(const FiniteGraph& graph, const VertexDivisor& a,
                       const VertexDivisor& b) {
  if (a.degree() != b.degree()) return false;
  return dhar_reduce(graph, a, 0) == dhar_reduce(graph, b, 0);
}

BakerNorineRank::BakerNorineRank(const FiniteGraph& graph, int base)
    : graph_(graph), base_(base) {
  check_vertex(graph, base);
}

int BakerNorineRank::rank(const VertexDivisor& divisor) {
  check_size(graph_, divisor);
  if (divisor.degree() < 0) return -1;
  VertexDivisor reduced = dhar_reduce(graph_, divisor, base_);
  if (auto it = memo_.find(reduced.coeffs); it != memo_.end()) {
    return it->second;
  }
  int result;
  if (reduced[base_] < 0) {
    result = -1;
  } else {
    int worst = std::numeric_limits<int>::max();
    for (int v = 0; v < graph_.vertex_count() && worst >= 0; ++v) {
      reduced[v] -= 1;
      worst = std::min(worst, rank(reduced));
      reduced[v] += 1;
    }
    result = worst + 1;
  }
  memo_.emplace(std::move(reduced.coeffs), result);
  return result;
}

bool BakerNorineRank::has_rank_at_least(const VertexDivisor& divisor, int r) {
  return rank(divisor) >= r;
}

int rank_baker_norine(const FiniteGraph& graph, const VertexDivisor& divisor,
                      int base) {
  BakerNorineRank ranker(graph, base);
  return ranker.rank(divisor);
}

namespace {

bool effective_rec(int vertices, int remaining, int min_vertex,
                   VertexDivisor& current,
                   const std::function<bool(const VertexDivisor&)>& visit) {
  if (remaining == 0) return visit(current);
  for (int v = min_vertex; v < vertices; ++v) {
    current[v] += 1;
    const bool go_on = effective_rec(vertices, remaining - 1, v, current, visit);
    current[v] -= 1;
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

void for_each_effective(
    int vertices, int degree,
    const std::function<bool(const VertexDivisor&)>& visit) {
  if (degree < 0) return;
  VertexDivisor current = VertexDivisor::zero(vertices);
  effective_rec(vertices, degree, 0, current, visit);
}

int wrd_discrete(const FiniteGraph& graph, int r, int d) {
  if (r < 0 || d < 0) {
    throw std::invalid_argument("w^r_d needs r >= 0 and d >= 0");
  }
  const int n = graph.vertex_count();
  BakerNorineRank ranker(graph);
  bool nonempty = false;
  for_each_effective(n, d, [&](const VertexDivisor& D) {
    nonempty = ranker.has_rank_at_least(D, r);
    return !nonempty;
  });
  if (!nonempty) return -1;

  int best = -1;
  for (int w = 0; w + r <= d; ++w) {
    bool all_extend = true;
    for_each_effective(n, w + r, [&](const VertexDivisor& E) {
      bool extends = false;
      for_each_effective(n, d - w - r, [&](const VertexDivisor& F) {
        extends = ranker.has_rank_at_least(E + F, r);
        return !extends;
      });
      all_extend = extends;
      return all_extend;
    });
    if (!all_extend) break;
    best = w;
  }
  return best;
}

}  // namespace loopchain
