#ifndef LOOPCHAIN_GRAPH_ORACLE_H_
#define LOOPCHAIN_GRAPH_ORACLE_H_

// Chip-firing divisor theory on finite multigraphs. This is the brute-force
// ground truth the tableau engine is checked against; it knows nothing about
// chains of cycles or tableaux.

#include <compare>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace loopchain {

struct VertexDivisor {
  std::vector<int> coeffs;

  VertexDivisor() = default;
  explicit VertexDivisor(std::vector<int> c) : coeffs(std::move(c)) {}
  static VertexDivisor zero(int vertices) {
    return VertexDivisor(std::vector<int>(vertices, 0));
  }

  int size() const { return static_cast<int>(coeffs.size()); }
  int degree() const;
  bool is_effective() const;
  int& operator[](int v) { return coeffs[v]; }
  int operator[](int v) const { return coeffs[v]; }

  VertexDivisor& operator+=(const VertexDivisor& other);
  VertexDivisor& operator-=(const VertexDivisor& other);
  friend VertexDivisor operator+(VertexDivisor a, const VertexDivisor& b) {
    return a += b;
  }
  friend VertexDivisor operator-(VertexDivisor a, const VertexDivisor& b) {
    return a -= b;
  }

  auto operator<=>(const VertexDivisor&) const = default;
};

// Connected multigraph without self-loops. Repeated vertex pairs are
// parallel edges.
class FiniteGraph {
 public:
  // Throws std::invalid_argument on self-loops, out-of-range endpoints, an
  // empty vertex set or a disconnected graph.
  FiniteGraph(int vertices, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  // Neighbors with multiplicity.
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  // Cyclomatic number |E| - |V| + 1.
  int genus() const;

 private:
  int vertices_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
};

VertexDivisor canonical_divisor(const FiniteGraph& graph);

// div(f)(v) = sum over edges e at v of f(v) - f(other end of e).
VertexDivisor principal_divisor(const FiniteGraph& graph,
                                const std::vector<int>& f);

// Dhar's burning test: off-q coefficients are non-negative and a fire lit
// at q burns every vertex.
bool is_q_reduced(const FiniteGraph& graph, const VertexDivisor& divisor,
                  int q);

// The unique q-reduced divisor linearly equivalent to `divisor`.
VertexDivisor dhar_reduce(const FiniteGraph& graph, VertexDivisor divisor,
                          int q);

bool linear_equivalent(const FiniteGraph& graph, const VertexDivisor& a,
                       const VertexDivisor& b);

// Baker-Norine rank with a memo of q-reduced representatives, so repeated
// queries on one graph share work. Uses
//   rank(D) = -1                      if D is not equivalent to effective,
//   rank(D) = 1 + min_v rank(D - v)   otherwise.
// Not thread-safe; use one instance per thread.
class BakerNorineRank {
 public:
  explicit BakerNorineRank(const FiniteGraph& graph, int base = 0);

  int rank(const VertexDivisor& divisor);
  // rank(divisor) >= r, without computing the full rank when it is large.
  bool has_rank_at_least(const VertexDivisor& divisor, int r);

  const FiniteGraph& graph() const { return graph_; }

 private:
  const FiniteGraph& graph_;
  int base_;
  std::map<std::vector<int>, int> memo_;
};

int rank_baker_norine(const FiniteGraph& graph, const VertexDivisor& divisor,
                      int base = 0);

// Calls visit on every effective divisor of the given degree, ordered
// lexicographically by sorted vertex multiset. Stops when visit returns false.
void for_each_effective(int vertices, int degree,
                        const std::function<bool(const VertexDivisor&)>& visit);

// Brill-Noether number w^r_d over vertex-supported divisors: -1 if no degree
// d divisor has rank >= r, else the largest w >= 0 such that every effective
// E of degree w + r extends by an effective F of degree d - w - r to a
// divisor of rank >= r.
int wrd_discrete(const FiniteGraph& graph, int r, int d);

}  // namespace loopchain

#endif  // LOOPCHAIN_GRAPH_ORACLE_H_
