#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sgx/errors.hpp"

namespace sgx {

// Edges are stored and reported with the smaller endpoint first.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Finite simple undirected graph on dense vertex indices 0..n-1.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);  // idempotent; rejects loops and out-of-range endpoints
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  int max_degree() const;
  std::vector<Edge> edges() const;  // lexicographic order

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

inline constexpr int kUnreachable = -1;

// All-pairs shortest path lengths; kUnreachable marks disconnected pairs.
struct DistanceMatrix {
  int n = 0;
  std::vector<int> d;

  int operator()(int u, int v) const { return d[static_cast<size_t>(u) * n + v]; }
  int& at(int u, int v) { return d[static_cast<size_t>(u) * n + v]; }
};

DistanceMatrix distance_matrix(const Graph& g);

// {x : d(u,x) + d(x,v) = d(u,v)}, ascending. Throws Errc::disconnected when u,v
// are in different components.
std::vector<int> interval(const DistanceMatrix& dm, int u, int v);
std::vector<int> interval(const Graph& g, int u, int v);

struct BipartiteConnected {
  bool bipartite = false;
  bool connected = false;
};

BipartiteConnected is_bipartite_connected(const Graph& g);

inline constexpr int kDefaultIsoCap = 64;

// Exact isomorphism search (backtracking over color-refined classes). Returns
// a vertex mapping g -> h on success. Throws Errc::too_large above `cap`.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h,
                                                 int cap = kDefaultIsoCap);
bool are_isomorphic(const Graph& g, const Graph& h, int cap = kDefaultIsoCap);

}  // namespace sgx
