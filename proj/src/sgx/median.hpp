#pragma once

#include <array>
#include <optional>
#include <vector>

#include "sgx/graph.hpp"

namespace sgx {

// All x with d(u,x)+d(x,v)=d(u,v), d(u,x)+d(x,w)=d(u,w), d(v,x)+d(x,w)=d(v,w).
std::vector<int> medians(const DistanceMatrix& dm, int u, int v, int w);
std::vector<int> medians(const Graph& g, int u, int v, int w);

struct MedianWitness {
  std::array<int, 3> triple{};  // lexicographically first failing triple
  std::vector<int> medians;     // its median set (size != 1)
};

struct MedianResult {
  bool median = false;
  bool connected = false;
  std::optional<MedianWitness> witness;
};

// Brute force over all vertex triples; disconnected graphs are not median.
MedianResult is_median_graph(const Graph& g);

// Independent oracle: partial cube whose boundary graphs G[U0], G[U1] are
// convex for every theta class.
bool is_median_graph_via_convexity(const Graph& g);

enum class ConvexityMethod {
  Definition,  // all intervals between members stay inside
  Lemma,       // no boundary edge theta-related to an inside edge
};

// Convexity of the induced subgraph G[S]. The Lemma method requires g
// bipartite and G[S] connected and fails loudly otherwise.
bool is_convex(const Graph& g, const std::vector<int>& S, ConvexityMethod method);

}  // namespace sgx
