#include "sgx/median.hpp"

#include <algorithm>

#include "sgx/theta.hpp"

namespace sgx {

namespace {

int need_distance(const DistanceMatrix& dm, int u, int v) {
  int d = dm(u, v);
  if (d == kUnreachable) fail(Errc::disconnected, "median computation requires a connected graph");
  return d;
}

}  // namespace

std::vector<int> medians(const DistanceMatrix& dm, int u, int v, int w) {
  int duv = need_distance(dm, u, v);
  int duw = need_distance(dm, u, w);
  int dvw = need_distance(dm, v, w);
  std::vector<int> out;
  for (int x = 0; x < dm.n; ++x) {
    int xu = dm(x, u), xv = dm(x, v), xw = dm(x, w);
    if (xu == kUnreachable) continue;
    if (xu + xv == duv && xu + xw == duw && xv + xw == dvw) out.push_back(x);
  }
  return out;
}

std::vector<int> medians(const Graph& g, int u, int v, int w) {
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count() || w < 0 || w >= g.vertex_count())
    fail(Errc::invalid_argument, "vertex index out of range");
  return medians(distance_matrix(g), u, v, w);
}

MedianResult is_median_graph(const Graph& g) {
  const int n = g.vertex_count();
  MedianResult r;
  if (n == 0) return r;
  r.connected = is_bipartite_connected(g).connected;
  if (!r.connected) return r;
  auto dm = distance_matrix(g);
  // Triples with repeated vertices always have the repeated vertex as their
  // unique median, so only distinct triples are scanned.
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int w = v + 1; w < n; ++w) {
        auto med = medians(dm, u, v, w);
        if (med.size() != 1) {
          r.witness = MedianWitness{{u, v, w}, std::move(med)};
          return r;
        }
      }
  r.median = true;
  return r;
}

bool is_median_graph_via_convexity(const Graph& g) {
  LabelledPartialCube L;
  try {
    L = embed(g, 0);
  } catch (const Error&) {
    return false;
  }
  for (int c = 0; c < L.idim; ++c) {
    auto data = theta_class_data(L, c);
    if (!is_convex(g, data.U0, ConvexityMethod::Definition)) return false;
    if (!is_convex(g, data.U1, ConvexityMethod::Definition)) return false;
  }
  return true;
}

bool is_convex(const Graph& g, const std::vector<int>& S, ConvexityMethod method) {
  const int n = g.vertex_count();
  for (int v : S)
    if (v < 0 || v >= n) fail(Errc::invalid_argument, "vertex index out of range");
  auto bc = is_bipartite_connected(g);
  if (!bc.connected) fail(Errc::disconnected, "convexity test requires a connected graph");
  std::vector<char> in(static_cast<size_t>(n), 0);
  for (int v : S) in[static_cast<size_t>(v)] = 1;

  if (method == ConvexityMethod::Definition) {
    if (S.size() <= 1) return true;
    auto dm = distance_matrix(g);
    for (size_t a = 0; a < S.size(); ++a)
      for (size_t b = a + 1; b < S.size(); ++b)
        for (int x : interval(dm, S[a], S[b]))
          if (!in[static_cast<size_t>(x)]) return false;
    return true;
  }

  if (!bc.bipartite) fail(Errc::invalid_argument, "convexity lemma requires a bipartite graph");
  if (S.empty()) return true;
  // The lemma applies to induced connected subgraphs only.
  {
    std::vector<int> stack{S.front()};
    std::vector<char> seen(static_cast<size_t>(n), 0);
    seen[static_cast<size_t>(S.front())] = 1;
    size_t reached = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u))
        if (in[static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached != S.size())
      fail(Errc::invalid_argument, "convexity lemma requires an induced-connected vertex set");
  }
  std::vector<Edge> boundary, inside;
  for (auto e : g.edges()) {
    bool a = in[static_cast<size_t>(e.first)], b = in[static_cast<size_t>(e.second)];
    if (a && b)
      inside.push_back(e);
    else if (a != b)
      boundary.push_back(e);
  }
  auto dm = distance_matrix(g);
  for (auto be : boundary)
    for (auto ie : inside)
      if (theta_related(dm, be, ie)) return false;
  return true;
}

}  // namespace sgx
