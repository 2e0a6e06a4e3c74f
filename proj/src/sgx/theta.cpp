#include "sgx/theta.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

namespace sgx {

namespace {

void check_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.first, e.second)) {
    fail(Errc::invalid_argument,
         "not an edge: " + std::to_string(e.first) + "-" + std::to_string(e.second));
  }
}

int checked_distance(const DistanceMatrix& dm, int u, int v) {
  int d = dm(u, v);
  if (d == kUnreachable) fail(Errc::disconnected, "theta relation requires a connected graph");
  return d;
}

struct ThetaAnalysis {
  std::vector<Edge> edges;            // lexicographic
  std::vector<std::vector<int>> classes;  // edge indices per theta* class
  bool transitive = true;
};

ThetaAnalysis analyze_theta(const Graph& g, const DistanceMatrix& dm) {
  ThetaAnalysis a;
  a.edges = g.edges();
  const int m = static_cast<int>(a.edges.size());
  std::vector<char> related(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i) {
    related[static_cast<size_t>(i) * m + i] = 1;
    for (int j = i + 1; j < m; ++j) {
      bool r = theta_related(dm, a.edges[static_cast<size_t>(i)], a.edges[static_cast<size_t>(j)]);
      related[static_cast<size_t>(i) * m + j] = r;
      related[static_cast<size_t>(j) * m + i] = r;
    }
  }
  // Connected components of the relation graph give the transitive closure.
  std::vector<int> cls(static_cast<size_t>(m), -1);
  std::vector<int> stack;
  int count = 0;
  for (int s = 0; s < m; ++s) {
    if (cls[static_cast<size_t>(s)] != -1) continue;
    stack.assign(1, s);
    cls[static_cast<size_t>(s)] = count;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < m; ++j) {
        if (related[static_cast<size_t>(i) * m + j] && cls[static_cast<size_t>(j)] == -1) {
          cls[static_cast<size_t>(j)] = count;
          stack.push_back(j);
        }
      }
    }
    ++count;
  }
  a.classes.resize(static_cast<size_t>(count));
  for (int i = 0; i < m; ++i) a.classes[static_cast<size_t>(cls[static_cast<size_t>(i)])].push_back(i);
  // Theta is transitive iff it already holds pairwise inside every closure class.
  for (const auto& c : a.classes) {
    for (size_t x = 0; x < c.size() && a.transitive; ++x)
      for (size_t y = x + 1; y < c.size(); ++y) {
        if (!related[static_cast<size_t>(c[x]) * m + c[y]]) {
          a.transitive = false;
          break;
        }
      }
    if (!a.transitive) break;
  }
  // Classes are already ordered by smallest edge index because edge indices
  // are lexicographic and components are discovered from the smallest seed.
  return a;
}

}  // namespace

bool theta_related(const DistanceMatrix& dm, Edge e1, Edge e2) {
  auto [u, v] = e1;
  auto [x, y] = e2;
  return checked_distance(dm, u, x) + checked_distance(dm, v, y) !=
         checked_distance(dm, u, y) + checked_distance(dm, v, x);
}

bool theta_related(const Graph& g, Edge e1, Edge e2) {
  check_edge(g, e1);
  check_edge(g, e2);
  return theta_related(distance_matrix(g), e1, e2);
}

std::vector<std::vector<Edge>> theta_classes(const Graph& g) {
  if (!is_bipartite_connected(g).connected) fail(Errc::disconnected, "theta classes require a connected graph");
  auto a = analyze_theta(g, distance_matrix(g));
  std::vector<std::vector<Edge>> out;
  out.reserve(a.classes.size());
  for (const auto& c : a.classes) {
    std::vector<Edge> es;
    es.reserve(c.size());
    for (int i : c) es.push_back(a.edges[static_cast<size_t>(i)]);
    out.push_back(std::move(es));
  }
  return out;
}

bool is_partial_cube(const Graph& g) {
  auto bc = is_bipartite_connected(g);
  if (!bc.connected || !bc.bipartite) return false;
  return analyze_theta(g, distance_matrix(g)).transitive;
}

std::string label_string(std::uint64_t bits, int width) {
  std::string s(static_cast<size_t>(width), '0');
  for (int i = 0; i < width; ++i)
    if (bits >> i & 1) s[static_cast<size_t>(i)] = '1';
  return s;
}

void validate(const LabelledPartialCube& L) {
  const int n = L.graph.vertex_count();
  if (n == 0) fail(Errc::invariant, "labelled partial cube must be nonempty");
  if (static_cast<int>(L.labels.size()) != n) fail(Errc::invariant, "one label per vertex required");
  if (L.idim < 0 || L.idim > 64) fail(Errc::invariant, "idim out of range");
  std::uint64_t mask = L.idim == 64 ? ~0ULL : (1ULL << L.idim) - 1;
  for (auto l : L.labels)
    if (l & ~mask) fail(Errc::invariant, "label uses a coordinate beyond idim");
  {
    auto sorted = L.labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(Errc::invariant, "labels are not pairwise distinct");
  }
  std::uint64_t all_or = 0, all_and = mask;
  for (auto l : L.labels) {
    all_or |= l;
    all_and &= l;
  }
  if (all_or != mask || all_and != 0) fail(Errc::invariant, "constant coordinate present; idim is not minimal");
  auto dm = distance_matrix(L.graph);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int hd = std::popcount(L.label(u) ^ L.label(v));
      if (dm(u, v) != hd)
        fail(Errc::invariant, "labelling is not isometric at pair " + std::to_string(u) + "," + std::to_string(v));
    }
}

LabelledPartialCube embed(const Graph& g, int base) {
  const int n = g.vertex_count();
  if (n == 0) fail(Errc::not_partial_cube, "empty graph is not a partial cube");
  if (base < 0 || base >= n) fail(Errc::invalid_argument, "base vertex out of range");
  auto bc = is_bipartite_connected(g);
  if (!bc.connected || !bc.bipartite) fail(Errc::not_partial_cube, "graph is not bipartite and connected");
  auto dm = distance_matrix(g);
  auto a = analyze_theta(g, dm);
  if (!a.transitive) fail(Errc::not_partial_cube, "theta is not an equivalence relation");
  const int k = static_cast<int>(a.classes.size());
  if (k > 64) fail(Errc::too_large, "isometric dimension exceeds 64");

  LabelledPartialCube L;
  L.graph = g;
  L.idim = k;
  L.labels.assign(static_cast<size_t>(n), 0);
  for (int c = 0; c < k; ++c) {
    Edge rep = a.edges[static_cast<size_t>(a.classes[static_cast<size_t>(c)].front())];
    auto [u, v] = rep;
    // Bipartiteness rules out ties, so each vertex is strictly closer to one
    // endpoint; the base side becomes coordinate value 0.
    bool base_with_u = dm(base, u) < dm(base, v);
    for (int w = 0; w < n; ++w) {
      bool with_u = dm(w, u) < dm(w, v);
      if (with_u != base_with_u) L.labels[static_cast<size_t>(w)] |= 1ULL << c;
    }
  }
  validate(L);
  return L;
}

LabelledPartialCube cube_from_labels(std::vector<std::uint64_t> labels, int width) {
  if (labels.empty()) fail(Errc::invalid_argument, "label set is empty");
  if (width < 0 || width > 64) fail(Errc::invalid_argument, "label width out of range");
  LabelledPartialCube L;
  L.idim = width;
  L.labels = std::move(labels);
  L.graph = Graph(static_cast<int>(L.labels.size()));
  std::unordered_map<std::uint64_t, int> index;
  index.reserve(L.labels.size());
  for (size_t v = 0; v < L.labels.size(); ++v) {
    auto [it, fresh] = index.emplace(L.labels[v], static_cast<int>(v));
    if (!fresh) fail(Errc::invalid_argument, "duplicate label " + label_string(L.labels[v], width));
  }
  for (size_t v = 0; v < L.labels.size(); ++v)
    for (int i = 0; i < width; ++i) {
      auto it = index.find(L.labels[v] ^ (1ULL << i));
      if (it != index.end() && it->second > static_cast<int>(v))
        L.graph.add_edge(static_cast<int>(v), it->second);
    }
  validate(L);
  return L;
}

NormalizedLabels normalize_labels(const std::vector<std::uint64_t>& labels, int width) {
  NormalizedLabels out;
  if (labels.empty()) {
    out.width = 0;
    return out;
  }
  std::uint64_t all_or = 0, all_and = ~0ULL;
  for (auto l : labels) {
    all_or |= l;
    all_and &= l;
  }
  std::vector<int> keep;
  for (int i = 0; i < width; ++i) {
    bool constant = !(all_or >> i & 1) || (all_and >> i & 1);
    if (constant)
      out.dropped.push_back(i);
    else
      keep.push_back(i);
  }
  out.width = static_cast<int>(keep.size());
  out.labels.reserve(labels.size());
  for (auto l : labels) {
    std::uint64_t r = 0;
    for (size_t j = 0; j < keep.size(); ++j)
      if (l >> keep[j] & 1) r |= 1ULL << j;
    out.labels.push_back(r);
  }
  return out;
}

ThetaClassData theta_class_data(const LabelledPartialCube& L, int coordinate) {
  if (coordinate < 0 || coordinate >= L.idim) fail(Errc::invalid_argument, "coordinate out of range");
  ThetaClassData d;
  d.index = coordinate;
  const int n = L.graph.vertex_count();
  std::vector<char> touched(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    bool side = L.label(v) >> coordinate & 1;
    (side ? d.W1 : d.W0).push_back(v);
    for (int w : L.graph.neighbors(v)) {
      if (v < w && (L.label(v) ^ L.label(w)) == 1ULL << coordinate) {
        d.F.emplace_back(v, w);
        touched[static_cast<size_t>(v)] = 1;
        touched[static_cast<size_t>(w)] = 1;
      }
    }
  }
  for (int v : d.W0)
    if (touched[static_cast<size_t>(v)]) d.U0.push_back(v);
  for (int v : d.W1)
    if (touched[static_cast<size_t>(v)]) d.U1.push_back(v);
  d.peripheral0 = d.U0 == d.W0;
  d.peripheral1 = d.U1 == d.W1;
  return d;
}

}  // namespace sgx
