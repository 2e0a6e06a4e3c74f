#include "sgx/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <string>

namespace sgx {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(std::max(n, 0))) {
  if (n < 0) fail(Errc::invalid_argument, "negative vertex count");
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) fail(Errc::invalid_argument, "vertex index out of range: " + std::to_string(v));
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  const auto& nu = adj_[static_cast<size_t>(u)];
  return std::binary_search(nu.begin(), nu.end(), v);
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) fail(Errc::invalid_argument, "self-loop rejected at vertex " + std::to_string(u));
  auto& nu = adj_[static_cast<size_t>(u)];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return;
  nu.insert(it, v);
  auto& nv = adj_[static_cast<size_t>(v)];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++m_;
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<size_t>(v)];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[static_cast<size_t>(v)].size());
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[static_cast<size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.vertex_count();
  DistanceMatrix dm;
  dm.n = n;
  dm.d.assign(static_cast<size_t>(n) * n, kUnreachable);
  std::vector<int> queue;
  queue.reserve(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) {
    queue.clear();
    queue.push_back(s);
    dm.at(s, s) = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      int du = dm(s, u);
      for (int w : g.neighbors(u)) {
        if (dm(s, w) == kUnreachable) {
          dm.at(s, w) = du + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dm;
}

std::vector<int> interval(const DistanceMatrix& dm, int u, int v) {
  if (u < 0 || u >= dm.n || v < 0 || v >= dm.n) fail(Errc::invalid_argument, "vertex index out of range");
  int duv = dm(u, v);
  if (duv == kUnreachable) fail(Errc::disconnected, "interval endpoints lie in different components");
  std::vector<int> out;
  for (int x = 0; x < dm.n; ++x) {
    int a = dm(u, x), b = dm(x, v);
    if (a != kUnreachable && b != kUnreachable && a + b == duv) out.push_back(x);
  }
  return out;
}

std::vector<int> interval(const Graph& g, int u, int v) { return interval(distance_matrix(g), u, v); }

BipartiteConnected is_bipartite_connected(const Graph& g) {
  const int n = g.vertex_count();
  BipartiteConnected r{true, true};
  if (n == 0) return {true, false};
  std::vector<int> color(static_cast<size_t>(n), -1);
  int components = 0;
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<size_t>(s)] != -1) continue;
    ++components;
    color[static_cast<size_t>(s)] = 0;
    queue.assign(1, s);
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int w : g.neighbors(u)) {
        if (color[static_cast<size_t>(w)] == -1) {
          color[static_cast<size_t>(w)] = color[static_cast<size_t>(u)] ^ 1;
          queue.push_back(w);
        } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(u)]) {
          r.bipartite = false;
        }
      }
    }
  }
  r.connected = components == 1;
  return r;
}

namespace {

// Word-parallel vertex-set bitmask, sized for graphs up to the iso cap.
struct BitRows {
  int n = 0;
  int words = 0;
  std::vector<std::uint64_t> bits;  // row-major

  explicit BitRows(const Graph& g) : n(g.vertex_count()), words((g.vertex_count() + 63) / 64) {
    bits.assign(static_cast<size_t>(n) * words, 0);
    for (int u = 0; u < n; ++u)
      for (int v : g.neighbors(u)) row(u)[static_cast<size_t>(v) / 64] |= 1ULL << (v % 64);
  }
  std::uint64_t* row(int u) { return bits.data() + static_cast<size_t>(u) * words; }
  const std::uint64_t* row(int u) const { return bits.data() + static_cast<size_t>(u) * words; }
};

// Joint 1-dimensional color refinement over both graphs so color ids align.
// Returns false as soon as the color histograms diverge.
bool refine_colors(const Graph& g, const Graph& h, std::vector<int>& cg, std::vector<int>& ch) {
  const int n = g.vertex_count();
  cg.assign(static_cast<size_t>(n), 0);
  ch.assign(static_cast<size_t>(n), 0);
  int colors = 1;
  for (int round = 0; round < n; ++round) {
    using Sig = std::pair<int, std::vector<int>>;
    std::map<Sig, int> palette;
    auto signature = [](const Graph& gr, const std::vector<int>& col, int v) {
      std::vector<int> nb;
      nb.reserve(gr.neighbors(v).size());
      for (int w : gr.neighbors(v)) nb.push_back(col[static_cast<size_t>(w)]);
      std::sort(nb.begin(), nb.end());
      return Sig{col[static_cast<size_t>(v)], std::move(nb)};
    };
    std::vector<int> ng(static_cast<size_t>(n)), nh(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto [it, _] = palette.emplace(signature(g, cg, v), static_cast<int>(palette.size()));
      ng[static_cast<size_t>(v)] = it->second;
    }
    for (int v = 0; v < n; ++v) {
      auto it = palette.find(signature(h, ch, v));
      if (it == palette.end()) return false;
      nh[static_cast<size_t>(v)] = it->second;
    }
    std::vector<int> histg(palette.size(), 0), histh(palette.size(), 0);
    for (int v = 0; v < n; ++v) {
      ++histg[static_cast<size_t>(ng[static_cast<size_t>(v)])];
      ++histh[static_cast<size_t>(nh[static_cast<size_t>(v)])];
    }
    if (histg != histh) return false;
    bool stable = static_cast<int>(palette.size()) == colors;
    colors = static_cast<int>(palette.size());
    cg.swap(ng);
    ch.swap(nh);
    if (stable) break;
  }
  return true;
}

struct IsoSearch {
  const Graph& g;
  const Graph& h;
  BitRows hadj;
  std::vector<int> cg, ch;
  int n;
  int words;
  std::vector<int> mapping;         // g vertex -> h vertex or -1
  std::vector<int> order;           // g vertices in assignment order
  std::vector<std::uint64_t> used;  // h vertices already taken
  std::vector<std::uint64_t> color_mask;  // per color, h vertices of that color

  IsoSearch(const Graph& g_, const Graph& h_) : g(g_), h(h_), hadj(h_), n(g_.vertex_count()), words(hadj.words) {}

  bool run(std::vector<int>& out) {
    if (!refine_colors(g, h, cg, ch)) return false;
    int colors = 0;
    for (int c : cg) colors = std::max(colors, c + 1);
    color_mask.assign(static_cast<size_t>(colors) * words, 0);
    for (int v = 0; v < n; ++v)
      color_mask[static_cast<size_t>(ch[static_cast<size_t>(v)]) * words + v / 64] |= 1ULL << (v % 64);

    // Assignment order: grow along adjacency, most-constrained first.
    std::vector<int> colorcount(static_cast<size_t>(colors), 0);
    for (int v = 0; v < n; ++v) ++colorcount[static_cast<size_t>(cg[static_cast<size_t>(v)])];
    std::vector<char> placed(static_cast<size_t>(n), 0);
    std::vector<int> attached(static_cast<size_t>(n), 0);
    order.reserve(static_cast<size_t>(n));
    for (int step = 0; step < n; ++step) {
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[static_cast<size_t>(v)]) continue;
        if (best == -1) { best = v; continue; }
        int av = attached[static_cast<size_t>(v)], ab = attached[static_cast<size_t>(best)];
        int sv = colorcount[static_cast<size_t>(cg[static_cast<size_t>(v)])];
        int sb = colorcount[static_cast<size_t>(cg[static_cast<size_t>(best)])];
        if (av > ab || (av == ab && sv < sb)) best = v;
      }
      placed[static_cast<size_t>(best)] = 1;
      order.push_back(best);
      for (int w : g.neighbors(best)) ++attached[static_cast<size_t>(w)];
    }

    mapping.assign(static_cast<size_t>(n), -1);
    used.assign(static_cast<size_t>(words), 0);
    if (!extend(0)) return false;
    out = mapping;
    return true;
  }

  bool extend(int depth) {
    if (depth == n) return true;
    int u = order[static_cast<size_t>(depth)];
    std::vector<std::uint64_t> cand(color_mask.begin() + static_cast<size_t>(cg[static_cast<size_t>(u)]) * words,
                                    color_mask.begin() + (static_cast<size_t>(cg[static_cast<size_t>(u)]) + 1) * words);
    for (int w = 0; w < words; ++w) cand[static_cast<size_t>(w)] &= ~used[static_cast<size_t>(w)];
    // Adjacency and non-adjacency consistency against every mapped vertex.
    for (int d = 0; d < depth; ++d) {
      int x = order[static_cast<size_t>(d)];
      int y = mapping[static_cast<size_t>(x)];
      const std::uint64_t* row = hadj.row(y);
      if (g.has_edge(u, x))
        for (int w = 0; w < words; ++w) cand[static_cast<size_t>(w)] &= row[w];
      else
        for (int w = 0; w < words; ++w) cand[static_cast<size_t>(w)] &= ~row[w];
    }
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = cand[static_cast<size_t>(w)];
      while (bits) {
        int y = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        mapping[static_cast<size_t>(u)] = y;
        used[static_cast<size_t>(w)] |= 1ULL << (y % 64);
        if (extend(depth + 1)) return true;
        used[static_cast<size_t>(w)] &= ~(1ULL << (y % 64));
        mapping[static_cast<size_t>(u)] = -1;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h, int cap) {
  if (g.vertex_count() > cap || h.vertex_count() > cap)
    fail(Errc::too_large, "isomorphism test beyond vertex cap " + std::to_string(cap));
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  if (g.vertex_count() == 0) return std::vector<int>{};
  IsoSearch search(g, h);
  std::vector<int> mapping;
  if (!search.run(mapping)) return std::nullopt;
  return mapping;
}

bool are_isomorphic(const Graph& g, const Graph& h, int cap) {
  return find_isomorphism(g, h, cap).has_value();
}

}  // namespace sgx
