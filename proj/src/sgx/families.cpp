#include "sgx/families.hpp"

#include <algorithm>

namespace sgx {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) fail(Errc::invalid_argument, what);
}

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph complete_graph(int n) {
  require(n >= 0, "complete graph needs n >= 0");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

LabelledPartialCube cube_of_masks(std::vector<std::uint64_t> masks, int width) {
  auto norm = normalize_labels(masks, width);
  return cube_from_labels(std::move(norm.labels), norm.width);
}

std::vector<std::uint64_t> hypercube_masks(int n) {
  require(n >= 0 && n <= 12, "hypercube needs 0 <= n <= 12");
  std::vector<std::uint64_t> masks;
  masks.reserve(1ULL << n);
  for (std::uint64_t m = 0; m < (1ULL << n); ++m) masks.push_back(m);
  return masks;
}

FamilyResult labelled(LabelledPartialCube cube, std::string note = {}) {
  FamilyResult r;
  r.graph = cube.graph;
  r.cube = std::move(cube);
  r.note = std::move(note);
  return r;
}

FamilyResult plain(Graph g, std::string note = {}) {
  FamilyResult r;
  r.graph = std::move(g);
  r.note = std::move(note);
  return r;
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "complete",     "path",        "cycle",       "hypercube",   "complement_path",
      "complement_cycle", "gear",    "fibonacci_cube", "lucas_cube", "q_minus",
      "q_minus_plus", "q_minus_minus", "h_graph",   "h_minus_minus",
  };
  return names;
}

std::optional<Family> family_from_name(const std::string& name) {
  const auto& names = family_names();
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<Family>(i);
  return std::nullopt;
}

FamilyResult generate(Family family, int n) {
  switch (family) {
    case Family::Complete:
      return plain(complete_graph(n));
    case Family::Path:
      return plain(path_graph(n));
    case Family::Cycle:
      return plain(cycle_graph(n));
    case Family::Hypercube:
      return labelled(cube_of_masks(hypercube_masks(n), n), "vertex v carries label bits of v");
    case Family::ComplementPath:
      return plain(complement(path_graph(n)));
    case Family::ComplementCycle:
      return plain(complement(cycle_graph(n)));
    case Family::Gear: {
      require(n >= 3, "gear needs n >= 3");
      // hub 0; rim vertices 1..2n in a cycle; hub joined to every second one
      Graph g(2 * n + 1);
      for (int k = 0; k < 2 * n; ++k) g.add_edge(1 + k, 1 + (k + 1) % (2 * n));
      for (int t = 0; t < n; ++t) g.add_edge(0, 1 + 2 * t);
      return plain(g, "hub 0, rim 1..2n; hub neighbors the odd rim positions");
    }
    case Family::FibonacciCube: {
      require(n >= 1 && n <= 16, "fibonacci_cube needs 1 <= n <= 16");
      std::vector<std::uint64_t> masks;
      for (std::uint64_t m = 0; m < (1ULL << n); ++m)
        if ((m & (m << 1)) == 0) masks.push_back(m);
      return labelled(cube_of_masks(std::move(masks), n), "binary strings without adjacent ones");
    }
    case Family::LucasCube: {
      require(n >= 1 && n <= 16, "lucas_cube needs 1 <= n <= 16");
      std::vector<std::uint64_t> masks;
      for (std::uint64_t m = 0; m < (1ULL << n); ++m) {
        std::uint64_t rot = ((m << 1) | (m >> (n - 1))) & ((1ULL << n) - 1);
        if ((m & rot) == 0) masks.push_back(m);
      }
      return labelled(cube_of_masks(std::move(masks), n), "binary strings without circularly adjacent ones");
    }
    case Family::QMinus: {
      require(n >= 1 && n <= 12, "q_minus needs 1 <= n <= 12");
      auto masks = hypercube_masks(n);
      masks.pop_back();  // the all-ones mask is the largest
      return labelled(cube_of_masks(std::move(masks), n), "hypercube minus the all-ones vertex");
    }
    case Family::QMinusPlus: {
      require(n >= 2 && n <= 12, "q_minus_plus needs 2 <= n <= 12");
      // Vertices 0..2^n-2 are the hypercube masks below all-ones; the pendant
      // vertex 2^n-1 attaches to the mask with only coordinate n-1 set.
      int top = (1 << n) - 1;
      Graph g(top + 1);
      for (int m = 0; m < top; ++m)
        for (int i = 0; i < n; ++i) {
          int other = m ^ (1 << i);
          if (other < top && other > m) g.add_edge(m, other);
        }
      g.add_edge(1 << (n - 1), top);
      return plain(g, "vertex v<2^n-1 is hypercube mask v; pendant vertex 2^n-1 at mask 2^(n-1)");
    }
    case Family::QMinusMinus: {
      require(n >= 3 && n <= 12, "q_minus_minus needs 3 <= n <= 12");
      auto masks = hypercube_masks(n);
      masks.erase(masks.begin());
      masks.pop_back();
      return labelled(cube_of_masks(std::move(masks), n), "hypercube minus all-zeros and all-ones");
    }
    case Family::HGraph: {
      require(n >= 2 && n <= 12, "h_graph needs 2 <= n <= 12");
      return plain(cartesian_product(path_graph(3), generate(Family::Hypercube, n - 2).graph),
                   "vertex (p,q) of P3 box Q_(n-2) is index p*2^(n-2)+q");
    }
    case Family::HMinusMinus: {
      require(n >= 4 && n <= 12, "h_minus_minus needs 4 <= n <= 12");
      Graph h = generate(Family::HGraph, n).graph;
      int block = 1 << (n - 2);
      // delete (path 0, mask 0...0) = index 0 and (path 2, mask 1...1) = last index
      int remove_a = 0;
      int remove_b = 3 * block - 1;
      Graph g(h.vertex_count() - 2);
      auto keep_index = [&](int v) { return v == remove_a || v == remove_b ? -1 : v - (v > remove_a ? 1 : 0); };
      for (auto [u, v] : h.edges()) {
        int a = keep_index(u), b = keep_index(v);
        if (a != -1 && b != -1) g.add_edge(a, b);
      }
      return plain(g, "h_graph minus indices 0 (=0,0..0) and 3*2^(n-2)-1 (=2,1..1); survivors renumbered");
    }
  }
  fail(Errc::invalid_argument, "unknown family");
}

FamilyResult generate(const std::string& name, int n) {
  auto family = family_from_name(name);
  if (!family) fail(Errc::invalid_argument, "unknown family: " + name);
  return generate(*family, n);
}

Graph complement(const Graph& g) {
  Graph out(g.vertex_count());
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count(), nh = h.vertex_count();
  Graph out(ng * nh);
  auto id = [nh](int u, int v) { return u * nh + v; };
  for (int u = 0; u < ng; ++u)
    for (auto [a, b] : h.edges()) out.add_edge(id(u, a), id(u, b));
  for (int v = 0; v < nh; ++v)
    for (auto [a, b] : g.edges()) out.add_edge(id(a, v), id(b, v));
  return out;
}

}  // namespace sgx
