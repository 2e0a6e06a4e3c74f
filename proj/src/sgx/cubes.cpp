#include "sgx/cubes.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "sgx/median.hpp"

namespace sgx {

bool mask_elem_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  std::uint64_t low = (a ^ b) & -(a ^ b);  // smallest differing element
  if (a & low) return (b & ~((low << 1) - 1)) != 0;  // a's element is smaller unless b is a prefix
  return (a & ~((low << 1) - 1)) == 0;
}

std::vector<std::uint64_t> clique_masks(const Graph& g, long long cap) {
  const int n = g.vertex_count();
  if (n > 64) fail(Errc::too_large, "clique enumeration supports at most 64 vertices");
  std::vector<std::uint64_t> adj(static_cast<size_t>(n), 0);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) adj[static_cast<size_t>(u)] |= 1ULL << v;

  std::vector<std::uint64_t> out;
  auto extend = [&](auto&& self, std::uint64_t base, int next) -> void {
    if (static_cast<long long>(out.size()) >= cap) fail(Errc::cap_exceeded, "clique cap exceeded");
    out.push_back(base);
    for (int v = next; v < n; ++v)
      if ((base & ~adj[static_cast<size_t>(v)]) == 0) self(self, base | 1ULL << v, v + 1);
  };
  extend(extend, 0, 0);
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return mask_elem_less(a, b);
  });
  return out;
}

std::vector<std::vector<int>> cliques(const Graph& g, long long cap) {
  std::vector<std::vector<int>> out;
  for (auto mask : clique_masks(g, cap)) {
    std::vector<int>& c = out.emplace_back();
    for (int v = 0; v < 64; ++v)
      if (mask >> v & 1) c.push_back(v);
  }
  return out;
}

LabelledPartialCube simplex_graph(const Graph& g, long long clique_cap) {
  auto masks = clique_masks(g, clique_cap);
  LabelledPartialCube L;
  L.idim = g.vertex_count();
  L.labels = masks;
  L.graph = Graph(static_cast<int>(masks.size()));
  std::unordered_map<std::uint64_t, int> index;
  index.reserve(masks.size());
  for (size_t i = 0; i < masks.size(); ++i) index.emplace(masks[i], static_cast<int>(i));
  // Cliques adjacent iff they differ in exactly one vertex, i.e. one is the
  // other minus a single element.
  for (size_t i = 0; i < masks.size(); ++i) {
    std::uint64_t m = masks[i];
    for (std::uint64_t rest = m; rest;) {
      std::uint64_t bit = rest & -rest;
      rest ^= bit;
      L.graph.add_edge(static_cast<int>(i), index.at(m ^ bit));
    }
  }
  validate(L);
  return L;
}

DaisyGenerated daisy_generate(int width, const std::vector<std::uint64_t>& generators) {
  if (width < 0 || width > 64) fail(Errc::invalid_argument, "label width out of range");
  if (generators.empty())
    fail(Errc::invalid_argument, "daisy cube needs at least one generator; use the all-zero label for K1");
  std::uint64_t universe = width == 64 ? ~0ULL : (1ULL << width) - 1;
  for (auto gen : generators)
    if (gen & ~universe) fail(Errc::invalid_argument, "generator exceeds label width");

  std::unordered_set<std::uint64_t> closed;
  std::vector<std::uint64_t> stack(generators.begin(), generators.end());
  while (!stack.empty()) {
    std::uint64_t m = stack.back();
    stack.pop_back();
    if (!closed.insert(m).second) continue;
    for (std::uint64_t rest = m; rest;) {
      std::uint64_t bit = rest & -rest;
      rest ^= bit;
      if (!closed.count(m ^ bit)) stack.push_back(m ^ bit);
    }
  }
  std::vector<std::uint64_t> labels(closed.begin(), closed.end());
  std::sort(labels.begin(), labels.end());

  DaisyGenerated out;
  auto norm = normalize_labels(labels, width);
  out.dropped = std::move(norm.dropped);
  out.cube = cube_from_labels(std::move(norm.labels), norm.width);
  return out;
}

DaisyCheck is_daisy(const LabelledPartialCube& L) {
  const int n = L.graph.vertex_count();
  std::unordered_set<std::uint64_t> shifted;
  shifted.reserve(static_cast<size_t>(n));
  for (int base = 0; base < n; ++base) {
    std::uint64_t b = L.label(base);
    shifted.clear();
    for (auto l : L.labels) shifted.insert(l ^ b);
    bool closed = true;
    for (auto l : shifted) {
      for (std::uint64_t rest = l; rest && closed;) {
        std::uint64_t bit = rest & -rest;
        rest ^= bit;
        if (!shifted.count(l ^ bit)) closed = false;
      }
      if (!closed) break;
    }
    if (closed) {
      DaisyCheck r;
      r.daisy = true;
      r.base = base;
      r.relabelling.reserve(static_cast<size_t>(n));
      for (auto l : L.labels) r.relabelling.push_back(l ^ b);
      return r;
    }
  }
  return {};
}

void Polynomial::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::string Polynomial::to_string() const {
  if (coeffs.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(coeffs[i]);
  }
  return s;
}

Polynomial Polynomial::composed_with_x_plus_1() const {
  Polynomial out;
  out.coeffs.assign(coeffs.size(), 0);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    // binomial row for (x+1)^i
    long long binom = 1;
    for (size_t j = 0; j <= i; ++j) {
      out.coeffs[j] += coeffs[i] * binom;
      binom = binom * static_cast<long long>(i - j) / static_cast<long long>(j + 1);
    }
  }
  out.trim();
  return out;
}

Polynomial cube_polynomial(const LabelledPartialCube& L) {
  if (L.idim > 20) fail(Errc::too_large, "cube polynomial supports isometric dimension up to 20");
  Polynomial p;
  p.coeffs.assign(static_cast<size_t>(L.idim) + 1, 0);
  std::unordered_map<std::uint64_t, int> groups;
  for (std::uint64_t t = 0; t < (1ULL << L.idim); ++t) {
    int size = std::popcount(t);
    groups.clear();
    for (auto l : L.labels) ++groups[l & ~t];
    long long full = 0;
    for (auto& [_, count] : groups)
      if (count == 1 << size) ++full;
    p.coeffs[static_cast<size_t>(size)] += full;
  }
  p.trim();
  return p;
}

Polynomial clique_polynomial(const Graph& g, long long clique_cap) {
  Polynomial p;
  p.coeffs.assign(static_cast<size_t>(g.vertex_count()) + 1, 0);
  for (auto mask : clique_masks(g, clique_cap)) ++p.coeffs[static_cast<size_t>(std::popcount(mask))];
  p.trim();
  return p;
}

namespace {

std::optional<Graph> preimage_from_cube(const Graph& g, const LabelledPartialCube& L, int iso_cap,
                                        long long clique_cap) {
  const int dim = L.idim;
  int base = -1;
  for (int v = 0; v < L.graph.vertex_count(); ++v)
    if (L.graph.degree(v) == dim) {
      base = v;
      break;
    }
  if (base == -1) return std::nullopt;

  std::unordered_set<std::uint64_t> labels;
  for (auto l : L.labels) labels.insert(l ^ L.label(base));
  Graph h(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (labels.count((1ULL << i) | (1ULL << j))) h.add_edge(i, j);

  // Candidate verification; clique count beyond |V(g)| already disqualifies.
  std::vector<std::uint64_t> masks;
  try {
    masks = clique_masks(h, std::min<long long>(clique_cap, g.vertex_count() + 1));
  } catch (const Error& e) {
    if (e.code() == Errc::cap_exceeded) return std::nullopt;
    throw;
  }
  if (static_cast<int>(masks.size()) != g.vertex_count()) return std::nullopt;
  if (!are_isomorphic(simplex_graph(h, clique_cap).graph, g, iso_cap)) return std::nullopt;
  return h;
}

}  // namespace

std::optional<Graph> simplex_preimage(const Graph& g, int iso_cap, long long clique_cap) {
  if (!is_median_graph(g).median) fail(Errc::not_median, "simplex preimage requires a median graph");
  return preimage_from_cube(g, embed(g, 0), iso_cap, clique_cap);
}

Theorem1Report theorem1_report(const Graph& g, int iso_cap, int idim_cap, long long clique_cap) {
  Theorem1Report r;
  r.is_median = is_median_graph(g).median;

  LabelledPartialCube L;
  bool pc = true;
  try {
    L = embed(g, 0);
  } catch (const Error&) {
    pc = false;
  }

  if (pc) {
    auto daisy = is_daisy(L);
    r.daisy = daisy.daisy;
    r.daisy_base = daisy.base;

    Graph p4(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    r.p4_free = !has_pc_minor(L, p4, idim_cap, iso_cap);

    r.all_peripheral = true;
    for (int c = 0; c < L.idim && r.all_peripheral; ++c) {
      auto data = theta_class_data(L, c);
      if (!data.peripheral0 && !data.peripheral1) r.all_peripheral = false;
    }

    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) == L.idim) {
        r.degree_equals_idim = true;
        r.degree_witness = v;
        break;
      }

    if (r.is_median) {
      r.preimage = preimage_from_cube(g, L, iso_cap, clique_cap);
      r.simplex = r.preimage.has_value();
    }
  }

  if (r.is_median) {
    bool flags[5] = {r.simplex, r.daisy, r.p4_free, r.all_peripheral, r.degree_equals_idim};
    for (bool f : flags)
      if (f != flags[0])
        fail(Errc::invariant,
             "five-way equivalence violated on a median graph (implementation bug): simplex=" +
                 std::to_string(r.simplex) + " daisy=" + std::to_string(r.daisy) + " p4free=" +
                 std::to_string(r.p4_free) + " peripheral=" + std::to_string(r.all_peripheral) +
                 " degidim=" + std::to_string(r.degree_equals_idim));
  }
  return r;
}

}  // namespace sgx
