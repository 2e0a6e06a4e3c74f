#include "sgx/asc.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "sgx/cubes.hpp"

namespace sgx {

namespace {

void sort_masks(std::vector<std::uint64_t>& masks) {
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return mask_elem_less(a, b);
  });
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int ground_size,
                                                 const std::vector<std::vector<int>>& sets) {
  if (ground_size < 0 || ground_size > 64) fail(Errc::invalid_argument, "ground size out of range");
  std::vector<std::uint64_t> masks;
  masks.reserve(sets.size());
  for (const auto& s : sets) {
    std::uint64_t m = 0;
    for (int e : s) {
      if (e < 0 || e >= ground_size)
        fail(Errc::invalid_argument, "element out of range: " + std::to_string(e));
      m |= 1ULL << e;
    }
    masks.push_back(m);
  }
  return from_facet_masks(ground_size, std::move(masks));
}

SimplicialComplex SimplicialComplex::from_facet_masks(int ground_size,
                                                      std::vector<std::uint64_t> masks) {
  if (ground_size < 0 || ground_size > 64) fail(Errc::invalid_argument, "ground size out of range");
  std::uint64_t universe = ground_size == 64 ? ~0ULL : (1ULL << ground_size) - 1;
  for (auto m : masks)
    if (m & ~universe) fail(Errc::invalid_argument, "facet element out of range");
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  // Keep the inclusion-maximal members only.
  std::vector<std::uint64_t> maximal;
  for (auto m : masks) {
    bool dominated = false;
    for (auto other : masks)
      if (other != m && (m & ~other) == 0) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(m);
  }
  sort_masks(maximal);
  SimplicialComplex c;
  c.ground_ = ground_size;
  c.facets_ = std::move(maximal);
  return c;
}

std::vector<std::vector<int>> SimplicialComplex::facets() const {
  std::vector<std::vector<int>> out;
  out.reserve(facets_.size());
  for (auto m : facets_) {
    auto& f = out.emplace_back();
    for (int e = 0; e < ground_; ++e)
      if (m >> e & 1) f.push_back(e);
  }
  return out;
}

bool SimplicialComplex::is_face(std::uint64_t mask) const {
  for (auto f : facets_)
    if ((mask & ~f) == 0) return true;
  return false;
}

std::vector<std::uint64_t> SimplicialComplex::faces(long long cap) const {
  std::unordered_set<std::uint64_t> seen;
  for (auto f : facets_) {
    // enumerate all submasks of f
    std::uint64_t sub = f;
    for (;;) {
      seen.insert(sub);
      if (static_cast<long long>(seen.size()) > cap) fail(Errc::cap_exceeded, "face cap exceeded");
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  std::vector<std::uint64_t> out(seen.begin(), seen.end());
  sort_masks(out);
  return out;
}

std::uint64_t m_operator(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return (a & b) | (a & c) | (b & c);
}

MedianPropertyResult check_median_property(const SimplicialComplex& complex, bool weak,
                                           long long triple_cap) {
  MedianPropertyResult r;
  std::vector<std::uint64_t> family;
  if (weak) {
    family = complex.facet_masks();
  } else {
    family = complex.faces();
    auto f = static_cast<unsigned __int128>(family.size());
    if (f * f * f > static_cast<unsigned __int128>(triple_cap) * 6)
      fail(Errc::cap_exceeded, "face triple cap exceeded");
  }
  // Triples with a repeated member reduce to M(A,A,B) = A, always a face.
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i; j < family.size(); ++j)
      for (size_t k = j; k < family.size(); ++k) {
        std::uint64_t m = m_operator(family[i], family[j], family[k]);
        if (!complex.is_face(m)) {
          r.holds = false;
          r.witness = {family[i], family[j], family[k]};
          return r;
        }
      }
  return r;
}

SimplicialComplex clique_complex(const Graph& g, long long clique_cap) {
  auto masks = clique_masks(g, clique_cap);
  // Maximal cliques only; a clique is maximal iff no superset clique exists,
  // which from_facet_masks resolves.
  return SimplicialComplex::from_facet_masks(g.vertex_count(), std::move(masks));
}

std::optional<Realization> realize_as_clique_complex(const SimplicialComplex& complex,
                                                     long long clique_cap) {
  Realization real;
  std::vector<int> ground_to_vertex(static_cast<size_t>(complex.ground_size()), -1);
  for (int e = 0; e < complex.ground_size(); ++e)
    if (complex.is_face(1ULL << e)) {
      ground_to_vertex[static_cast<size_t>(e)] = static_cast<int>(real.vertex_to_ground.size());
      real.vertex_to_ground.push_back(e);
    }
  real.graph = Graph(static_cast<int>(real.vertex_to_ground.size()));
  for (size_t a = 0; a < real.vertex_to_ground.size(); ++a)
    for (size_t b = a + 1; b < real.vertex_to_ground.size(); ++b) {
      std::uint64_t pair = (1ULL << real.vertex_to_ground[a]) | (1ULL << real.vertex_to_ground[b]);
      if (complex.is_face(pair)) real.graph.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
  for (auto clique : clique_masks(real.graph, clique_cap)) {
    std::uint64_t mask = 0;
    for (int v = 0; v < real.graph.vertex_count(); ++v)
      if (clique >> v & 1) mask |= 1ULL << real.vertex_to_ground[static_cast<size_t>(v)];
    if (!complex.is_face(mask)) return std::nullopt;
  }
  return real;
}

}  // namespace sgx
