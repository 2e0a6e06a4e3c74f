#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "sgx/graph.hpp"

namespace sgx {

inline constexpr long long kDefaultFaceTripleCap = 1LL << 18;

// Downward-closed family of subsets of {0..ground_size-1}, stored by its
// facets (the inclusion-maximal faces). The family with no facets has no
// faces at all, not even the empty set.
class SimplicialComplex {
public:
  SimplicialComplex() = default;
  static SimplicialComplex from_facets(int ground_size, const std::vector<std::vector<int>>& sets);
  static SimplicialComplex from_facet_masks(int ground_size, std::vector<std::uint64_t> masks);

  int ground_size() const { return ground_; }
  const std::vector<std::uint64_t>& facet_masks() const { return facets_; }
  std::vector<std::vector<int>> facets() const;

  bool is_face(std::uint64_t mask) const;

  // All faces in (size, element-lexicographic) order. Throws
  // Errc::cap_exceeded when there are more than `cap` faces.
  std::vector<std::uint64_t> faces(long long cap = 1LL << 22) const;

  bool operator==(const SimplicialComplex& o) const { return ground_ == o.ground_ && facets_ == o.facets_; }

private:
  int ground_ = 0;
  std::vector<std::uint64_t> facets_;  // antichain in (size, element-lex) order
};

// (A&B) | (A&C) | (B&C) on element masks.
std::uint64_t m_operator(std::uint64_t a, std::uint64_t b, std::uint64_t c);

struct MedianPropertyResult {
  bool holds = true;
  std::optional<std::array<std::uint64_t, 3>> witness;  // first failing triple
};

// weak=true quantifies over facet triples, weak=false over all face triples
// (subject to the triple cap).
MedianPropertyResult check_median_property(const SimplicialComplex& complex, bool weak,
                                           long long triple_cap = kDefaultFaceTripleCap);

// Facets are the maximal cliques of g; ground set is V(g).
SimplicialComplex clique_complex(const Graph& g, long long clique_cap);

struct Realization {
  Graph graph;                       // one vertex per singleton face
  std::vector<int> vertex_to_ground; // graph vertex -> ground element
};

// 1-skeleton candidate: vertices are singleton faces, edges the two-element
// faces. Succeeds iff every clique of the candidate is a face. Ground
// elements in no face are left out of the graph.
std::optional<Realization> realize_as_clique_complex(const SimplicialComplex& complex,
                                                     long long clique_cap);

}  // namespace sgx
