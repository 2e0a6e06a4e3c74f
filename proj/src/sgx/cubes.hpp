#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgx/pcminor.hpp"
#include "sgx/theta.hpp"

namespace sgx {

inline constexpr long long kDefaultCliqueCap = 1 << 16;

// All cliques of g including the empty set, as vertex masks in deterministic
// (size, element-lexicographic) order. Requires at most 64 vertices.
std::vector<std::uint64_t> clique_masks(const Graph& g, long long cap = kDefaultCliqueCap);
std::vector<std::vector<int>> cliques(const Graph& g, long long cap = kDefaultCliqueCap);

// Element-lexicographic order on vertex masks ({0,3} < {1,2}, prefixes first).
bool mask_elem_less(std::uint64_t a, std::uint64_t b);

// Vertices are the cliques of g in clique_masks order, labelled by their
// characteristic vectors over V(g); edges join cliques differing in one
// vertex. The coordinate i of the labelling is exactly vertex i of g.
LabelledPartialCube simplex_graph(const Graph& g, long long clique_cap = kDefaultCliqueCap);

struct DaisyGenerated {
  LabelledPartialCube cube;
  std::vector<int> dropped;  // generator coordinates that were constant
};

// Down-closure of the generator labels inside the hypercube of the given
// width. Rejects an empty generator set.
DaisyGenerated daisy_generate(int width, const std::vector<std::uint64_t>& generators);

struct DaisyCheck {
  bool daisy = false;
  int base = -1;                          // witness base vertex
  std::vector<std::uint64_t> relabelling; // labels xored with the base label
};

// True when some base vertex orients every class so the label set becomes
// downward closed. Any daisy labelling fixes class orientations by its
// all-zero vertex, so trying every base is exhaustive.
DaisyCheck is_daisy(const LabelledPartialCube& L);

struct Polynomial {
  std::vector<long long> coeffs;  // ascending degree, no trailing zeros

  void trim();
  long long coeff(size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }
  bool operator==(const Polynomial& o) const { return coeffs == o.coeffs; }
  std::string to_string() const;            // space-separated coefficients
  Polynomial composed_with_x_plus_1() const;  // p(x+1)
};

// Counts induced i-cubes as coordinate subcubes whose 2^i label combinations
// are all present; valid because the cube is an induced subgraph of the
// hypercube, where induced subcubes are exactly coordinate subcubes.
Polynomial cube_polynomial(const LabelledPartialCube& L);

// Coefficient i counts cliques of size i; the empty clique gives a0 = 1.
Polynomial clique_polynomial(const Graph& g, long long clique_cap = kDefaultCliqueCap);

// Reconstructs H with g isomorphic to the simplex graph of H: pick a vertex
// of degree idim as the all-zero vertex, read edges of H off the weight-two
// labels, then verify the candidate by isomorphism. Requires a median graph.
std::optional<Graph> simplex_preimage(const Graph& g, int iso_cap = kDefaultIsoCap,
                                      long long clique_cap = kDefaultCliqueCap);

struct Theorem1Report {
  bool is_median = false;
  bool simplex = false;
  std::optional<Graph> preimage;
  bool daisy = false;
  int daisy_base = -1;
  bool p4_free = false;
  bool all_peripheral = false;
  bool degree_equals_idim = false;
  int degree_witness = -1;
};

// Evaluates the five conditions independently and asserts their agreement on
// median inputs (a disagreement would be an implementation bug).
Theorem1Report theorem1_report(const Graph& g, int iso_cap = kDefaultIsoCap,
                               int idim_cap = kDefaultIdimCap,
                               long long clique_cap = kDefaultCliqueCap);

}  // namespace sgx
