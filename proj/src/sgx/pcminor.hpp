#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgx/theta.hpp"

namespace sgx {

enum class MinorAction : char {
  Keep = 'K',
  Contract = 'C',
  Restrict0 = '0',
  Restrict1 = '1',
};

// One action per coordinate of the source cube.
using MinorSpec = std::vector<MinorAction>;

MinorSpec parse_minor_spec(const std::string& text);
std::string to_string(const MinorSpec& spec);

struct MinorResult {
  LabelledPartialCube cube;
  std::vector<int> kept;        // result coordinate -> source coordinate
  std::vector<int> dropped;     // Keep coordinates that became constant
  std::vector<int> vertex_map;  // source vertex -> result vertex, -1 if gone
};

// Restrictions are applied as one halfspace intersection, then contractions
// merge vertices whose labels agree outside the contracted coordinates.
// Throws Errc::empty_minor when no vertex satisfies the restrictions.
MinorResult apply_spec(const LabelledPartialCube& L, const MinorSpec& spec);

MinorResult contract_class(const LabelledPartialCube& L, int coordinate);
MinorResult restrict_class(const LabelledPartialCube& L, int coordinate, int side);

inline constexpr int kDefaultIdimCap = 12;

// Exhaustive pc-minor containment: keep exactly idim(h) coordinates and try
// every {Contract, Restrict0, Restrict1} assignment on the rest. Larger keep
// sets whose kept classes collapse are covered by smaller ones. Returns the
// first witness spec in enumeration order.
std::optional<MinorSpec> find_pc_minor(const LabelledPartialCube& L, const Graph& h,
                                       int idim_cap = kDefaultIdimCap, int iso_cap = kDefaultIsoCap);
bool has_pc_minor(const LabelledPartialCube& L, const Graph& h,
                  int idim_cap = kDefaultIdimCap, int iso_cap = kDefaultIsoCap);

struct MinorFreeResult {
  bool free = true;
  int forbidden_index = -1;  // which forbidden graph was found
  MinorSpec witness;
};

MinorFreeResult is_pc_minor_free(const LabelledPartialCube& L, const std::vector<Graph>& forbidden,
                                 int idim_cap = kDefaultIdimCap, int iso_cap = kDefaultIsoCap);

// Two classes cross when all four coordinate sign patterns occur.
bool crossing(const LabelledPartialCube& L, int i, int j);

// Graph on the theta classes; edge ij iff classes i and j cross.
Graph crossing_graph(const LabelledPartialCube& L);

// Deduplication key: identical strings mean identical label sets up to a
// coordinate permutation (exact for idim <= 8, coarse invariants above).
std::string canonical_key(const LabelledPartialCube& L);

struct EnumeratedMinor {
  MinorSpec spec;  // first spec producing this minor
  LabelledPartialCube cube;
};

// Every proper pc-minor, deduplicated via canonical_key (key collisions are
// resolved exactly with an isomorphism check).
std::vector<EnumeratedMinor> proper_pc_minors(const LabelledPartialCube& L, int idim_cap = 8,
                                              int iso_cap = kDefaultIsoCap);

}  // namespace sgx
