#pragma once

#include <iosfwd>
#include <string>

#include "sgx/asc.hpp"
#include "sgx/graph.hpp"
#include "sgx/theta.hpp"

namespace sgx {

// Edge-list text: first line "n m", then m lines "u v" with 0-based indices.
// Blank lines and '#' comments are ignored. Parse errors carry the offending
// line number.
Graph parse_edge_list(std::istream& in);
std::string format_edge_list(const Graph& g);

// Label text: one bit string per line, all of equal width; "-" denotes the
// empty label (width 0). The graph is rebuilt from Hamming-distance-1 pairs
// and the labelling is validated.
LabelledPartialCube parse_label_lines(std::istream& in);
std::string format_label_lines(const LabelledPartialCube& L);

// Complex text: first line the ground size, then one facet per line as
// space-separated 1-based elements; "-" is the empty facet.
SimplicialComplex parse_complex(std::istream& in);
std::string format_complex(const SimplicialComplex& c);

std::string format_dot(const Graph& g);

}  // namespace sgx
