#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgx/graph.hpp"

namespace sgx {

// Djokovic-Winkler relation: uv theta xy iff d(u,x)+d(v,y) != d(u,y)+d(v,x).
bool theta_related(const DistanceMatrix& dm, Edge e1, Edge e2);
bool theta_related(const Graph& g, Edge e1, Edge e2);

// Partition of E(g) into classes of the transitive closure of theta. Classes
// are ordered by their lexicographically smallest edge; edges inside a class
// are sorted. Throws Errc::disconnected on disconnected input.
std::vector<std::vector<Edge>> theta_classes(const Graph& g);

// Connected, bipartite, and theta transitive (Winkler's criterion).
bool is_partial_cube(const Graph& g);

// Labels use one bit per coordinate: bit i of a label is coordinate i. The
// string form writes coordinate 0 first.
std::string label_string(std::uint64_t bits, int width);

// Graph together with an isometric binary labelling of minimal width.
struct LabelledPartialCube {
  Graph graph;
  std::vector<std::uint64_t> labels;  // one per vertex
  int idim = 0;

  std::uint64_t label(int v) const { return labels[static_cast<size_t>(v)]; }
};

// Checks every LabelledPartialCube invariant (distinct labels, Hamming
// distance equals graph distance, no constant coordinate). Throws
// Errc::invariant with a description of the first violation.
void validate(const LabelledPartialCube& L);

// Canonical embedding: coordinates are theta classes in smallest-edge order,
// and on every class the halfspace containing `base` is the 0 side.
LabelledPartialCube embed(const Graph& g, int base = 0);

// Reconstructs the graph from a distinct label set (edges = Hamming distance
// one) and validates the result.
LabelledPartialCube cube_from_labels(std::vector<std::uint64_t> labels, int width);

// Drops constant coordinates; `dropped` collects their original indices in
// ascending order. Surviving coordinates keep their relative order.
struct NormalizedLabels {
  std::vector<std::uint64_t> labels;
  int width = 0;
  std::vector<int> dropped;
};
NormalizedLabels normalize_labels(const std::vector<std::uint64_t>& labels, int width);

struct ThetaClassData {
  int index = 0;
  std::vector<Edge> F;
  std::vector<int> W0, W1;
  std::vector<int> U0, U1;
  bool peripheral0 = false;  // U0 == W0
  bool peripheral1 = false;  // U1 == W1
};

ThetaClassData theta_class_data(const LabelledPartialCube& L, int coordinate);

}  // namespace sgx
