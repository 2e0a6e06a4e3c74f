#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgx/theta.hpp"

namespace sgx {

enum class Family {
  Complete,
  Path,
  Cycle,
  Hypercube,
  ComplementPath,
  ComplementCycle,
  Gear,
  FibonacciCube,
  LucasCube,
  QMinus,       // hypercube minus the all-ones vertex
  QMinusPlus,   // QMinus plus a pendant at 0...01
  QMinusMinus,  // hypercube minus all-zeros and all-ones
  HGraph,       // P3 box Q_{n-2}
  HMinusMinus,  // HGraph minus 00...0 and 21...1
};

std::optional<Family> family_from_name(const std::string& name);
const std::vector<std::string>& family_names();

struct FamilyResult {
  Graph graph;
  std::optional<LabelledPartialCube> cube;  // for families with a canonical labelling
  std::string note;                         // generator metadata (index conventions)
};

FamilyResult generate(Family family, int n);
FamilyResult generate(const std::string& name, int n);

Graph complement(const Graph& g);

// Vertex (u, v) of g box h becomes index u * |V(h)| + v.
Graph cartesian_product(const Graph& g, const Graph& h);

}  // namespace sgx
