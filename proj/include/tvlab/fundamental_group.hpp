#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tvlab/complex.hpp"

namespace tvlab {

/// A letter is a non-zero integer: +g for generator g - 1, -g for its
/// inverse.
using Word = std::vector<int>;

/// Finite group presentation. Generators are named by the oriented edges
/// (u < v) of the 1-skeleton that are not in the spanning tree.
struct GroupPresentation {
  std::vector<std::pair<Vertex, Vertex>> generators;
  std::vector<Word> relators;
};

/// Edge-path presentation of π1: spanning tree of the 1-skeleton, one
/// generator per non-tree edge and one relator per triangle. Throws
/// Disconnected unless the complex has exactly one connected component.
GroupPresentation pi1_presentation(const SimplicialComplex& sigma);

enum class Pi1Outcome {
  Trivial,       // every generator eliminated
  Free,          // generators left and no relators: a non-trivial free group
  Inconclusive,  // budget exhausted or no further move applies
};

struct Pi1Simplification {
  Pi1Outcome outcome = Pi1Outcome::Inconclusive;
  GroupPresentation remaining;
  std::size_t steps = 0;
};

/// Tietze simplification: free and cyclic reduction, deletion of trivial
/// relators, and elimination of a generator occurring exactly once in some
/// relator. `budget` bounds the number of letters rewritten.
Pi1Simplification try_trivialize(GroupPresentation p, std::size_t budget = 100'000);

std::string to_string(Pi1Outcome o);

}  // namespace tvlab
