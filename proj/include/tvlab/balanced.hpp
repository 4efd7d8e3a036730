#pragma once

#include <optional>
#include <vector>

#include "tvlab/complex.hpp"
#include "tvlab/shelling.hpp"

namespace tvlab {

/// Ordered partition of the vertex set: `color[v]` in 0..colors-1.
struct VertexColoring {
  std::vector<int> color;
  int colors = 0;

  int count(const Face& f, int c) const;
  std::vector<int> type_of(const Face& f) const;
};

/// Coloring by the `row` field of the vertex table (row i gets color i - 1).
VertexColoring row_coloring(const SimplicialComplex& sigma);

/// The type vector a when `sigma` is pure and every facet meets color class
/// i in exactly a_i vertices; nullopt otherwise.
std::optional<std::vector<int>> balanced_type(const SimplicialComplex& sigma, const VertexColoring& coloring);

/// Faces with at most b_i vertices of color i. Throws NotBalanced, or
/// BadParameter unless 0 ≤ b_i ≤ a_i.
SimplicialComplex balanced_b_skeleton(const SimplicialComplex& sigma, const VertexColoring& coloring,
                                      const std::vector<int>& b);

/// Pure shelling of the balanced b-skeleton, by lowering one b_i at a time:
/// take a compatible shelling of the codimension-one skeleton and restrict
/// it to the faces of the lowered type. Each stage is verified. Throws
/// InputNotShelling, NotBalanced, BadParameter.
ShelledComplex shell_balanced_skeleton(const SimplicialComplex& sigma, const VertexColoring& coloring,
                                       const std::vector<int>& b, const ShellingOrder& shelling);

}  // namespace tvlab
