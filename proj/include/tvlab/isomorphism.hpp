#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tvlab/complex.hpp"

namespace tvlab {

/// Canonical relabeling of a complex: `labeling[v]` is the new index of
/// vertex v, and `facets` is the facet list after relabeling, sorted by mask.
/// Two complexes on the same number of vertices are isomorphic iff their
/// canonical facet lists are equal.
struct CanonicalForm {
  std::vector<Vertex> labeling;
  std::vector<Face> facets;
};

/// Vertices are first split by an iterated incidence refinement; all
/// orderings compatible with the refined classes are then tried and the
/// smallest facet list is kept. Throws BudgetExceeded when more than `budget`
/// orderings would be needed.
CanonicalForm canonical_form(const SimplicialComplex& sigma, std::size_t budget = 5'000'000);

/// A vertex bijection a -> b mapping facets onto facets, or nullopt. The two
/// complexes should have no unused vertices (see `compact`).
std::optional<std::vector<Vertex>> find_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b,
                                                    std::size_t budget = 5'000'000);

}  // namespace tvlab
