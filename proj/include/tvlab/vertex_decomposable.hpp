#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tvlab/complex.hpp"

namespace tvlab {

enum class ShedAction { Link, Delete };

/// Pre-order record of a decomposition tree: a shedding vertex v at depth d
/// appears as (v, Link, d) followed by the decomposition of its link, then
/// (v, Delete, d) followed by the decomposition of its deletion. Leaves
/// (simplices) produce no entries.
struct ShedStep {
  Vertex vertex = 0;
  ShedAction action = ShedAction::Link;
  int depth = 0;

  friend bool operator==(const ShedStep&, const ShedStep&) = default;
};

struct ShedSequence {
  std::vector<ShedStep> steps;
};

enum class VdStatus { Yes, No, Exhausted };

struct VdResult {
  VdStatus status = VdStatus::Exhausted;
  std::optional<ShedSequence> sequence;
  std::size_t nodes = 0;
};

/// Σ is vertex-decomposable if it has at most one facet, or some vertex v
/// has vertex-decomposable link and deletion and no facet of the link is a
/// facet of the deletion. Sub-problems are memoized on their compacted facet
/// lists; a sub-complex whose F2 Betti numbers differ from its h-diagonal
/// (or with a negative h_j) is rejected at once, since vertex-decomposable
/// complexes are shellable. `symmetries` (vertex permutations generating
/// automorphisms) restrict the top-level choice to one vertex per orbit.
VdResult is_vertex_decomposable(const SimplicialComplex& sigma, std::size_t budget = 200'000,
                                const std::vector<std::vector<Vertex>>& symmetries = {});

/// Necessary condition used for pruning: h_j ≥ 0 and β̃_{j-1} = h_j for all j.
bool passes_shellability_test(const SimplicialComplex& sigma);

/// Outcome of the deletion-chain refutation.
struct ChainRefutation {
  bool refuted = false;
  std::size_t states = 0;
  /// On failure: the vertices deleted so far and the protected vertex (if
  /// any) that could be shed next.
  std::vector<Vertex> deleted;
  std::optional<Vertex> shed;
};

/// Every decomposition starts with a chain of deletions Σ, Σ ∖ s_1, ... ending
/// in a simplex, each step shedding a vertex. This explores every such chain
/// that avoids the `guarded` vertices, keeping only steps that pass the
/// shedding-facet condition and the shellability test on link and deletion.
/// Refuted when no reachable complex is a simplex and none can shed a
/// guarded vertex; then Σ is not vertex-decomposable.
ChainRefutation refute_by_deletion_chain(const SimplicialComplex& sigma, const Face& guarded,
                                         std::size_t budget = 1'000'000);

}  // namespace tvlab
