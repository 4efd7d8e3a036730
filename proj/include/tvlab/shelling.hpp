#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tvlab/complex.hpp"

namespace tvlab {

/// One witness of the shelling condition: the facet C (earlier than B) with
/// B ∩ C = B ∖ {v}. Facets are referenced by their index in the complex's
/// facet list.
struct ShellingWitness {
  std::size_t b = 0;
  std::size_t c = 0;
  Vertex v = 0;

  friend bool operator==(const ShellingWitness&, const ShellingWitness&) = default;
};

/// A facet order (indices into `facets()`) and its certificate. For every
/// non-initial facet B the certificate lists one witness per vertex of
/// V_B = {v ∈ B : B ∖ v lies in an earlier facet}; the order is a shelling
/// iff no earlier facet contains V_B.
struct ShellingOrder {
  std::vector<std::size_t> order;
  std::vector<ShellingWitness> witnesses;
};

/// A complex together with a certified shelling of it.
struct ShelledComplex {
  SimplicialComplex complex;
  ShellingOrder shelling;
};

struct ShellingVerdict {
  bool ok = false;
  /// Position (in the order) of the first facet violating the condition.
  std::optional<std::size_t> failed_position;
  /// An earlier facet (index) for which no witness exists.
  std::optional<std::size_t> conflicting_facet;
  std::vector<ShellingWitness> witnesses;
};

/// Checks the pairwise condition: for all A before B there are C before B
/// and v ∈ B with A ∩ B ⊆ B ∩ C = B ∖ {v}. Throws NotAPermutation.
ShellingVerdict verify_shelling_pairwise(const SimplicialComplex& sigma, std::span<const std::size_t> order);

/// Checks the intersection condition: each non-initial B meets the union of
/// the earlier facets in a pure complex of dimension dim B - 1. Computed
/// from the maximal sets among {A ∩ B}. Throws NotAPermutation.
ShellingVerdict verify_shelling_intersection(const SimplicialComplex& sigma, std::span<const std::size_t> order);

/// Re-checks a stored certificate without searching for witnesses.
bool check_certificate(const SimplicialComplex& sigma, const ShellingOrder& s);

/// Shelling order of the facets as given (0, 1, ..., n - 1).
std::vector<std::size_t> identity_order(std::size_t n);

/// Stable reorder by decreasing facet size.
std::vector<std::size_t> dimension_decreasing(const SimplicialComplex& sigma, std::span<const std::size_t> order);

enum class SearchStatus { Found, NotShellable, Exhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<ShellingOrder> shelling;
  std::size_t nodes = 0;
};

/// Backtracking over dimension-decreasing orders (every shellable complex
/// has one). A facet set that admits no completion is remembered and never
/// expanded twice. `budget` bounds the number of search nodes.
SearchResult search_shelling(const SimplicialComplex& sigma, std::size_t budget = 1'000'000);

/// Shelling of the m-skeleton compatible with a shelling of `sigma`: faces
/// sorted by (earliest containing facet, lexicographic), with a per-facet
/// search as fallback. Throws InputNotShelling, BadParameter.
ShelledComplex compatible_skeleton_shelling(const SimplicialComplex& sigma, const ShellingOrder& shelling, int m);

/// True iff whenever G precedes H in `skeleton_order`, the earliest facet of
/// `sigma` containing G does not come after the one containing H.
bool is_compatible(const SimplicialComplex& sigma, const ShellingOrder& shelling, const SimplicialComplex& skel,
                   const ShellingOrder& skeleton_order);

/// Join of shelled factors (via `join`) with facets in lexicographic order
/// of their factor positions; the result is verified.
ShelledComplex lexicographic_join_shelling(std::span<const ShelledComplex> factors);

/// Sphere counts (h_1, ..., h_{d+1}) of a shellable complex, from its
/// f-triangle. Throws InputNotShelling if the order does not verify.
std::vector<std::int64_t> homotopy_from_shelling(const SimplicialComplex& sigma, const ShellingOrder& shelling);

}  // namespace tvlab
