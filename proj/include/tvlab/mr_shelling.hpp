#pragma once

#include <cstddef>
#include <vector>

#include "tvlab/complex.hpp"
#include "tvlab/shelling.hpp"

namespace tvlab {

/// The explicit shelling of the 2-fold deleted join of the block matroid
/// (width r for M_r, r + 1 for M'_r).
///
/// Facets of the r-fold join of chessboard complexes Δ_{2,width} come first,
/// in the lexicographic join order built from a searched shelling of
/// Δ_{2,width}. The others are sorted by x = (|A_1^r|, |A_2^r|) (counts in the
/// last block per row) under ≺, then by A^r lexicographically, then by the
/// position of the remaining part in a shelling of the balanced b-skeleton
/// of the (r-1)-fold chessboard join, b_i = min(r - x_i, r - 1).
struct BlockJoinShelling {
  int r = 0;
  int width = 0;
  SimplicialComplex complex;
  ShellingOrder shelling;
  /// Number of leading facets that belong to the chessboard join.
  std::size_t chessboard_facets = 0;
  /// The searched shelling of Δ_{2,width} (indices into chessboard(2, width)).
  ShellingOrder chessboard_shelling;
};

/// Throws BadParameter for r < 3 (width r) or r < 2 (width r + 1), and
/// InputNotShelling if the assembled order fails to verify.
BlockJoinShelling shelling_block_join(int r, int width);
BlockJoinShelling shelling_mr2(int r);
BlockJoinShelling shelling_mr2_prime(int r);

/// x ≺ y: compare the decreasingly sorted pairs lexicographically, then the
/// pairs themselves.
bool precedes(std::pair<int, int> x, std::pair<int, int> y);

/// Exchange of the two rows of a 2-fold deleted join on `base_vertices`
/// base vertices.
std::vector<Vertex> row_swap(std::size_t base_vertices);

/// Generators of the symmetry group of (M_r)^{*2}_Δ used for search
/// reduction: row exchange, exchange of adjacent blocks among the first
/// r - 1, and exchange of adjacent columns within a block.
std::vector<std::vector<Vertex>> block_join_symmetries(int r, int width);

/// The covering of (M_r)^{*2}_Δ by the subcomplexes generated by the facets
/// of dimension 2r - 1 and 2r - 2, split into connected components.
struct MrCovering {
  SimplicialComplex whole;
  SimplicialComplex top;      // Σ_{2r-1}
  SimplicialComplex lower;    // Σ_{2r-2}
  SimplicialComplex lower1;   // component containing the smallest facet
  SimplicialComplex lower2;
  SimplicialComplex meet1;    // top ∩ lower1
  SimplicialComplex meet2;    // top ∩ lower2
  std::vector<Vertex> swap;
  /// swap(lower1) == lower2 and swap(meet1) == meet2, checked on facets.
  bool swap_exchanges_components = false;
};

/// Throws BadParameter for r < 2.
MrCovering covering_subcomplexes(int r);

}  // namespace tvlab
