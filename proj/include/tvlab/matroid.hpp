#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tvlab/complex.hpp"

namespace tvlab {

/// Independence complex of a matroid together with its rank and a recorded
/// family of pairwise disjoint bases.
struct Matroid {
  SimplicialComplex complex;
  int rank = 0;
  bool verified = false;
  std::vector<Face> disjoint_bases;
};

/// U_{m,n}: all subsets of size ≤ m of the given ground set. Throws BadRank
/// unless 0 ≤ m ≤ |ground|.
Matroid uniform_matroid(int m, std::vector<VertexInfo> ground);
Matroid uniform_matroid(int m, int n, const std::string& prefix = "e");

/// Direct sum (= join of the independence complexes). Ground sets are laid
/// out part after part; labels are suffixed with "#<part>" when they would
/// otherwise collide.
Matroid direct_sum(std::span<const Matroid> parts);

/// The counterexample family: blocks E_i = {v_i^1..v_i^r} (i < r) and
/// E_r = {w_1..w_r}; independent sets have at most one element per block
/// E_i, i < r, and at most r elements in total. Throws BadParameter for r < 2.
Matroid build_mr(int r);

/// The same construction with blocks of size r + 1: rank r and r + 1
/// disjoint bases. Throws BadParameter for r < 2.
Matroid build_mr_prime(int r);

/// Shared construction: rank r, r - 1 "v" blocks and one "w" block of `width`
/// elements each, truncated to rank r.
Matroid build_block_matroid(int r, int width);

enum class MatroidCheck { Exhaustive, Exchange };

/// Outcome of a matroid axiom check. On failure `witness_a`/`witness_b` hold
/// either (A, maximal impure face) for the restriction check or (I, J) for
/// the exchange check.
struct MatroidVerdict {
  bool is_matroid = true;
  std::optional<Face> witness_a;
  std::optional<Face> witness_b;
};

/// Exhaustive mode checks purity of Σ|A for every vertex subset A (at most 24
/// vertices); exchange mode checks the augmentation axiom on all pairs of
/// faces.
MatroidVerdict is_matroid(const SimplicialComplex& sigma, MatroidCheck mode);

/// A maximum family of pairwise disjoint facets of size `rank`, by exact
/// backtracking.
std::vector<Face> disjoint_bases(const Matroid& m);

/// Vertices contained in every basis.
Face coloops(const Matroid& m);
bool has_coloops(const Matroid& m);

/// Chessboard complex Δ_{k,r}: k rows and r columns, faces are placements of
/// non-attacking rooks.
SimplicialComplex chessboard(int k, int r);

}  // namespace tvlab
