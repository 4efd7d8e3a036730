#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tvlab/complex.hpp"
#include "tvlab/f2_matrix.hpp"

namespace tvlab {

/// Augmented chain complex over the two-element field. Dimension d runs from
/// -1 (the single empty cell) to `top_dim()`; `boundary(d)` maps C_d to
/// C_{d-1}, so `boundary(0)` is the augmentation.
struct ChainComplexF2 {
  std::vector<std::size_t> cell_counts;        // index d + 1
  std::vector<SparseF2Matrix> boundaries;      // index d, d >= 0

  int top_dim() const { return static_cast<int>(cell_counts.size()) - 2; }
  std::size_t count(int d) const;
  const SparseF2Matrix& boundary(int d) const { return boundaries.at(static_cast<std::size_t>(d)); }
};

/// Simplicial chains; cells of dimension d are `sigma.faces().of_dim(d)` in
/// table order.
ChainComplexF2 chain_complex(const SimplicialComplex& sigma);

/// True iff ∂_{d-1} ∘ ∂_d = 0 for every d.
bool boundary_squared_vanishes(const ChainComplexF2& c);

/// Σ_d (-1)^d |C_d| for d ≥ -1.
std::int64_t reduced_euler_characteristic(const ChainComplexF2& c);

/// Reduced Betti numbers over the two-element field. `minus_one` is β̃_{-1}
/// (1 only for the complex {∅}); `values[i]` is β̃_i.
struct BettiVector {
  std::int64_t minus_one = 0;
  std::vector<std::int64_t> values;

  std::int64_t at(int i) const;
  /// Σ_i (-1)^i β̃_i including i = -1.
  std::int64_t alternating_sum() const;
  bool all_zero() const;
  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// Ranks by sparse column reduction with clearing (top dimension first).
BettiVector betti_f2(const ChainComplexF2& c);
BettiVector betti_f2(const SimplicialComplex& sigma);
/// Independent route: dense bit-packed elimination of every boundary matrix.
BettiVector betti_f2_dense(const ChainComplexF2& c);

/// Largest c with β̃_i = 0 for all i ≤ c, capped at the top dimension. -2 for
/// the void complex and for {∅}; -1 when β̃_0 ≠ 0.
int homological_connectivity(const BettiVector& b, bool is_void);

/// Endomorphism of H_dim induced by a simplicial map, written in a basis of
/// homology classes; column h is the image of class h.
struct InducedMap {
  int dim = 0;
  BitMatrix matrix;

  std::size_t homology_rank() const { return matrix.rows(); }
};

/// Map induced on H_dim by a simplicial involution given as a vertex
/// permutation. Throws NotAPermutation, NotAnAutomorphism, NotInvolution.
InducedMap induced_involution(const SimplicialComplex& sigma, std::span<const Vertex> perm, int dim);

/// Same computation without the φ² = id requirement.
InducedMap induced_automorphism(const SimplicialComplex& sigma, std::span<const Vertex> perm, int dim);

/// rank(1 + t).
std::size_t rank_one_plus(const InducedMap& m);

/// An involution t makes F2^n a free F2[Z/2]-module iff rank(1 + t) = n / 2;
/// odd n is never free. Throws NotInvolution if t² ≠ 1.
bool is_free_f2z2(const InducedMap& m);

}  // namespace tvlab
