#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tvlab/complex.hpp"
#include "tvlab/homology.hpp"
#include "tvlab/matroid.hpp"

namespace tvlab {

/// A cell relint(σ_1) × ... × relint(σ_k) with pairwise disjoint non-empty
/// faces σ_i.
struct ProductCell {
  std::vector<Face> factors;

  int dim() const;
  friend bool operator==(const ProductCell&, const ProductCell&) = default;
};

/// The k-fold deleted product as a regular cell complex. Cells of dimension
/// d are stored flat in `cells[d]` (k faces per cell), sorted by tuple.
struct CWProductComplex {
  SimplicialComplex base;
  int k = 0;
  std::vector<std::vector<Face>> cells;

  int top_dim() const { return static_cast<int>(cells.size()) - 1; }
  std::size_t count(int d) const;
  std::size_t total() const;
  ProductCell cell(int d, std::size_t i) const;
  /// Index of a cell within its dimension, or npos.
  std::size_t index_of(std::span<const Face> factors) const;
};

inline constexpr std::size_t kDefaultCellBudget = 5'000'000;

/// All k-tuples of pairwise disjoint non-empty faces. Throws BadParameter for
/// k < 1 and BudgetExceeded when more than `cell_budget` cells would be made.
CWProductComplex deleted_product(const SimplicialComplex& sigma, int k,
                                 std::size_t cell_budget = kDefaultCellBudget);

/// Number of cells without building them (same budget rule).
std::size_t count_product_cells(const SimplicialComplex& sigma, int k, std::size_t cell_budget = kDefaultCellBudget);

/// Cellular chains over the two-element field, augmented in degree -1:
/// ∂(A_1, ..., A_k) = Σ_i Σ_{v ∈ A_i, |A_i| ≥ 2} (A_1, ..., A_i ∖ v, ..., A_k).
ChainComplexF2 product_chain_complex(const CWProductComplex& p);

/// Largest c with β̃_i = 0 for i ≤ c; -2 when there are no cells, -1 when
/// disconnected.
int homological_connectivity(const CWProductComplex& p);

/// The 2-fold deleted product, a deformation retract of Conf(M, 2).
CWProductComplex conf2(const Matroid& m, std::size_t cell_budget = kDefaultCellBudget);

/// Computed homology of M^{×k}_Δ next to the connectivity statements for it.
struct DeletedProductReport {
  int r = 0;
  int b = 0;
  int k = 0;
  std::vector<std::size_t> cell_counts;  // index d
  BettiVector betti;
  int connectivity = -2;
  /// b, k, r ≥ 2, r ≥ k and b ≥ k.
  bool hypotheses_hold = false;
  /// r - 2 - ⌊r(k - 1)/b⌋.
  int lower_bound = 0;
  bool bound_respected = false;
  /// The two readings of the exact-connectivity hypothesis.
  bool b_at_least_r_k_minus_1_plus_1 = false;      // b ≥ r(k-1) + 1
  bool b_at_least_r_minus_1_k_minus_1_plus_1 = false;  // b ≥ (r-1)(k-1) + 1
};

/// Uses the recorded disjoint bases of `m` for b.
DeletedProductReport analyze_deleted_product(const Matroid& m, int k, std::size_t cell_budget = kDefaultCellBudget);

/// r - 2 - ⌊r(k-1)/b⌋ (floor division for positive arguments).
int deleted_product_lower_bound(int r, int b, int k);

}  // namespace tvlab
