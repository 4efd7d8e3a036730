#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tvlab/error.hpp"
#include "tvlab/face.hpp"

namespace tvlab {

/// Vertex metadata. `row` is the 1-based join copy a vertex belongs to,
/// `block` the 1-based block of the matroid constructions.
struct VertexInfo {
  std::string label;
  std::optional<int> row;
  std::optional<int> block;

  friend bool operator==(const VertexInfo&, const VertexInfo&) = default;
};

/// All faces of a complex grouped by dimension. `by_dim[d + 1]` holds the
/// d-dimensional faces in ascending mask order; `by_dim[0]` is {∅} unless the
/// complex is void.
struct FaceTable {
  std::vector<std::vector<Face>> by_dim;

  int top_dim() const { return static_cast<int>(by_dim.size()) - 2; }
  const std::vector<Face>& of_dim(int d) const { return by_dim.at(static_cast<std::size_t>(d + 1)); }
  std::size_t count(int d) const;
  std::size_t total() const;
  /// Position of `f` within `of_dim(f.dim())`, or nullopt.
  std::optional<std::size_t> index_of(const Face& f) const;
  bool contains(const Face& f) const { return index_of(f).has_value(); }
};

/// A finite abstract simplicial complex given by its facets.
///
/// Facets are stored in canonical order (decreasing size, then lexicographic)
/// and always form an antichain. The complex with no faces at all is the
/// *void* complex; the complex {∅} has the single facet ∅. Values are
/// immutable; the face table is computed on first use and shared between
/// copies.
class SimplicialComplex {
 public:
  SimplicialComplex();

  /// Throws NotAntichain if some facet contains another, VertexOutOfRange if a
  /// facet uses a vertex outside the table.
  SimplicialComplex(std::vector<VertexInfo> vertices, std::vector<Face> facets);

  /// Keeps only the inclusion-maximal sets among `generators`.
  static SimplicialComplex from_generators(std::vector<VertexInfo> vertices,
                                           std::vector<Face> generators);

  static SimplicialComplex void_complex(std::vector<VertexInfo> vertices = {});

  const std::vector<VertexInfo>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<Face>& facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }

  bool is_void() const { return facets_.empty(); }
  /// -1 for {∅}; the void complex reports -2.
  int dimension() const;
  bool is_pure() const;
  /// Set of vertices used by some facet.
  Face support() const;

  /// Membership test by facet scan.
  bool contains(const Face& f) const;
  std::optional<std::size_t> facet_index(const Face& f) const;

  const FaceTable& faces() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
  }

 private:
  struct Cache;
  std::vector<VertexInfo> vertices_;
  std::vector<Face> facets_;
  std::shared_ptr<Cache> cache_;
};

/// Downward closure of a set of facets.
FaceTable enumerate_faces(std::span<const Face> facets);

/// Vertex labels "<prefix><i>" for i = 1..n.
std::vector<VertexInfo> numbered_vertices(std::size_t n, const std::string& prefix = "x");

// ---------------------------------------------------------------------------
// Combinatorial operations

/// Join of row-tagged copies; component i's vertices get row i + 1 and
/// occupy a contiguous index range.
SimplicialComplex join(std::span<const SimplicialComplex> components);

/// k-fold deleted join. Vertex (v, row i) has index v * k + (i - 1), so the
/// vertex order is base-vertex-major, then row.
SimplicialComplex deleted_join(const SimplicialComplex& base, int k);

/// Row-tagged vertex table used by `deleted_join`.
std::vector<VertexInfo> deleted_join_vertices(const std::vector<VertexInfo>& base, int k);

/// Index of the copy of base vertex `v` in row `row` (1-based).
inline Vertex deleted_join_vertex(Vertex v, int row, int k) {
  return v * static_cast<Vertex>(k) + static_cast<Vertex>(row - 1);
}

/// Link of a face of the k-fold deleted join, computed from the base complex
/// without building the join. `face` uses deleted-join vertex indices; the
/// result lives on the deleted-join vertex table. Throws FaceNotInComplex.
SimplicialComplex deleted_join_link(const SimplicialComplex& base, int k, const Face& face);

/// {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Σ}; throws FaceNotInComplex.
SimplicialComplex link(const SimplicialComplex& sigma, const Face& face);

enum class EmptyDeletion { Allow, Reject };

/// {τ ∈ Σ : σ ⊄ τ}. Deleting ∅ gives the void complex unless rejected.
SimplicialComplex deletion(const SimplicialComplex& sigma, const Face& face,
                           EmptyDeletion policy = EmptyDeletion::Allow);
/// Deletion of a single vertex; same as restriction to V ∖ {v}.
SimplicialComplex delete_vertex(const SimplicialComplex& sigma, Vertex v);
/// {τ ∈ Σ : τ ⊆ W}.
SimplicialComplex restriction(const SimplicialComplex& sigma, const Face& allowed);

/// Faces of dimension ≤ m; m ≥ -1.
SimplicialComplex skeleton(const SimplicialComplex& sigma, int m);

/// Subcomplex generated by the facets satisfying `keep`.
template <class Pred>
SimplicialComplex facet_subcomplex(const SimplicialComplex& sigma, Pred&& keep) {
  std::vector<Face> kept;
  for (const Face& f : sigma.facets()) {
    if (keep(f)) kept.push_back(f);
  }
  return SimplicialComplex(sigma.vertices(), std::move(kept));
}

/// Faces common to both complexes (same vertex table required).
SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b);

/// Connected components of the 1-skeleton, as facet-generated subcomplexes,
/// ordered by their smallest facet index. {∅} and void have none.
std::vector<SimplicialComplex> connected_components(const SimplicialComplex& sigma);

/// Image under a vertex permutation `perm[v]`.
SimplicialComplex permute_vertices(const SimplicialComplex& sigma, std::span<const Vertex> perm);
Face permute_face(const Face& f, std::span<const Vertex> perm);

/// Drops vertices not used by any facet and renumbers the rest in order.
SimplicialComplex compact(const SimplicialComplex& sigma);

/// max |F| over facets F ⊇ A; throws FaceNotInComplex.
int degree(const SimplicialComplex& sigma, const Face& face);

/// f_{i,j} = #{faces A : |A| = i, δ(A) = j} and the diagonal
/// h_j = (-1)^j Σ_{i≤j} (-1)^i f_{i,j}.
struct FTriangle {
  int d = -1;
  std::vector<std::vector<std::int64_t>> f;  // f[i][j], 0 ≤ i ≤ j ≤ d + 1
  std::vector<std::int64_t> h;               // h[0..d+1]

  /// Number of (i-1)-faces.
  std::int64_t row_sum(int i) const;
};

FTriangle f_triangle(const SimplicialComplex& sigma);

/// f-vector, index i = number of (i-1)-faces (so entry 0 is the empty face).
std::vector<std::int64_t> f_vector(const SimplicialComplex& sigma);

/// Σ_{i≥0} (-1)^i f_i (ordinary Euler characteristic, empty face excluded).
std::int64_t euler_characteristic(const SimplicialComplex& sigma);
/// χ - 1 (the empty face counted in dimension -1); 0 for the void complex.
std::int64_t reduced_euler_characteristic(const SimplicialComplex& sigma);

/// Full simplex on n vertices and its boundary.
SimplicialComplex simplex(std::size_t n, const std::string& prefix = "x");
SimplicialComplex simplex_boundary(std::size_t n, const std::string& prefix = "x");
/// n isolated points.
SimplicialComplex points(std::size_t n, const std::string& prefix = "p");

}  // namespace tvlab
