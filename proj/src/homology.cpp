#include "tvlab/homology.hpp"

#include <algorithm>

namespace tvlab {

std::int64_t BettiVector::at(int i) const {
  if (i == -1) return minus_one;
  if (i < 0 || static_cast<std::size_t>(i) >= values.size()) return 0;
  return values[static_cast<std::size_t>(i)];
}

std::int64_t BettiVector::alternating_sum() const {
  std::int64_t s = -minus_one;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i % 2 == 0 ? 1 : -1) * values[i];
  return s;
}

bool BettiVector::all_zero() const {
  return minus_one == 0 && std::all_of(values.begin(), values.end(), [](std::int64_t v) { return v == 0; });
}

namespace {

BettiVector assemble(const ChainComplexF2& c, const std::vector<std::size_t>& ranks) {
  // ranks[d] = rank ∂_d for d = 0..top; ∂_{top+1} = 0.
  auto rank = [&](int d) -> std::int64_t {
    return d >= 0 && static_cast<std::size_t>(d) < ranks.size() ? static_cast<std::int64_t>(ranks[static_cast<std::size_t>(d)]) : 0;
  };
  BettiVector b;
  if (c.cell_counts.empty()) return b;
  b.minus_one = static_cast<std::int64_t>(c.count(-1)) - rank(0);
  for (int d = 0; d <= c.top_dim(); ++d) {
    b.values.push_back(static_cast<std::int64_t>(c.count(d)) - rank(d) - rank(d + 1));
  }
  return b;
}

}  // namespace

BettiVector betti_f2(const ChainComplexF2& c) {
  const int top = c.top_dim();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(std::max(top + 1, 0)), 0);
  std::vector<std::uint8_t> cleared;
  for (int d = top; d >= 0; --d) {
    const auto& m = c.boundary(d);
    ReduceOptions opts;
    if (cleared.size() == m.cols()) opts.skip = cleared;
    const ColumnReduction red = reduce_columns(m, opts);
    ranks[static_cast<std::size_t>(d)] = red.rank;
    cleared.assign(m.rows, 0);
    for (std::size_t row = 0; row < m.rows; ++row) {
      if (red.pivot_column[row] >= 0) cleared[row] = 1;
    }
  }
  return assemble(c, ranks);
}

BettiVector betti_f2(const SimplicialComplex& sigma) { return betti_f2(chain_complex(sigma)); }

BettiVector betti_f2_dense(const ChainComplexF2& c) {
  std::vector<std::size_t> ranks;
  for (int d = 0; d <= c.top_dim(); ++d) ranks.push_back(BitMatrix::from_sparse(c.boundary(d)).rank());
  return assemble(c, ranks);
}

int homological_connectivity(const BettiVector& b, bool is_void) {
  if (is_void || b.minus_one != 0) return -2;
  int c = -1;
  for (std::size_t i = 0; i < b.values.size(); ++i) {
    if (b.values[i] != 0) return c;
    c = static_cast<int>(i);
  }
  return c;
}

namespace {

void check_permutation(std::span<const Vertex> perm, std::size_t n) {
  if (perm.size() != n) throw Error(ErrorCode::NotAPermutation, "permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (Vertex v : perm) {
    if (v >= n || seen[v]) throw Error(ErrorCode::NotAPermutation, "not a bijection on vertices");
    seen[v] = true;
  }
}

using Tag = std::vector<std::uint64_t>;

void xor_tag(Tag& dst, const Tag& src) {
  if (dst.size() < src.size()) dst.resize(src.size(), 0);
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] ^= src[i];
}

// Echelon basis of Z_d keyed by lowest entry; each entry remembers which
// chosen homology representatives it equals modulo boundaries.
struct CycleEchelon {
  explicit CycleEchelon(std::size_t cells) : pivot(cells, -1) {}

  // Reduces `v` in place, accumulating tags; returns the accumulated tag.
  Tag reduce(F2Column& v) {
    Tag acc;
    while (!v.empty()) {
      const std::int64_t p = pivot[v.back()];
      if (p < 0) break;
      add_column(v, vecs[static_cast<std::size_t>(p)], scratch);
      xor_tag(acc, tags[static_cast<std::size_t>(p)]);
    }
    return acc;
  }

  void insert(F2Column v, Tag tag) {
    pivot[v.back()] = static_cast<std::int64_t>(vecs.size());
    vecs.push_back(std::move(v));
    tags.push_back(std::move(tag));
  }

  std::vector<std::int64_t> pivot;
  std::vector<F2Column> vecs;
  std::vector<Tag> tags;
  F2Column scratch;
};

// Basis of ker(m) by column reduction tracking the column operations.
std::vector<F2Column> kernel_basis(const SparseF2Matrix& m) {
  std::vector<F2Column> reduced(m.cols());
  std::vector<F2Column> ops(m.cols());
  std::vector<std::int64_t> pivot(m.rows, -1);
  std::vector<F2Column> kernel;
  F2Column scratch;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    F2Column work = m.columns[j];
    F2Column v{static_cast<std::uint32_t>(j)};
    while (!work.empty()) {
      const std::int64_t p = pivot[work.back()];
      if (p < 0) break;
      add_column(work, reduced[static_cast<std::size_t>(p)], scratch);
      add_column(v, ops[static_cast<std::size_t>(p)], scratch);
    }
    if (work.empty()) {
      kernel.push_back(std::move(v));
    } else {
      pivot[work.back()] = static_cast<std::int64_t>(j);
      reduced[j] = std::move(work);
      ops[j] = std::move(v);
    }
  }
  return kernel;
}

}  // namespace

InducedMap induced_automorphism(const SimplicialComplex& sigma, std::span<const Vertex> perm, int dim) {
  check_permutation(perm, sigma.vertex_count());
  {
    std::vector<Face> image;
    for (const Face& f : sigma.facets()) image.push_back(permute_face(f, perm));
    std::sort(image.begin(), image.end());
    std::vector<Face> facets = sigma.facets();
    std::sort(facets.begin(), facets.end());
    if (image != facets) {
      throw Error(ErrorCode::NotAnAutomorphism, "vertex map does not preserve the facet set");
    }
  }

  const ChainComplexF2 c = chain_complex(sigma);
  InducedMap out;
  out.dim = dim;
  if (dim < 0 || dim > c.top_dim()) {
    out.matrix = BitMatrix(0, 0);
    return out;
  }
  const auto& cells = sigma.faces().of_dim(dim);
  CycleEchelon echelon(cells.size());

  if (dim + 1 <= c.top_dim()) {
    ReduceOptions opts;
    opts.keep_reduced = true;
    ColumnReduction red = reduce_columns(c.boundary(dim + 1), opts);
    for (auto& col : red.reduced) {
      if (!col.empty()) echelon.insert(std::move(col), {});
    }
  }

  std::vector<F2Column> reps;
  for (F2Column z : kernel_basis(c.boundary(dim))) {
    F2Column original = z;
    Tag tag = echelon.reduce(z);
    if (z.empty()) continue;
    const std::size_t h = reps.size();
    if (tag.size() <= h / 64) tag.resize(h / 64 + 1, 0);
    tag[h / 64] ^= 1ULL << (h % 64);
    echelon.insert(std::move(z), std::move(tag));
    reps.push_back(std::move(original));
  }

  const std::size_t n = reps.size();
  out.matrix = BitMatrix(n, n);
  for (std::size_t h = 0; h < n; ++h) {
    F2Column image;
    image.reserve(reps[h].size());
    for (std::uint32_t i : reps[h]) {
      const Face g = permute_face(cells[i], perm);
      image.push_back(static_cast<std::uint32_t>(std::lower_bound(cells.begin(), cells.end(), g) - cells.begin()));
    }
    std::sort(image.begin(), image.end());
    const Tag coeffs = echelon.reduce(image);
    if (!image.empty()) {
      throw Error(ErrorCode::NotAnAutomorphism, "image of a cycle is not a cycle");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i / 64 < coeffs.size() && ((coeffs[i / 64] >> (i % 64)) & 1U)) out.matrix.set(i, h, true);
    }
  }
  return out;
}

InducedMap induced_involution(const SimplicialComplex& sigma, std::span<const Vertex> perm, int dim) {
  check_permutation(perm, sigma.vertex_count());
  for (std::size_t v = 0; v < perm.size(); ++v) {
    if (perm[perm[v]] != v) throw Error(ErrorCode::NotInvolution, "vertex map is not an involution");
  }
  return induced_automorphism(sigma, perm, dim);
}

std::size_t rank_one_plus(const InducedMap& m) {
  return (m.matrix + BitMatrix::identity(m.matrix.rows())).rank();
}

bool is_free_f2z2(const InducedMap& m) {
  const std::size_t n = m.matrix.rows();
  if (!(m.matrix * m.matrix == BitMatrix::identity(n))) {
    throw Error(ErrorCode::NotInvolution, "induced map does not square to the identity");
  }
  if (n % 2 != 0) return false;
  return rank_one_plus(m) == n / 2;
}

}  // namespace tvlab
