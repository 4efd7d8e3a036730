#include "tvlab/balanced.hpp"

#include <algorithm>
#include <unordered_set>

namespace tvlab {

int VertexColoring::count(const Face& f, int c) const {
  int n = 0;
  f.for_each_vertex([&](Vertex v) { n += color.at(v) == c ? 1 : 0; });
  return n;
}

std::vector<int> VertexColoring::type_of(const Face& f) const {
  std::vector<int> t(static_cast<std::size_t>(colors), 0);
  f.for_each_vertex([&](Vertex v) { ++t.at(static_cast<std::size_t>(color.at(v))); });
  return t;
}

VertexColoring row_coloring(const SimplicialComplex& sigma) {
  VertexColoring c;
  for (const VertexInfo& info : sigma.vertices()) {
    const int row = info.row.value_or(1);
    c.color.push_back(row - 1);
    c.colors = std::max(c.colors, row);
  }
  return c;
}

std::optional<std::vector<int>> balanced_type(const SimplicialComplex& sigma, const VertexColoring& coloring) {
  if (coloring.color.size() != sigma.vertex_count() || sigma.is_void()) return std::nullopt;
  const std::vector<int> a = coloring.type_of(sigma.facets().front());
  for (const Face& f : sigma.facets()) {
    if (coloring.type_of(f) != a) return std::nullopt;
  }
  return a;
}

namespace {

std::vector<int> require_balanced(const SimplicialComplex& sigma, const VertexColoring& coloring,
                                  const std::vector<int>& b) {
  const auto a = balanced_type(sigma, coloring);
  if (!a) throw Error(ErrorCode::NotBalanced, "complex is not balanced for this coloring");
  if (b.size() != a->size()) throw Error(ErrorCode::BadParameter, "b has the wrong number of colors");
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] < 0 || b[i] > (*a)[i]) throw Error(ErrorCode::BadParameter, "need 0 <= b_i <= a_i");
  }
  return *a;
}

// All subsets of `pool` with exactly k elements, each OR-ed into `base`.
void choose(const std::vector<Vertex>& pool, int k, std::size_t from, Face base, std::vector<Face>& out) {
  if (k == 0) {
    out.push_back(base);
    return;
  }
  for (std::size_t i = from; i + static_cast<std::size_t>(k) <= pool.size(); ++i) {
    choose(pool, k - 1, i + 1, base.with(pool[i]), out);
  }
}

}  // namespace

SimplicialComplex balanced_b_skeleton(const SimplicialComplex& sigma, const VertexColoring& coloring,
                                      const std::vector<int>& b) {
  require_balanced(sigma, coloring, b);
  std::unordered_set<Face, FaceHash> gens;
  for (const Face& f : sigma.facets()) {
    std::vector<Face> partial{Face{}};
    for (int c = 0; c < coloring.colors; ++c) {
      std::vector<Vertex> pool;
      f.for_each_vertex([&](Vertex v) {
        if (coloring.color[v] == c) pool.push_back(v);
      });
      std::vector<Face> next;
      for (const Face& p : partial) choose(pool, b[static_cast<std::size_t>(c)], 0, p, next);
      partial = std::move(next);
    }
    gens.insert(partial.begin(), partial.end());
  }
  return SimplicialComplex(sigma.vertices(), std::vector<Face>(gens.begin(), gens.end()));
}

ShelledComplex shell_balanced_skeleton(const SimplicialComplex& sigma, const VertexColoring& coloring,
                                       const std::vector<int>& b, const ShellingOrder& shelling) {
  std::vector<int> cur = require_balanced(sigma, coloring, b);
  ShelledComplex state{sigma, shelling};
  if (!verify_shelling_pairwise(sigma, shelling.order).ok) {
    throw Error(ErrorCode::InputNotShelling, "given order is not a shelling");
  }
  while (cur != b) {
    std::size_t i = 0;
    while (cur[i] == b[i]) ++i;
    --cur[i];
    if (state.complex.dimension() == 0) {
      // Lowering a single-vertex type leaves {∅}.
      state = ShelledComplex{SimplicialComplex(sigma.vertices(), {Face{}}), ShellingOrder{{0}, {}}};
      continue;
    }
    const ShelledComplex skel =
        compatible_skeleton_shelling(state.complex, state.shelling, state.complex.dimension() - 1);
    // Restrict to the faces of the lowered type.
    std::vector<Face> kept;
    for (std::size_t idx : skel.shelling.order) {
      const Face& f = skel.complex.facets()[idx];
      if (coloring.type_of(f) == cur) kept.push_back(f);
    }
    SimplicialComplex lowered(sigma.vertices(), kept);
    std::vector<std::size_t> order;
    order.reserve(kept.size());
    for (const Face& f : kept) order.push_back(*lowered.facet_index(f));
    ShellingVerdict v = verify_shelling_pairwise(lowered, order);
    if (!v.ok) throw Error(ErrorCode::InputNotShelling, "restricted skeleton order failed to verify");
    state = ShelledComplex{std::move(lowered), ShellingOrder{std::move(order), std::move(v.witnesses)}};
  }
  return state;
}

}  // namespace tvlab
