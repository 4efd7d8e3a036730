#include "tvlab/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tvlab {

namespace {

// Iterated refinement: a vertex's new color is its old color plus the sorted
// list of (facet size, sorted colors of the facet) over facets containing it.
std::vector<std::size_t> refine_colors(const SimplicialComplex& sigma) {
  const std::size_t n = sigma.vertex_count();
  std::vector<std::size_t> color(n, 0);
  std::size_t classes = 1;
  for (std::size_t round = 0; round <= n; ++round) {
    std::vector<std::vector<std::vector<std::size_t>>> sig(n);
    for (const Face& f : sigma.facets()) {
      std::vector<std::size_t> fc;
      f.for_each_vertex([&](Vertex v) { fc.push_back(color[v]); });
      std::sort(fc.begin(), fc.end());
      fc.insert(fc.begin(), fc.size());
      f.for_each_vertex([&](Vertex v) { sig[v].push_back(fc); });
    }
    std::map<std::pair<std::size_t, std::vector<std::vector<std::size_t>>>, std::size_t> ids;
    for (std::size_t v = 0; v < n; ++v) {
      std::sort(sig[v].begin(), sig[v].end());
      ids.emplace(std::make_pair(color[v], sig[v]), 0);
    }
    std::size_t next = 0;
    for (auto& [key, id] : ids) id = next++;
    std::vector<std::size_t> updated(n);
    for (std::size_t v = 0; v < n; ++v) updated[v] = ids.at(std::make_pair(color[v], sig[v]));
    color.swap(updated);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return color;
}

std::vector<Face> relabeled(const SimplicialComplex& sigma, const std::vector<Vertex>& labeling) {
  std::vector<Face> out;
  out.reserve(sigma.facet_count());
  for (const Face& f : sigma.facets()) out.push_back(permute_face(f, labeling));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CanonicalForm canonical_form(const SimplicialComplex& sigma, std::size_t budget) {
  const std::size_t n = sigma.vertex_count();
  const std::vector<std::size_t> color = refine_colors(sigma);

  // Classes in color order; each class gets a consecutive range of labels.
  std::map<std::size_t, std::vector<Vertex>> classes;
  for (std::size_t v = 0; v < n; ++v) classes[color[v]].push_back(static_cast<Vertex>(v));
  std::vector<std::vector<Vertex>> cells;
  std::size_t total = 1;
  for (auto& [c, members] : classes) {
    cells.push_back(members);
    for (std::size_t k = 2; k <= members.size(); ++k) {
      total *= k;
      if (total > budget) throw Error(ErrorCode::BudgetExceeded, "canonical labeling needs too many orderings");
    }
  }

  CanonicalForm best;
  std::vector<Vertex> labeling(n);
  // Odometer over the permutations of every cell.
  for (auto& cell : cells) std::sort(cell.begin(), cell.end());
  while (true) {
    Vertex next = 0;
    for (const auto& cell : cells) {
      for (Vertex v : cell) labeling[v] = next++;
    }
    std::vector<Face> facets = relabeled(sigma, labeling);
    if (best.labeling.empty() || facets < best.facets) {
      best.facets = std::move(facets);
      best.labeling = labeling;
    }
    std::size_t i = 0;
    while (i < cells.size() && !std::next_permutation(cells[i].begin(), cells[i].end())) ++i;
    if (i == cells.size()) break;
  }
  if (n == 0) best.facets = relabeled(sigma, labeling);
  return best;
}

std::optional<std::vector<Vertex>> find_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b,
                                                    std::size_t budget) {
  if (a.vertex_count() != b.vertex_count() || a.facet_count() != b.facet_count()) return std::nullopt;
  const CanonicalForm ca = canonical_form(a, budget);
  const CanonicalForm cb = canonical_form(b, budget);
  if (ca.facets != cb.facets) return std::nullopt;
  std::vector<Vertex> inverse_b(b.vertex_count());
  for (std::size_t v = 0; v < cb.labeling.size(); ++v) inverse_b[cb.labeling[v]] = static_cast<Vertex>(v);
  std::vector<Vertex> map(a.vertex_count());
  for (std::size_t v = 0; v < map.size(); ++v) map[v] = inverse_b[ca.labeling[v]];
  return map;
}

}  // namespace tvlab
