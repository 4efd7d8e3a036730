#include <algorithm>

#include "tvlab/homology.hpp"

namespace tvlab {

std::size_t ChainComplexF2::count(int d) const {
  const auto idx = static_cast<std::size_t>(d + 1);
  return d >= -1 && idx < cell_counts.size() ? cell_counts[idx] : 0;
}

ChainComplexF2 chain_complex(const SimplicialComplex& sigma) {
  ChainComplexF2 c;
  const FaceTable& table = sigma.faces();
  for (const auto& level : table.by_dim) c.cell_counts.push_back(level.size());
  for (int d = 0; d <= table.top_dim(); ++d) {
    const auto& cells = table.of_dim(d);
    const auto& below = table.of_dim(d - 1);
    SparseF2Matrix m;
    m.rows = below.size();
    m.columns.resize(cells.size());
    for (std::size_t j = 0; j < cells.size(); ++j) {
      auto& col = m.columns[j];
      col.reserve(static_cast<std::size_t>(cells[j].size()));
      cells[j].for_each_vertex([&](Vertex v) {
        const Face g = cells[j].without(v);
        col.push_back(static_cast<std::uint32_t>(std::lower_bound(below.begin(), below.end(), g) - below.begin()));
      });
      std::sort(col.begin(), col.end());
    }
    c.boundaries.push_back(std::move(m));
  }
  return c;
}

bool boundary_squared_vanishes(const ChainComplexF2& c) {
  F2Column acc;
  F2Column scratch;
  for (int d = 1; d <= c.top_dim(); ++d) {
    const auto& outer = c.boundary(d - 1);
    for (const auto& col : c.boundary(d).columns) {
      acc.clear();
      for (std::uint32_t i : col) add_column(acc, outer.columns[i], scratch);
      if (!acc.empty()) return false;
    }
  }
  return true;
}

std::int64_t reduced_euler_characteristic(const ChainComplexF2& c) {
  std::int64_t chi = 0;
  for (int d = -1; d <= c.top_dim(); ++d) {
    chi += ((d + 2) % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(c.count(d));
  }
  return chi;
}

}  // namespace tvlab
