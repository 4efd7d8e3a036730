#include "tvlab/deleted_product.hpp"

#include <algorithm>

namespace tvlab {

int ProductCell::dim() const {
  int d = 0;
  for (const Face& f : factors) d += f.dim();
  return d;
}

std::size_t CWProductComplex::count(int d) const {
  if (d < 0 || d > top_dim() || k <= 0) return 0;
  return cells[static_cast<std::size_t>(d)].size() / static_cast<std::size_t>(k);
}

std::size_t CWProductComplex::total() const {
  std::size_t n = 0;
  for (int d = 0; d <= top_dim(); ++d) n += count(d);
  return n;
}

ProductCell CWProductComplex::cell(int d, std::size_t i) const {
  const auto& flat = cells.at(static_cast<std::size_t>(d));
  const auto ks = static_cast<std::size_t>(k);
  return ProductCell{std::vector<Face>(flat.begin() + static_cast<std::ptrdiff_t>(i * ks),
                                       flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * ks))};
}

namespace {


bool tuple_less(const Face* a, const Face* b, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// Lower-bound search over a flat array of k-tuples.
std::size_t find_tuple(const std::vector<Face>& flat, std::size_t k, const Face* key) {
  std::size_t lo = 0;
  std::size_t hi = flat.size() / k;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (tuple_less(&flat[mid * k], key, k)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < flat.size() / k && std::equal(key, key + k, &flat[lo * k])) return lo;
  return static_cast<std::size_t>(-1);
}

std::vector<Face> nonempty_faces(const SimplicialComplex& sigma) {
  std::vector<Face> out;
  if (sigma.is_void()) return out;
  const FaceTable& t = sigma.faces();
  for (int d = 0; d <= t.top_dim(); ++d) out.insert(out.end(), t.of_dim(d).begin(), t.of_dim(d).end());
  return out;
}

template <class Emit>
void enumerate_tuples(const std::vector<Face>& faces, int k, std::size_t budget, Emit&& emit) {
  std::vector<Face> current;
  std::size_t produced = 0;
  auto rec = [&](auto&& self, Face used) -> void {
    if (static_cast<int>(current.size()) == k) {
      if (++produced > budget) {
        throw Error(ErrorCode::BudgetExceeded, "deleted product exceeds the cell budget of " + std::to_string(budget));
      }
      emit(current);
      return;
    }
    for (const Face& f : faces) {
      if (!f.disjoint(used)) continue;
      current.push_back(f);
      self(self, used | f);
      current.pop_back();
    }
  };
  rec(rec, Face{});
}

}  // namespace

std::size_t CWProductComplex::index_of(std::span<const Face> factors) const {
  if (static_cast<int>(factors.size()) != k) return static_cast<std::size_t>(-1);
  int d = 0;
  for (const Face& f : factors) d += f.dim();
  if (d < 0 || d > top_dim()) return static_cast<std::size_t>(-1);
  return find_tuple(cells[static_cast<std::size_t>(d)], factors.size(), factors.data());
}

std::size_t count_product_cells(const SimplicialComplex& sigma, int k, std::size_t cell_budget) {
  if (k < 1) throw Error(ErrorCode::BadParameter, "deleted product needs k >= 1");
  std::size_t n = 0;
  enumerate_tuples(nonempty_faces(sigma), k, cell_budget, [&](const std::vector<Face>&) { ++n; });
  return n;
}

CWProductComplex deleted_product(const SimplicialComplex& sigma, int k, std::size_t cell_budget) {
  if (k < 1) throw Error(ErrorCode::BadParameter, "deleted product needs k >= 1");
  CWProductComplex p;
  p.base = sigma;
  p.k = k;
  const auto ks = static_cast<std::size_t>(k);
  enumerate_tuples(nonempty_faces(sigma), k, cell_budget, [&](const std::vector<Face>& t) {
    int d = 0;
    for (const Face& f : t) d += f.dim();
    if (static_cast<std::size_t>(d) >= p.cells.size()) p.cells.resize(static_cast<std::size_t>(d) + 1);
    auto& flat = p.cells[static_cast<std::size_t>(d)];
    flat.insert(flat.end(), t.begin(), t.end());
  });
  for (auto& flat : p.cells) {
    const std::size_t n = flat.size() / ks;
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return tuple_less(&flat[a * ks], &flat[b * ks], ks); });
    std::vector<Face> sorted;
    sorted.reserve(flat.size());
    for (std::size_t i : idx) sorted.insert(sorted.end(), flat.begin() + static_cast<std::ptrdiff_t>(i * ks),
                                            flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * ks));
    flat.swap(sorted);
  }
  return p;
}

ChainComplexF2 product_chain_complex(const CWProductComplex& p) {
  // The empty product keeps its augmentation cell, like the complex {∅}.
  ChainComplexF2 c;
  c.cell_counts.push_back(1);
  if (p.total() == 0) return c;
  const auto ks = static_cast<std::size_t>(p.k);
  for (int d = 0; d <= p.top_dim(); ++d) c.cell_counts.push_back(p.count(d));

  SparseF2Matrix aug;
  aug.rows = 1;
  aug.columns.assign(p.count(0), F2Column{0});
  c.boundaries.push_back(std::move(aug));

  std::vector<Face> key(ks);
  for (int d = 1; d <= p.top_dim(); ++d) {
    const auto& flat = p.cells[static_cast<std::size_t>(d)];
    const auto& below = p.cells[static_cast<std::size_t>(d - 1)];
    SparseF2Matrix m;
    m.rows = p.count(d - 1);
    m.columns.resize(p.count(d));
    for (std::size_t j = 0; j < m.columns.size(); ++j) {
      const Face* cell = &flat[j * ks];
      auto& col = m.columns[j];
      for (std::size_t i = 0; i < ks; ++i) {
        if (cell[i].size() < 2) continue;
        std::copy(cell, cell + ks, key.begin());
        cell[i].for_each_vertex([&](Vertex v) {
          key[i] = cell[i].without(v);
          const std::size_t row = find_tuple(below, ks, key.data());
          if (row == static_cast<std::size_t>(-1)) throw Error(ErrorCode::FaceNotInComplex, "boundary cell missing");
          col.push_back(static_cast<std::uint32_t>(row));
        });
      }
      std::sort(col.begin(), col.end());
    }
    c.boundaries.push_back(std::move(m));
  }
  return c;
}

int homological_connectivity(const CWProductComplex& p) {
  if (p.total() == 0) return -2;
  return homological_connectivity(betti_f2(product_chain_complex(p)), false);
}

CWProductComplex conf2(const Matroid& m, std::size_t cell_budget) { return deleted_product(m.complex, 2, cell_budget); }

int deleted_product_lower_bound(int r, int b, int k) {
  if (b <= 0) throw Error(ErrorCode::BadParameter, "b must be positive");
  return r - 2 - (r * (k - 1)) / b;
}

DeletedProductReport analyze_deleted_product(const Matroid& m, int k, std::size_t cell_budget) {
  DeletedProductReport rep;
  rep.r = m.rank;
  rep.b = static_cast<int>(m.disjoint_bases.size());
  rep.k = k;
  const CWProductComplex p = deleted_product(m.complex, k, cell_budget);
  for (int d = 0; d <= p.top_dim(); ++d) rep.cell_counts.push_back(p.count(d));
  rep.betti = betti_f2(product_chain_complex(p));
  rep.connectivity = p.total() == 0 ? -2 : homological_connectivity(rep.betti, false);
  rep.hypotheses_hold = rep.b >= 2 && k >= 2 && rep.r >= 2 && rep.r >= k && rep.b >= k;
  rep.lower_bound = rep.b > 0 ? deleted_product_lower_bound(rep.r, rep.b, k) : -2;
  rep.bound_respected = rep.connectivity >= rep.lower_bound;
  rep.b_at_least_r_k_minus_1_plus_1 = rep.b >= rep.r * (k - 1) + 1;
  rep.b_at_least_r_minus_1_k_minus_1_plus_1 = rep.b >= (rep.r - 1) * (k - 1) + 1;
  return rep;
}

}  // namespace tvlab
