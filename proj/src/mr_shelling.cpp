#include "tvlab/mr_shelling.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <unordered_map>

#include "tvlab/balanced.hpp"
#include "tvlab/matroid.hpp"

namespace tvlab {

bool precedes(std::pair<int, int> x, std::pair<int, int> y) {
  const auto s = [](std::pair<int, int> p) { return std::make_pair(std::max(p.first, p.second), std::min(p.first, p.second)); };
  if (s(x) != s(y)) return s(x) < s(y);
  return x < y;
}

std::vector<Vertex> row_swap(std::size_t base_vertices) {
  std::vector<Vertex> perm(2 * base_vertices);
  for (Vertex v = 0; v < perm.size(); ++v) perm[v] = v ^ 1U;
  return perm;
}

std::vector<std::vector<Vertex>> block_join_symmetries(int r, int width) {
  const auto w = static_cast<Vertex>(width);
  const std::size_t base = static_cast<std::size_t>(r) * w;
  std::vector<std::vector<Vertex>> gens{row_swap(base)};
  auto lift = [&](const std::vector<Vertex>& base_perm) {
    std::vector<Vertex> p(2 * base);
    for (Vertex v = 0; v < base; ++v) {
      p[2 * v] = 2 * base_perm[v];
      p[2 * v + 1] = 2 * base_perm[v] + 1;
    }
    return p;
  };
  std::vector<Vertex> id(base);
  for (Vertex v = 0; v < base; ++v) id[v] = v;
  for (Vertex i = 0; i + 2 < static_cast<Vertex>(r); ++i) {
    std::vector<Vertex> p = id;
    for (Vertex j = 0; j < w; ++j) std::swap(p[i * w + j], p[(i + 1) * w + j]);
    gens.push_back(lift(p));
  }
  for (Vertex i = 0; i < static_cast<Vertex>(r); ++i) {
    for (Vertex j = 0; j + 1 < w; ++j) {
      std::vector<Vertex> p = id;
      std::swap(p[i * w + j], p[i * w + j + 1]);
      gens.push_back(lift(p));
    }
  }
  return gens;
}

BlockJoinShelling shelling_block_join(int r, int width) {
  if (r < 2 || width < r) throw Error(ErrorCode::BadParameter, "block join shelling needs r >= 2, width >= r");
  if (width == r && r < 3) throw Error(ErrorCode::BadParameter, "(M_2)^{*2} is not shellable");
  const Matroid m = build_block_matroid(r, width);
  BlockJoinShelling out;
  out.r = r;
  out.width = width;
  out.complex = deleted_join(m.complex, 2);
  const auto& facets = out.complex.facets();
  const auto w = static_cast<Vertex>(width);
  // Vertices of the last block: base indices (r-1)w .. rw-1, both rows.
  Face last_block;
  for (Vertex j = 0; j < 2 * w; ++j) last_block = last_block.with(2 * static_cast<Vertex>(r - 1) * w + j);
  Face row1;
  for (Vertex v = 0; v < out.complex.vertex_count(); v += 2) row1 = row1.with(v);

  // Shelling of Δ_{2,width}; its vertex c*2 + row - 1 maps into block i by
  // adding 2 i w.
  const SimplicialComplex board = chessboard(2, width);
  const SearchResult found = search_shelling(board);
  if (found.status != SearchStatus::Found) throw Error(ErrorCode::BudgetExceeded, "no shelling of Δ_{2,width} found");
  out.chessboard_shelling = *found.shelling;
  std::vector<Face> board_order;
  for (std::size_t i : out.chessboard_shelling.order) board_order.push_back(board.facets()[i]);
  auto in_block = [&](const Face& f, int block) {
    Face g;
    f.for_each_vertex([&](Vertex v) { g = g.with(v + 2 * static_cast<Vertex>(block) * w); });
    return g;
  };

  // Lexicographic join order over `blocks` factors.
  auto join_order = [&](int blocks) {
    std::vector<Face> order;
    std::vector<std::size_t> pos(static_cast<std::size_t>(blocks), 0);
    while (true) {
      Face u;
      for (int b = 0; b < blocks; ++b) u = u | in_block(board_order[pos[static_cast<std::size_t>(b)]], b);
      order.push_back(u);
      int b = blocks - 1;
      while (b >= 0 && ++pos[static_cast<std::size_t>(b)] == board_order.size()) pos[static_cast<std::size_t>(b--)] = 0;
      if (b < 0) break;
    }
    return order;
  };

  std::unordered_map<Face, std::size_t, FaceHash> index;
  for (std::size_t i = 0; i < facets.size(); ++i) index.emplace(facets[i], i);
  std::vector<std::size_t> order;
  std::vector<bool> placed(facets.size(), false);
  for (const Face& f : join_order(r)) {
    const std::size_t i = index.at(f);
    order.push_back(i);
    placed[i] = true;
  }
  out.chessboard_facets = order.size();

  // Shelled (r-1)-fold chessboard join on the same vertex table.
  std::vector<Face> sub_order = join_order(r - 1);
  const SimplicialComplex sub(out.complex.vertices(), sub_order);
  std::vector<std::size_t> sub_idx;
  for (const Face& f : sub_order) sub_idx.push_back(*sub.facet_index(f));
  const ShellingOrder sub_shelling{sub_idx, {}};
  const VertexColoring coloring = row_coloring(out.complex);

  // Positions of facets in each required balanced skeleton shelling.
  std::map<std::vector<int>, std::unordered_map<Face, std::size_t, FaceHash>> skeleton_pos;
  auto position_in = [&](const std::vector<int>& b, const Face& bar) {
    auto it = skeleton_pos.find(b);
    if (it == skeleton_pos.end()) {
      const ShelledComplex sk = shell_balanced_skeleton(sub, coloring, b, sub_shelling);
      std::unordered_map<Face, std::size_t, FaceHash> pos;
      for (std::size_t t = 0; t < sk.shelling.order.size(); ++t) pos.emplace(sk.complex.facets()[sk.shelling.order[t]], t);
      it = skeleton_pos.emplace(b, std::move(pos)).first;
    }
    const auto p = it->second.find(bar);
    if (p == it->second.end()) throw Error(ErrorCode::InputNotShelling, "facet part missing from balanced skeleton");
    return p->second;
  };

  struct Key {
    std::pair<int, int> x;
    Face ar;
    std::size_t pos;
    std::size_t facet;
  };
  std::vector<Key> rest;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (placed[i]) continue;
    const Face ar = facets[i] & last_block;
    const Face bar = facets[i] - last_block;
    const std::pair<int, int> x{(ar & row1).size(), (ar - row1).size()};
    const std::vector<int> b{std::min(r - x.first, r - 1), std::min(r - x.second, r - 1)};
    rest.push_back({x, ar, position_in(b, bar), i});
  }
  std::sort(rest.begin(), rest.end(), [](const Key& a, const Key& b) {
    if (a.x != b.x) return precedes(a.x, b.x);
    if (a.ar != b.ar) return lex_less(a.ar, b.ar);
    return a.pos < b.pos;
  });
  for (const Key& k : rest) order.push_back(k.facet);

  ShellingVerdict v = verify_shelling_pairwise(out.complex, order);
  if (!v.ok) throw Error(ErrorCode::InputNotShelling, "assembled order failed to verify");
  out.shelling = ShellingOrder{std::move(order), std::move(v.witnesses)};
  return out;
}

BlockJoinShelling shelling_mr2(int r) {
  if (r < 3) throw Error(ErrorCode::BadParameter, "the explicit shelling needs r >= 3");
  return shelling_block_join(r, r);
}

BlockJoinShelling shelling_mr2_prime(int r) {
  if (r < 2) throw Error(ErrorCode::BadParameter, "M'_r needs r >= 2");
  return shelling_block_join(r, r + 1);
}

MrCovering covering_subcomplexes(int r) {
  if (r < 2) throw Error(ErrorCode::BadParameter, "covering needs r >= 2");
  MrCovering c;
  c.whole = deleted_join(build_mr(r).complex, 2);
  c.top = facet_subcomplex(c.whole, [&](const Face& f) { return f.size() == 2 * r; });
  c.lower = facet_subcomplex(c.whole, [&](const Face& f) { return f.size() == 2 * r - 1; });
  auto parts = connected_components(c.lower);
  if (parts.size() != 2) throw Error(ErrorCode::BadParameter, "expected two components of the lower part");
  c.lower1 = parts[0];
  c.lower2 = parts[1];
  c.meet1 = intersection(c.top, c.lower1);
  c.meet2 = intersection(c.top, c.lower2);
  c.swap = row_swap(static_cast<std::size_t>(r) * static_cast<std::size_t>(r));
  c.swap_exchanges_components = permute_vertices(c.lower1, c.swap).facets() == c.lower2.facets() &&
                                permute_vertices(c.meet1, c.swap).facets() == c.meet2.facets();
  return c;
}

}  // namespace tvlab
