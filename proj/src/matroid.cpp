#include "tvlab/matroid.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace tvlab {

namespace {

void choose(const std::vector<Vertex>& ground, int m, std::size_t start, Face current,
            std::vector<Face>& out) {
  if (current.size() == m) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = start; i < ground.size(); ++i) {
    choose(ground, m, i + 1, current.with(ground[i]), out);
  }
}

std::vector<Face> bases_of(const Matroid& m) {
  std::vector<Face> out;
  for (const Face& f : m.complex.facets()) {
    if (f.size() == m.rank) out.push_back(f);
  }
  return out;
}

}  // namespace

Matroid uniform_matroid(int m, std::vector<VertexInfo> ground) {
  const int n = static_cast<int>(ground.size());
  if (m < 0 || m > n) {
    throw Error(ErrorCode::BadRank, "U_{" + std::to_string(m) + "," + std::to_string(n) + "} needs 0 <= m <= n");
  }
  std::vector<Vertex> all(ground.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Vertex>(i);
  std::vector<Face> facets;
  choose(all, m, 0, Face{}, facets);
  Matroid out{SimplicialComplex(std::move(ground), std::move(facets)), m, true, {}};
  out.disjoint_bases = disjoint_bases(out);
  return out;
}

Matroid uniform_matroid(int m, int n, const std::string& prefix) {
  if (n < 0) throw Error(ErrorCode::BadRank, "negative ground set size");
  return uniform_matroid(m, numbered_vertices(static_cast<std::size_t>(n), prefix));
}

Matroid direct_sum(std::span<const Matroid> parts) {
  if (parts.empty()) throw Error(ErrorCode::BadParameter, "direct sum of no matroids");
  std::vector<VertexInfo> vertices;
  std::vector<Vertex> offsets;
  std::multiset<std::string> labels;
  for (const Matroid& m : parts) {
    for (const VertexInfo& v : m.complex.vertices()) labels.insert(v.label);
  }
  int rank = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    offsets.push_back(static_cast<Vertex>(vertices.size()));
    for (VertexInfo v : parts[i].complex.vertices()) {
      if (labels.count(v.label) > 1) v.label += "#" + std::to_string(i + 1);
      vertices.push_back(std::move(v));
    }
    rank += parts[i].rank;
  }
  if (vertices.size() > kMaxVertices) {
    throw Error(ErrorCode::TooManyVertices, "direct sum has " + std::to_string(vertices.size()) + " elements");
  }
  auto shift = [&](const Face& f, std::size_t part) {
    Face g;
    f.for_each_vertex([&](Vertex v) { g = g.with(v + offsets[part]); });
    return g;
  };
  std::vector<Face> facets{Face{}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<Face> next;
    for (const Face& partial : facets) {
      for (const Face& f : parts[i].complex.facets()) next.push_back(partial | shift(f, i));
    }
    facets = std::move(next);
  }
  Matroid out{SimplicialComplex(std::move(vertices), std::move(facets)), rank,
              std::all_of(parts.begin(), parts.end(), [](const Matroid& m) { return m.verified; }),
              {}};
  out.disjoint_bases = disjoint_bases(out);
  return out;
}

Matroid build_block_matroid(int r, int width) {
  if (r < 2) throw Error(ErrorCode::BadParameter, "the block construction needs r >= 2");
  if (width < r) throw Error(ErrorCode::BadParameter, "block width must be at least r");
  std::vector<Matroid> parts;
  for (int i = 1; i < r; ++i) {
    std::vector<VertexInfo> block;
    for (int j = 1; j <= width; ++j) {
      block.push_back({"v_" + std::to_string(i) + "^" + std::to_string(j), std::nullopt, i});
    }
    parts.push_back(uniform_matroid(1, std::move(block)));
  }
  std::vector<VertexInfo> last;
  for (int j = 1; j <= width; ++j) last.push_back({"w_" + std::to_string(j), std::nullopt, r});
  parts.push_back(uniform_matroid(width, std::move(last)));

  const Matroid hat = direct_sum(parts);
  Matroid out{skeleton(hat.complex, r - 1), r, true, {}};
  // {v_1^j, ..., v_{r-1}^j, w_j}
  const auto w = static_cast<Vertex>(width);
  for (Vertex j = 0; j < w; ++j) {
    Face basis;
    for (Vertex i = 0; i + 1 < static_cast<Vertex>(r); ++i) basis = basis.with(i * w + j);
    basis = basis.with(static_cast<Vertex>(r - 1) * w + j);
    out.disjoint_bases.push_back(basis);
  }
  return out;
}

Matroid build_mr(int r) { return build_block_matroid(r, r); }

Matroid build_mr_prime(int r) {
  if (r < 2) throw Error(ErrorCode::BadParameter, "M'_r needs r >= 2");
  return build_block_matroid(r, r + 1);
}

MatroidVerdict is_matroid(const SimplicialComplex& sigma, MatroidCheck mode) {
  MatroidVerdict verdict;
  if (sigma.is_void()) {
    verdict.is_matroid = false;
    return verdict;
  }
  const FaceTable& table = sigma.faces();
  std::vector<Face> faces;
  for (const auto& level : table.by_dim) faces.insert(faces.end(), level.begin(), level.end());
  const std::unordered_set<Face, FaceHash> members(faces.begin(), faces.end());
  const Face ground = Face::range(sigma.vertex_count());

  // ext[i] = vertices x with faces[i] + x a face.
  std::vector<Face> ext(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    (ground - faces[i]).for_each_vertex([&](Vertex x) {
      if (members.count(faces[i].with(x))) ext[i] = ext[i].with(x);
    });
  }

  if (mode == MatroidCheck::Exchange) {
    for (std::size_t i = 0; i < faces.size(); ++i) {
      for (std::size_t j = 0; j < faces.size(); ++j) {
        if (faces[i].size() < faces[j].size() && (ext[i] & faces[j]).empty()) {
          return {false, faces[i], faces[j]};
        }
      }
    }
    return verdict;
  }

  const std::size_t n = sigma.vertex_count();
  if (n > 24) throw Error(ErrorCode::BadParameter, "exhaustive matroid check limited to 24 vertices");
  const auto& facets = sigma.facets();
  for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits) {
    const Face a = Face::from_words(bits, 0);
    int rank = 0;
    for (const Face& f : facets) rank = std::max(rank, (f & a).size());
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (faces[i].size() < rank && faces[i].is_subset_of(a) && (ext[i] & a).empty()) {
        return {false, a, faces[i]};
      }
    }
  }
  return verdict;
}

std::vector<Face> disjoint_bases(const Matroid& m) {
  const std::vector<Face> bases = bases_of(m);
  if (m.rank <= 0) return {};
  const std::size_t n = m.complex.vertex_count();
  // Bases indexed by their smallest vertex.
  std::vector<std::vector<Face>> by_min(n);
  for (const Face& b : bases) by_min[b.min_vertex()].push_back(b);

  std::vector<Face> best;
  std::vector<Face> current;
  auto search = [&](auto&& self, Vertex v, Face used, Face excluded) -> void {
    const std::size_t free_count =
        static_cast<std::size_t>((Face::range(n) - used - excluded - Face::range(v)).size());
    if (current.size() + free_count / static_cast<std::size_t>(m.rank) <= best.size()) return;
    if (v >= n) {
      if (current.size() > best.size()) best = current;
      return;
    }
    if (!used.contains(v)) {
      for (const Face& b : by_min[v]) {
        if (b.disjoint(used) && b.disjoint(excluded)) {
          current.push_back(b);
          self(self, v + 1, used | b, excluded);
          current.pop_back();
        }
      }
      self(self, v + 1, used, excluded.with(v));
    } else {
      self(self, v + 1, used, excluded);
    }
  };
  search(search, 0, Face{}, Face{});
  return best;
}

Face coloops(const Matroid& m) {
  const auto bases = bases_of(m);
  if (bases.empty()) return Face{};
  Face common = bases.front();
  for (const Face& b : bases) common = common & b;
  return common;
}

bool has_coloops(const Matroid& m) { return !coloops(m).empty(); }

SimplicialComplex chessboard(int k, int r) {
  if (k < 1 || r < 1) throw Error(ErrorCode::BadParameter, "chessboard needs k, r >= 1");
  return deleted_join(points(static_cast<std::size_t>(r), "c"), k);
}

}  // namespace tvlab
