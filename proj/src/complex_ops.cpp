#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "tvlab/complex.hpp"

namespace tvlab {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
  std::vector<std::uint32_t> parent;
};

void require_member(const SimplicialComplex& sigma, const Face& face) {
  if (!sigma.contains(face)) {
    throw Error(ErrorCode::FaceNotInComplex, "face of size " + std::to_string(face.size()) +
                                                 " is not a face of the complex");
  }
}

}  // namespace

SimplicialComplex join(std::span<const SimplicialComplex> components) {
  if (components.empty()) throw Error(ErrorCode::BadParameter, "join of no complexes");
  std::vector<VertexInfo> vertices;
  std::vector<Vertex> offsets;
  for (std::size_t i = 0; i < components.size(); ++i) {
    offsets.push_back(static_cast<Vertex>(vertices.size()));
    for (VertexInfo info : components[i].vertices()) {
      if (info.row) info.label += "/" + std::to_string(*info.row);
      info.row = static_cast<int>(i + 1);
      vertices.push_back(std::move(info));
    }
  }
  if (vertices.size() > kMaxVertices) {
    throw Error(ErrorCode::TooManyVertices, "join has " + std::to_string(vertices.size()) + " vertices");
  }

  std::vector<Face> facets{Face{}};
  for (std::size_t i = 0; i < components.size(); ++i) {
    std::vector<Face> next;
    next.reserve(facets.size() * components[i].facet_count());
    for (const Face& partial : facets) {
      for (const Face& f : components[i].facets()) {
        Face shifted;
        f.for_each_vertex([&](Vertex v) { shifted = shifted.with(v + offsets[i]); });
        next.push_back(partial | shifted);
      }
    }
    facets = std::move(next);
  }
  return SimplicialComplex(std::move(vertices), std::move(facets));
}

std::vector<VertexInfo> deleted_join_vertices(const std::vector<VertexInfo>& base, int k) {
  std::vector<VertexInfo> out;
  out.reserve(base.size() * static_cast<std::size_t>(k));
  for (const VertexInfo& info : base) {
    for (int row = 1; row <= k; ++row) {
      VertexInfo copy = info;
      copy.row = row;
      out.push_back(std::move(copy));
    }
  }
  return out;
}

SimplicialComplex deleted_join(const SimplicialComplex& base, int k) {
  if (k < 1) throw Error(ErrorCode::BadParameter, "deleted join needs k >= 1");
  const std::size_t n = base.vertex_count();
  if (n * static_cast<std::size_t>(k) > kMaxVertices) {
    throw Error(ErrorCode::TooManyVertices,
                "deleted join would have " + std::to_string(n * static_cast<std::size_t>(k)) + " vertices");
  }
  auto vertices = deleted_join_vertices(base.vertices(), k);
  if (base.is_void()) return SimplicialComplex::void_complex(std::move(vertices));

  const FaceTable& table = base.faces();
  std::vector<Face> all;
  all.reserve(table.total());
  for (const auto& level : table.by_dim) all.insert(all.end(), level.begin(), level.end());
  const std::unordered_set<Face, FaceHash> members(all.begin(), all.end());

  const Face ground = Face::range(n);
  std::vector<Face> rows(static_cast<std::size_t>(k));
  std::vector<Face> facets;

  auto is_maximal = [&](const Face& used) {
    const Face free_vertices = ground - used;
    for (const Face& row : rows) {
      bool extendable = false;
      free_vertices.for_each_vertex([&](Vertex v) {
        if (!extendable && members.count(row.with(v))) extendable = true;
      });
      if (extendable) return false;
    }
    return true;
  };

  auto emit = [&] {
    Face f;
    for (int i = 0; i < k; ++i) {
      rows[static_cast<std::size_t>(i)].for_each_vertex(
          [&](Vertex v) { f = f.with(deleted_join_vertex(v, i + 1, k)); });
    }
    facets.push_back(f);
  };

  auto recurse = [&](auto&& self, int row, Face used) -> void {
    if (row == k) {
      if (is_maximal(used)) emit();
      return;
    }
    for (const Face& f : all) {
      if (!f.disjoint(used)) continue;
      rows[static_cast<std::size_t>(row)] = f;
      self(self, row + 1, used | f);
    }
  };
  recurse(recurse, 0, Face{});
  return SimplicialComplex(std::move(vertices), std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& sigma, const Face& face) {
  require_member(sigma, face);
  std::vector<Face> gens;
  for (const Face& f : sigma.facets()) {
    if (face.is_subset_of(f)) gens.push_back(f - face);
  }
  return SimplicialComplex::from_generators(sigma.vertices(), std::move(gens));
}

SimplicialComplex deletion(const SimplicialComplex& sigma, const Face& face, EmptyDeletion policy) {
  if (face.empty()) {
    if (policy == EmptyDeletion::Reject) {
      throw Error(ErrorCode::BadParameter, "deleting the empty face removes every face");
    }
    return SimplicialComplex::void_complex(sigma.vertices());
  }
  std::vector<Face> gens;
  for (const Face& f : sigma.facets()) {
    if (!face.is_subset_of(f)) {
      gens.push_back(f);
    } else {
      face.for_each_vertex([&](Vertex v) { gens.push_back(f.without(v)); });
    }
  }
  return SimplicialComplex::from_generators(sigma.vertices(), std::move(gens));
}

SimplicialComplex delete_vertex(const SimplicialComplex& sigma, Vertex v) {
  return deletion(sigma, Face{v}, EmptyDeletion::Reject);
}

SimplicialComplex restriction(const SimplicialComplex& sigma, const Face& allowed) {
  std::vector<Face> gens;
  gens.reserve(sigma.facet_count());
  for (const Face& f : sigma.facets()) gens.push_back(f & allowed);
  if (sigma.is_void()) return sigma;
  return SimplicialComplex::from_generators(sigma.vertices(), std::move(gens));
}

SimplicialComplex skeleton(const SimplicialComplex& sigma, int m) {
  if (m < -1) throw Error(ErrorCode::BadParameter, "skeleton dimension must be >= -1");
  if (sigma.is_void() || m >= sigma.dimension()) return sigma;
  std::vector<Face> gens;
  for (const Face& f : sigma.facets()) {
    if (f.dim() < m) gens.push_back(f);
  }
  const auto& level = sigma.faces().of_dim(m);
  gens.insert(gens.end(), level.begin(), level.end());
  return SimplicialComplex::from_generators(sigma.vertices(), std::move(gens));
}

SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vertex_count() != b.vertex_count()) {
    throw Error(ErrorCode::BadParameter, "intersection needs a common vertex table");
  }
  const FaceTable& fa = a.faces();
  const FaceTable& fb = b.faces();
  std::vector<Face> common;
  const std::size_t levels = std::min(fa.by_dim.size(), fb.by_dim.size());
  for (std::size_t s = 0; s < levels; ++s) {
    std::set_intersection(fa.by_dim[s].begin(), fa.by_dim[s].end(), fb.by_dim[s].begin(),
                          fb.by_dim[s].end(), std::back_inserter(common));
  }
  return SimplicialComplex::from_generators(a.vertices(), std::move(common));
}

std::vector<SimplicialComplex> connected_components(const SimplicialComplex& sigma) {
  UnionFind uf(sigma.vertex_count());
  for (const Face& f : sigma.facets()) {
    if (f.empty()) continue;
    const Vertex root = f.min_vertex();
    f.for_each_vertex([&](Vertex v) { uf.unite(v, root); });
  }
  std::vector<std::uint32_t> roots;
  std::vector<std::vector<Face>> groups;
  for (const Face& f : sigma.facets()) {
    if (f.empty()) continue;
    const std::uint32_t r = uf.find(f.min_vertex());
    auto it = std::find(roots.begin(), roots.end(), r);
    if (it == roots.end()) {
      roots.push_back(r);
      groups.emplace_back();
      it = roots.end() - 1;
    }
    groups[static_cast<std::size_t>(it - roots.begin())].push_back(f);
  }
  std::vector<SimplicialComplex> out;
  for (auto& g : groups) out.emplace_back(sigma.vertices(), std::move(g));
  return out;
}

Face permute_face(const Face& f, std::span<const Vertex> perm) {
  Face out;
  f.for_each_vertex([&](Vertex v) { out = out.with(perm[v]); });
  return out;
}

SimplicialComplex permute_vertices(const SimplicialComplex& sigma, std::span<const Vertex> perm) {
  const std::size_t n = sigma.vertex_count();
  if (perm.size() != n) throw Error(ErrorCode::NotAPermutation, "permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (Vertex v : perm) {
    if (v >= n || seen[v]) throw Error(ErrorCode::NotAPermutation, "not a bijection on vertices");
    seen[v] = true;
  }
  std::vector<VertexInfo> vertices(n);
  for (std::size_t v = 0; v < n; ++v) vertices[perm[v]] = sigma.vertices()[v];
  std::vector<Face> facets;
  facets.reserve(sigma.facet_count());
  for (const Face& f : sigma.facets()) facets.push_back(permute_face(f, perm));
  return SimplicialComplex(std::move(vertices), std::move(facets));
}

SimplicialComplex compact(const SimplicialComplex& sigma) {
  const Face used = sigma.support();
  std::vector<Vertex> renumber(sigma.vertex_count(), 0);
  std::vector<VertexInfo> vertices;
  used.for_each_vertex([&](Vertex v) {
    renumber[v] = static_cast<Vertex>(vertices.size());
    vertices.push_back(sigma.vertices()[v]);
  });
  std::vector<Face> facets;
  for (const Face& f : sigma.facets()) facets.push_back(permute_face(f, renumber));
  return SimplicialComplex(std::move(vertices), std::move(facets));
}

int degree(const SimplicialComplex& sigma, const Face& face) {
  int best = -1;
  for (const Face& f : sigma.facets()) {
    if (face.is_subset_of(f)) best = std::max(best, f.size());
  }
  if (best < 0) {
    throw Error(ErrorCode::FaceNotInComplex, "degree of a face outside the complex");
  }
  return best;
}

std::int64_t FTriangle::row_sum(int i) const {
  std::int64_t s = 0;
  for (std::int64_t v : f.at(static_cast<std::size_t>(i))) s += v;
  return s;
}

FTriangle f_triangle(const SimplicialComplex& sigma) {
  FTriangle tri;
  tri.d = sigma.is_void() ? -1 : sigma.dimension();
  const std::size_t width = static_cast<std::size_t>(tri.d + 2);
  tri.f.assign(width, std::vector<std::int64_t>(width, 0));
  tri.h.assign(width, 0);
  if (sigma.is_void()) return tri;

  const FaceTable& table = sigma.faces();
  std::vector<std::vector<int>> deg(table.by_dim.size());
  for (std::size_t s = 0; s < table.by_dim.size(); ++s) deg[s].assign(table.by_dim[s].size(), 0);
  for (const Face& f : sigma.facets()) {
    const auto s = static_cast<std::size_t>(f.size());
    deg[s][*table.index_of(f)] = f.size();
  }
  for (std::size_t s = table.by_dim.size() - 1; s >= 1; --s) {
    const auto& level = table.by_dim[s];
    const auto& below = table.by_dim[s - 1];
    for (std::size_t i = 0; i < level.size(); ++i) {
      const int d = deg[s][i];
      level[i].for_each_vertex([&](Vertex v) {
        const Face g = level[i].without(v);
        const auto j = static_cast<std::size_t>(std::lower_bound(below.begin(), below.end(), g) - below.begin());
        deg[s - 1][j] = std::max(deg[s - 1][j], d);
      });
    }
  }
  for (std::size_t s = 0; s < table.by_dim.size(); ++s) {
    for (int d : deg[s]) ++tri.f[s][static_cast<std::size_t>(d)];
  }
  for (std::size_t j = 0; j < width; ++j) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i <= j; ++i) acc += (i % 2 == 0 ? 1 : -1) * tri.f[i][j];
    tri.h[j] = (j % 2 == 0 ? 1 : -1) * acc;
  }
  return tri;
}

std::vector<std::int64_t> f_vector(const SimplicialComplex& sigma) {
  const FaceTable& table = sigma.faces();
  std::vector<std::int64_t> out;
  for (const auto& level : table.by_dim) out.push_back(static_cast<std::int64_t>(level.size()));
  return out;
}

std::int64_t euler_characteristic(const SimplicialComplex& sigma) {
  const auto f = f_vector(sigma);
  std::int64_t chi = 0;
  for (std::size_t i = 1; i < f.size(); ++i) chi += (i % 2 == 1 ? 1 : -1) * f[i];
  return chi;
}

std::int64_t reduced_euler_characteristic(const SimplicialComplex& sigma) {
  if (sigma.is_void()) return 0;
  return euler_characteristic(sigma) - 1;
}

SimplicialComplex simplex(std::size_t n, const std::string& prefix) {
  return SimplicialComplex(numbered_vertices(n, prefix), {Face::range(n)});
}

SimplicialComplex simplex_boundary(std::size_t n, const std::string& prefix) {
  const Face all = Face::range(n);
  std::vector<Face> facets;
  if (n == 0) return SimplicialComplex::void_complex();
  all.for_each_vertex([&](Vertex v) { facets.push_back(all.without(v)); });
  return SimplicialComplex(numbered_vertices(n, prefix), std::move(facets));
}

SimplicialComplex points(std::size_t n, const std::string& prefix) {
  std::vector<Face> facets;
  for (Vertex v = 0; v < n; ++v) facets.push_back(Face{v});
  if (n == 0) facets.push_back(Face{});
  return SimplicialComplex(numbered_vertices(n, prefix), std::move(facets));
}

}  // namespace tvlab

namespace tvlab {

SimplicialComplex deleted_join_link(const SimplicialComplex& base, int k, const Face& face) {
  if (k < 1) throw Error(ErrorCode::BadParameter, "deleted join needs k >= 1");
  const std::size_t n = base.vertex_count();
  const auto ks = static_cast<Vertex>(k);
  if (n * ks > kMaxVertices) throw Error(ErrorCode::TooManyVertices, "deleted join too large");
  std::vector<Face> rows(ks);
  Face used;
  bool ok = true;
  face.for_each_vertex([&](Vertex x) {
    const Vertex v = x / ks;
    if (v >= n || used.contains(v)) ok = false;
    if (v < n) {
      used = used.with(v);
      rows[x % ks] = rows[x % ks].with(v);
    }
  });
  if (!ok || !std::all_of(rows.begin(), rows.end(), [&](const Face& r) { return base.contains(r); })) {
    throw Error(ErrorCode::FaceNotInComplex, "face is not in the deleted join");
  }
  // Depth-first over joinable vertices in increasing order; keep the maximal
  // faces reached.
  std::vector<Vertex> candidates;
  for (Vertex x = 0; x < n * ks; ++x) {
    if (!used.contains(x / ks)) candidates.push_back(x);
  }
  std::vector<Face> generators;
  auto rec = [&](auto&& self, std::size_t from, Face tau, Face taken) -> void {
    bool extended = false;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const Vertex x = candidates[i];
      const Vertex v = x / ks;
      if (taken.contains(v)) continue;
      const Face grown = rows[x % ks].with(v);
      if (!base.contains(grown)) continue;
      extended = true;
      if (i < from) continue;
      rows[x % ks] = grown;
      self(self, i + 1, tau.with(x), taken.with(v));
      rows[x % ks] = grown.without(v);
    }
    if (!extended) generators.push_back(tau);
  };
  rec(rec, 0, Face{}, Face{});
  return SimplicialComplex::from_generators(deleted_join_vertices(base.vertices(), k), std::move(generators));
}

}  // namespace tvlab
