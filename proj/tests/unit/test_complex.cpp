#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tvlab/complex.hpp"
#include "tvlab/matroid.hpp"
#include "tvlab/random_complex.hpp"

using namespace tvlab;

namespace {

std::int64_t binom(int n, int k) {
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

TEST_CASE("face masks") {
  const Face f{0, 3, 70};
  CHECK(f.size() == 3);
  CHECK(f.contains(70));
  CHECK(f.dim() == 2);
  CHECK(f.without(3) == Face{0, 70});
  CHECK(Face{0, 70}.is_subset_of(f));
  CHECK(f.vertices() == std::vector<Vertex>{0, 3, 70});
  CHECK((f & Face{3, 4}) == Face{3});
}

TEST_CASE("simplex face counts are binomial") {
  for (int n = 1; n <= 8; ++n) {
    const SimplicialComplex s = simplex(static_cast<std::size_t>(n));
    for (int d = -1; d < n; ++d) CHECK(s.faces().count(d) == static_cast<std::size_t>(binom(n, d + 1)));
  }
}

TEST_CASE("face table equals the downward closure") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const SimplicialComplex s = random_complex(rng, 8, 6, 5);
    const auto expected = oracle::faces_by_size(s);
    for (const auto& [size, set] : expected) {
      const auto& got = s.faces().of_dim(size - 1);
      CHECK(std::vector<Face>(set.begin(), set.end()) == got);
    }
    CHECK(s.faces().top_dim() == expected.rbegin()->first - 1);
  }
}

TEST_CASE("constructor rejects bad facet lists") {
  CHECK_THROWS_AS(SimplicialComplex(numbered_vertices(3), {Face{0, 1}, Face{0}}), Error);
  try {
    SimplicialComplex(numbered_vertices(2), {Face{0, 5}});
    FAIL("expected VertexOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::VertexOutOfRange);
  }
  const SimplicialComplex g = SimplicialComplex::from_generators(numbered_vertices(3), {Face{0, 1}, Face{0}, Face{2}});
  CHECK(g.facet_count() == 2);
}

TEST_CASE("void complex and the empty face") {
  const SimplicialComplex v = SimplicialComplex::void_complex();
  CHECK(v.is_void());
  CHECK(v.dimension() == -2);
  const SimplicialComplex e(numbered_vertices(0), {Face{}});
  CHECK(e.dimension() == -1);
  CHECK(reduced_euler_characteristic(e) == -1);
}

TEST_CASE("link and deletion") {
  const SimplicialComplex s = simplex_boundary(4);
  const SimplicialComplex lk = link(s, Face{0});
  CHECK(compact(lk).facets() == simplex_boundary(3).facets());
  CHECK_THROWS_AS(link(s, Face{0, 1, 2, 3}), Error);
  const SimplicialComplex del = delete_vertex(s, 0);
  CHECK(del.facet_count() == 1);
  CHECK(deletion(s, Face{}).is_void());
  CHECK_THROWS_AS(deletion(s, Face{}, EmptyDeletion::Reject), Error);
}

TEST_CASE("deleted join vertex layout") {
  const SimplicialComplex base = points(3);
  const SimplicialComplex dj = deleted_join(base, 2);
  CHECK(dj.vertex_count() == 6);
  CHECK(deleted_join_vertex(2, 2, 2) == 5);
  CHECK(dj.vertices()[5].row == 2);
  // [3]^{*2} is the chessboard complex Δ_{2,3}: a hexagon.
  CHECK(dj.facet_count() == 6);
  CHECK(euler_characteristic(dj) == 0);
}

TEST_CASE("link in a deleted join agrees with the built join") {
  const Matroid m = build_mr(3);
  const SimplicialComplex dj = deleted_join(m.complex, 2);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const Face f = dj.facets()[rng() % dj.facet_count()];
    Face a;
    for (Vertex v : f.vertices()) {
      if (rng() % 2) a = a.with(v);
    }
    CHECK(deleted_join_link(m.complex, 2, a).facets() == link(dj, a).facets());
  }
  CHECK_THROWS_AS(deleted_join_link(m.complex, 2, Face{0, 1}), Error);
}

TEST_CASE("f-triangle of a simplex boundary") {
  const FTriangle ft = f_triangle(simplex_boundary(4));
  CHECK(ft.d == 2);
  CHECK(ft.h == std::vector<std::int64_t>{0, 0, 0, 1});
  CHECK(f_vector(simplex_boundary(4)) == std::vector<std::int64_t>{1, 4, 6, 4});
}

TEST_CASE("connected components and compaction") {
  const SimplicialComplex s(numbered_vertices(6), {Face{0, 1}, Face{1, 2}, Face{4, 5}});
  const auto parts = connected_components(s);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].facet_count() == 2);
  CHECK(compact(parts[1]).vertex_count() == 2);
}

TEST_CASE("permutation of vertices") {
  const SimplicialComplex s(numbered_vertices(3), {Face{0, 1}, Face{2}});
  const std::vector<Vertex> perm{2, 0, 1};
  CHECK(permute_vertices(s, perm).facets() == std::vector<Face>{Face{0, 2}, Face{1}});
}

TEST_CASE("join of two complexes") {
  const std::vector<SimplicialComplex> parts{points(2), points(3)};
  const SimplicialComplex j = join(parts);
  CHECK(j.vertex_count() == 5);
  CHECK(j.facet_count() == 6);
}
