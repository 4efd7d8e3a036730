#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "tvlab/balanced.hpp"
#include "tvlab/homology.hpp"
#include "tvlab/matroid.hpp"
#include "tvlab/random_complex.hpp"
#include "tvlab/shelling.hpp"

using namespace tvlab;

TEST_CASE("both verifiers agree with the definition on random orders") {
  std::mt19937_64 rng(23);
  int shellings = 0;
  for (int t = 0; t < 300; ++t) {
    const SimplicialComplex s = random_complex(rng, 3 + static_cast<int>(rng() % 6), 2 + static_cast<int>(rng() % 6), 4);
    const std::vector<std::size_t> order = random_order(rng, s.facet_count());
    const bool expected = oracle::is_shelling(s, order);
    const ShellingVerdict p = verify_shelling_pairwise(s, order);
    CHECK(p.ok == expected);
    CHECK(verify_shelling_intersection(s, order).ok == expected);
    if (p.ok) {
      ++shellings;
      CHECK(check_certificate(s, ShellingOrder{order, p.witnesses}));
    } else {
      CHECK(p.failed_position.has_value());
    }
  }
  CHECK(shellings > 20);
}

TEST_CASE("verifiers agree on every order of small complexes") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 40; ++t) {
    const SimplicialComplex s = random_complex(rng, 4 + static_cast<int>(rng() % 4), 2 + static_cast<int>(rng() % 5), 4);
    REQUIRE(s.facet_count() <= 6);
    std::vector<std::size_t> order(s.facet_count());
    std::iota(order.begin(), order.end(), 0);
    do {
      CHECK(verify_shelling_pairwise(s, order).ok == verify_shelling_intersection(s, order).ok);
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST_CASE("verifiers reject non-permutations") {
  const SimplicialComplex s = simplex_boundary(3);
  CHECK_THROWS_AS(verify_shelling_pairwise(s, std::vector<std::size_t>{0, 0, 1}), Error);
  CHECK_THROWS_AS(verify_shelling_intersection(s, std::vector<std::size_t>{0, 1}), Error);
}

TEST_CASE("tampered certificates are rejected") {
  const SimplicialComplex s = simplex_boundary(4);
  const std::vector<std::size_t> order = identity_order(s.facet_count());
  ShellingVerdict v = verify_shelling_pairwise(s, order);
  REQUIRE(v.ok);
  ShellingOrder cert{order, v.witnesses};
  CHECK(check_certificate(s, cert));
  cert.witnesses.back().v = (cert.witnesses.back().v + 1) % 4;
  CHECK_FALSE(check_certificate(s, cert));
  cert.witnesses.pop_back();
  CHECK_FALSE(check_certificate(s, cert));
}

TEST_CASE("square chessboard complexes are not shellable") {
  for (int n : {2, 3}) {
    const SimplicialComplex c = chessboard(n, n);
    CHECK(search_shelling(c).status == SearchStatus::NotShellable);
    std::vector<std::size_t> order(c.facet_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    bool any = false;
    do {
      any = any || oracle::is_shelling(c, order);
    } while (std::next_permutation(order.begin(), order.end()));
    CHECK_FALSE(any);
  }
  const SearchResult ok = search_shelling(chessboard(2, 3));
  REQUIRE(ok.status == SearchStatus::Found);
  CHECK(oracle::is_shelling(chessboard(2, 3), ok.shelling->order));
}

TEST_CASE("search finds shellings of generated shellable complexes") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 60; ++t) {
    const ShelledComplex s = random_shellable_complex(rng, 4 + static_cast<int>(rng() % 6), 2 + static_cast<int>(rng() % 8));
    CHECK(oracle::is_shelling(s.complex, s.shelling.order));
    const SearchResult r = search_shelling(s.complex);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(oracle::is_shelling(s.complex, r.shelling->order));
    // Rearranging by decreasing dimension keeps a shelling.
    CHECK(verify_shelling_pairwise(s.complex, dimension_decreasing(s.complex, s.shelling.order)).ok);
  }
}

TEST_CASE("search budget") {
  CHECK(search_shelling(chessboard(3, 3), 1).status == SearchStatus::Exhausted);
}

TEST_CASE("sphere counts equal Betti numbers for shellings") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 60; ++t) {
    const ShelledComplex s = random_shellable_complex(rng, 3 + static_cast<int>(rng() % 8), 2 + static_cast<int>(rng() % 10));
    const std::vector<std::int64_t> h = homotopy_from_shelling(s.complex, s.shelling);
    const std::vector<std::int64_t> b = oracle::betti(s.complex);
    for (std::size_t i = 0; i < h.size(); ++i) CHECK(h[i] == b[i + 1]);
  }
  CHECK_THROWS_AS(homotopy_from_shelling(chessboard(2, 2), ShellingOrder{{0, 1}, {}}), Error);
}

TEST_CASE("compatible skeleton shellings") {
  const SimplicialComplex s = simplex_boundary(5);
  const ShellingOrder sh{identity_order(s.facet_count()), {}};
  for (int m = 0; m <= 2; ++m) {
    const ShelledComplex sk = compatible_skeleton_shelling(s, sh, m);
    CHECK(sk.complex.dimension() == m);
    CHECK(oracle::is_shelling(sk.complex, sk.shelling.order));
    CHECK(is_compatible(s, sh, sk.complex, sk.shelling));
  }
  CHECK_THROWS_AS(compatible_skeleton_shelling(s, sh, 5), Error);
  CHECK_THROWS_AS(compatible_skeleton_shelling(chessboard(2, 2), ShellingOrder{{0, 1}, {}}, 0), Error);
}

TEST_CASE("lexicographic join shelling") {
  const SimplicialComplex hex = chessboard(2, 3);
  const SearchResult r = search_shelling(hex);
  REQUIRE(r.shelling);
  const std::vector<ShelledComplex> parts{{hex, *r.shelling}, {simplex_boundary(3), {identity_order(3), {}}}};
  const ShelledComplex j = lexicographic_join_shelling(parts);
  CHECK(j.complex.facet_count() == 18);
  CHECK(oracle::is_shelling(j.complex, j.shelling.order));
}

TEST_CASE("balanced skeletons") {
  const SimplicialComplex board = chessboard(2, 3);
  const VertexColoring rows = row_coloring(board);
  CHECK(balanced_type(board, rows) == std::vector<int>{1, 1});
  const SearchResult r = search_shelling(board);
  REQUIRE(r.shelling);
  const std::vector<ShelledComplex> parts{{board, *r.shelling}, {board, *r.shelling}};
  const ShelledComplex j = lexicographic_join_shelling(parts);
  const VertexColoring c = row_coloring(j.complex);
  REQUIRE(balanced_type(j.complex, c) == std::vector<int>{2, 2});
  for (const std::vector<int>& b : {std::vector<int>{2, 1}, {1, 1}, {0, 2}, {1, 0}}) {
    const ShelledComplex sk = shell_balanced_skeleton(j.complex, c, b, j.shelling);
    CHECK(sk.complex.facets() == balanced_b_skeleton(j.complex, c, b).facets());
    CHECK(oracle::is_shelling(sk.complex, sk.shelling.order));
    for (const Face& f : sk.complex.facets()) CHECK(c.type_of(f) == b);
  }
  CHECK_THROWS_AS(balanced_b_skeleton(j.complex, c, {3, 0}), Error);
  CHECK_FALSE(balanced_type(SimplicialComplex(board.vertices(), {Face{0, 1}, Face{2}}), rows).has_value());
}
