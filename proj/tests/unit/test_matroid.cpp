#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tvlab/matroid.hpp"
#include "tvlab/random_complex.hpp"

using namespace tvlab;

TEST_CASE("uniform matroids") {
  const Matroid u = uniform_matroid(2, 5);
  CHECK(u.rank == 2);
  CHECK(u.complex.facet_count() == 10);
  CHECK(u.disjoint_bases.size() == 2);
  CHECK_THROWS_AS(uniform_matroid(6, 5), Error);
  CHECK(oracle::is_matroid(u.complex));
}

TEST_CASE("the block construction") {
  for (int r = 2; r <= 4; ++r) {
    const Matroid m = build_mr(r);
    CHECK(m.rank == r);
    CHECK(m.complex.vertex_count() == static_cast<std::size_t>(r * r));
    CHECK(m.disjoint_bases.size() == static_cast<std::size_t>(r));
    CHECK(m.complex.is_pure());
    CHECK_FALSE(has_coloops(m));
  }
  for (int r = 2; r <= 3; ++r) {
    const Matroid m = build_mr_prime(r);
    CHECK(m.disjoint_bases.size() == static_cast<std::size_t>(r + 1));
  }
  CHECK_THROWS_AS(build_mr(1), Error);
  CHECK(oracle::is_matroid(build_mr(3).complex));
}

TEST_CASE("matroid checks agree with the exchange oracle") {
  std::mt19937_64 rng(3);
  int matroids = 0;
  for (int t = 0; t < 80; ++t) {
    const SimplicialComplex s = random_complex(rng, 6, 1 + static_cast<int>(rng() % 5), 3);
    const bool expected = oracle::is_matroid(s);
    matroids += expected ? 1 : 0;
    CHECK(is_matroid(s, MatroidCheck::Exhaustive).is_matroid == expected);
    CHECK(is_matroid(s, MatroidCheck::Exchange).is_matroid == expected);
  }
  CHECK(matroids > 0);
  const MatroidVerdict v = is_matroid(SimplicialComplex(numbered_vertices(3), {Face{0, 1}, Face{2}}), MatroidCheck::Exchange);
  CHECK_FALSE(v.is_matroid);
  CHECK(v.witness_a.has_value());
}

TEST_CASE("direct sums and coloops") {
  const std::vector<Matroid> parts{uniform_matroid(1, 1), uniform_matroid(1, 2)};
  const Matroid s = direct_sum(parts);
  CHECK(s.rank == 2);
  CHECK(coloops(s) == Face{0});
  CHECK(has_coloops(s));
}

TEST_CASE("chessboard complexes") {
  CHECK(chessboard(2, 2).facet_count() == 2);
  CHECK(chessboard(3, 3).facet_count() == 6);
  CHECK(chessboard(2, 4).facet_count() == 12);
  CHECK(chessboard(2, 3).dimension() == 1);
}
