#include <doctest.h>

#include "oracles.hpp"
#include "tvlab/homology.hpp"
#include "tvlab/matroid.hpp"
#include "tvlab/mr_shelling.hpp"

using namespace tvlab;

TEST_CASE("pair order") {
  CHECK(precedes({0, 0}, {1, 0}));
  CHECK(precedes({0, 1}, {1, 0}));
  CHECK_FALSE(precedes({1, 0}, {0, 1}));
  CHECK(precedes({0, 1}, {1, 1}));
  CHECK(precedes({1, 1}, {2, 0}));
  CHECK_FALSE(precedes({2, 0}, {1, 1}));
  CHECK_FALSE(precedes({1, 0}, {1, 0}));
}

TEST_CASE("explicit shelling of the deleted join of M_3") {
  const BlockJoinShelling s = shelling_mr2(3);
  CHECK(s.complex.facets() == deleted_join(build_mr(3).complex, 2).facets());
  CHECK(oracle::is_shelling(s.complex, s.shelling.order));
  CHECK(verify_shelling_intersection(s.complex, s.shelling.order).ok);
  CHECK(check_certificate(s.complex, s.shelling));
  // The chessboard join comes first: 6^3 facets of size 2r.
  CHECK(s.chessboard_facets == 216);
  for (std::size_t i = 0; i < s.chessboard_facets; ++i) CHECK(s.complex.facets()[s.shelling.order[i]].size() == 6);
  const std::vector<std::int64_t> h = homotopy_from_shelling(s.complex, s.shelling);
  CHECK(h == std::vector<std::int64_t>{0, 0, 0, 0, 8, 1});
}

TEST_CASE("shellings of the M'_r deleted joins") {
  for (int r = 2; r <= 3; ++r) {
    const BlockJoinShelling s = shelling_mr2_prime(r);
    CHECK(s.complex.is_pure());
    CHECK(oracle::is_shelling(s.complex, s.shelling.order));
    const std::vector<std::int64_t> h = homotopy_from_shelling(s.complex, s.shelling);
    for (int i = 0; i <= 2 * r - 2; ++i) CHECK(h[static_cast<std::size_t>(i)] == 0);
  }
  CHECK_THROWS_AS(shelling_mr2(2), Error);
  CHECK_THROWS_AS(shelling_mr2_prime(1), Error);
}

TEST_CASE("symmetry generators are automorphisms") {
  const SimplicialComplex dj = deleted_join(build_mr(3).complex, 2);
  for (const auto& g : block_join_symmetries(3, 3)) CHECK(permute_vertices(dj, g).facets() == dj.facets());
  const auto swap = row_swap(9);
  CHECK(swap[0] == 1);
  CHECK(swap[17] == 16);
}

TEST_CASE("covering of the deleted join") {
  const MrCovering c = covering_subcomplexes(3);
  CHECK(c.swap_exchanges_components);
  CHECK(betti_f2(c.lower1).all_zero());
  CHECK(betti_f2(c.lower2).all_zero());
  const BettiVector m1 = betti_f2(c.meet1);
  CHECK(m1.at(3) == 4);
  CHECK(m1.alternating_sum() == -4);
  const BettiVector top = betti_f2(c.top);
  CHECK(top.at(5) != 0);
  CHECK(top.at(4) == 0);
}
