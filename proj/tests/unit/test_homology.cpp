#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tvlab/homology.hpp"
#include "tvlab/matroid.hpp"
#include "tvlab/mr_shelling.hpp"
#include "tvlab/random_complex.hpp"

using namespace tvlab;

namespace {

std::vector<std::int64_t> flat(const BettiVector& b) {
  std::vector<std::int64_t> out{b.minus_one};
  out.insert(out.end(), b.values.begin(), b.values.end());
  return out;
}

}  // namespace

TEST_CASE("Betti numbers agree with dense elimination oracle") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    const SimplicialComplex s = random_complex(rng, 3 + static_cast<int>(rng() % 7), 2 + static_cast<int>(rng() % 8), 5);
    const ChainComplexF2 c = chain_complex(s);
    CHECK(boundary_squared_vanishes(c));
    const BettiVector sparse = betti_f2(c);
    CHECK(flat(sparse) == oracle::betti(s));
    CHECK(betti_f2_dense(c) == sparse);
    CHECK(sparse.alternating_sum() == reduced_euler_characteristic(s));
  }
}

TEST_CASE("spheres and points") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const BettiVector b = betti_f2(simplex_boundary(n));
    CHECK(b.at(static_cast<int>(n) - 2) == 1);
    CHECK(b.alternating_sum() == (n % 2 == 0 ? 1 : -1));
    CHECK(betti_f2(simplex(n)).all_zero());
  }
  CHECK(betti_f2(points(4)).at(0) == 3);
  const SimplicialComplex empty_face(numbered_vertices(0), {Face{}});
  CHECK(betti_f2(empty_face).minus_one == 1);
}

TEST_CASE("homological connectivity conventions") {
  CHECK(homological_connectivity(betti_f2(points(2)), false) == -1);
  CHECK(homological_connectivity(betti_f2(simplex_boundary(4)), false) == 1);
  CHECK(homological_connectivity(BettiVector{}, true) == -2);
  CHECK(homological_connectivity(betti_f2(simplex(3)), false) == 2);
}

TEST_CASE("deleted join of M_2 and M_3") {
  const BettiVector b2 = betti_f2(deleted_join(build_mr(2).complex, 2));
  CHECK(b2.values == std::vector<std::int64_t>{0, 0, 1, 0});
  const SimplicialComplex dj3 = deleted_join(build_mr(3).complex, 2);
  const BettiVector b3 = betti_f2(dj3);
  CHECK(b3.values == std::vector<std::int64_t>{0, 0, 0, 0, 8, 1});
  CHECK(flat(b3) == oracle::betti(dj3));
}

TEST_CASE("induced involution") {
  // Reflection of a triangle boundary acts trivially on H_1 over F2.
  const SimplicialComplex c = simplex_boundary(3);
  const std::vector<Vertex> swap01{1, 0, 2};
  const InducedMap t = induced_involution(c, swap01, 1);
  CHECK(t.homology_rank() == 1);
  CHECK(t.matrix == BitMatrix::identity(1));
  CHECK_FALSE(is_free_f2z2(t));
  // Swapping two points exchanges them; on reduced H_0 = F2 it is trivial.
  const InducedMap p = induced_involution(points(2), std::vector<Vertex>{1, 0}, 0);
  CHECK(p.homology_rank() == 1);
  // Row swap on M_3's deleted join acts freely on H_4.
  const SimplicialComplex dj = deleted_join(build_mr(3).complex, 2);
  const InducedMap rs = induced_involution(dj, row_swap(9), 4);
  CHECK(rs.homology_rank() == 8);
  CHECK(rank_one_plus(rs) == 4);
  CHECK(is_free_f2z2(rs));
  CHECK((rs.matrix * rs.matrix) == BitMatrix::identity(8));
}

TEST_CASE("induced map errors") {
  const SimplicialComplex c = simplex_boundary(3);
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  CHECK(code_of([&] { induced_involution(c, std::vector<Vertex>{0, 0, 1}, 1); }) == ErrorCode::NotAPermutation);
  CHECK(code_of([&] { induced_involution(c, std::vector<Vertex>{1, 2, 0}, 1); }) == ErrorCode::NotInvolution);
  const SimplicialComplex path(numbered_vertices(3), {Face{0, 1}, Face{1, 2}});
  CHECK(code_of([&] { induced_involution(path, std::vector<Vertex>{1, 0, 2}, 0); }) == ErrorCode::NotAnAutomorphism);
}

TEST_CASE("bit matrix rank") {
  BitMatrix m(3, 3);
  m.set(0, 0, true);
  m.set(1, 1, true);
  m.set(2, 0, true);
  m.set(2, 1, true);
  CHECK(m.rank() == 2);
  CHECK(BitMatrix::identity(70).rank() == 70);
}
