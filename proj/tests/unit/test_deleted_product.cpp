#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tvlab/deleted_product.hpp"
#include "tvlab/error.hpp"
#include "tvlab/random_complex.hpp"

using namespace tvlab;

namespace {

bool same_betti(const BettiVector& b, const std::vector<std::int64_t>& o) {
  if (b.minus_one != (o.empty() ? 0 : o[0])) return false;
  const int n = std::max(static_cast<int>(o.size()) - 1, static_cast<int>(b.values.size()));
  for (int i = 0; i < n; ++i) {
    const std::int64_t expected = static_cast<std::size_t>(i) + 1 < o.size() ? o[static_cast<std::size_t>(i) + 1] : 0;
    if (b.at(i) != expected) return false;
  }
  return true;
}

BettiVector product_betti(const SimplicialComplex& sigma, int k) {
  return betti_f2(product_chain_complex(deleted_product(sigma, k)));
}

SimplicialComplex hexagon() {
  std::vector<Face> edges;
  for (Vertex v = 0; v < 6; ++v) edges.push_back(Face{v, static_cast<Vertex>((v + 1) % 6)});
  return SimplicialComplex(numbered_vertices(6), edges);
}

}  // namespace

TEST_CASE("small deleted products") {
  const BettiVector edge = product_betti(simplex(2), 2);
  CHECK(edge.at(0) == 1);
  CHECK(edge.alternating_sum() == 1);
  const BettiVector hex = product_betti(hexagon(), 2);
  CHECK(hex.at(0) == 0);
  CHECK(hex.at(1) == 1);
  for (std::size_t n = 2; n <= 5; ++n) {
    const BettiVector s = product_betti(simplex(n), 2);
    for (int i = 0; i <= static_cast<int>(n); ++i) CHECK(s.at(i) == (i == static_cast<int>(n) - 2 ? 1 : 0));
  }
  CHECK(product_betti(simplex(3), 3).at(0) == 5);
  CHECK(product_betti(simplex(4), 3).at(1) == 13);
  CHECK(product_betti(simplex(4), 1).all_zero());
}

TEST_CASE("deleted product homology agrees with the brute-force oracle") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 25; ++t) {
    const SimplicialComplex s = random_complex(rng, 6, 2 + static_cast<int>(rng() % 5), 3);
    for (int k = 1; k <= 3; ++k) CHECK(same_betti(product_betti(s, k), oracle::product_betti(s, k)));
  }
  const Matroid u = uniform_matroid(2, 5);
  CHECK(same_betti(product_betti(u.complex, 2), oracle::product_betti(u.complex, 2)));
  CHECK(same_betti(product_betti(build_mr(2).complex, 3), oracle::product_betti(build_mr(2).complex, 3)));
}

TEST_CASE("chain complex invariants") {
  const CWProductComplex p = deleted_product(build_mr(3).complex, 2);
  const ChainComplexF2 c = product_chain_complex(p);
  CHECK(boundary_squared_vanishes(c));
  CHECK(reduced_euler_characteristic(c) == betti_f2(c).alternating_sum());
  CHECK(betti_f2(c) == betti_f2_dense(c));
  CHECK(count_product_cells(build_mr(3).complex, 2) == p.total());
}

TEST_CASE("top cells are ordered tuples of disjoint bases") {
  for (const Matroid& m : {uniform_matroid(2, 4), uniform_matroid(2, 6), build_mr(2), build_mr_prime(2)}) {
    const std::vector<Face> bases = m.complex.facets();
    for (int k = 2; k <= 3; ++k) {
      std::size_t expected = 0;
      for (const Face& a : bases) {
        for (const Face& b : bases) {
          if (!a.disjoint(b)) continue;
          if (k == 2) {
            ++expected;
            continue;
          }
          for (const Face& c : bases) expected += (c.disjoint(a) && c.disjoint(b)) ? 1 : 0;
        }
      }
      const CWProductComplex p = deleted_product(m.complex, k);
      const int top = k * m.rank - k;
      if (expected == 0) {
        CHECK(p.top_dim() < top);
      } else {
        REQUIRE(p.top_dim() == top);
        CHECK(p.count(top) == expected);
      }
    }
  }
}

TEST_CASE("transposing factors permutes cells") {
  const CWProductComplex p = deleted_product(uniform_matroid(2, 5).complex, 2);
  for (int d = 0; d <= p.top_dim(); ++d) {
    for (std::size_t i = 0; i < p.count(d); ++i) {
      const ProductCell c = p.cell(d, i);
      const std::vector<Face> swapped{c.factors[1], c.factors[0]};
      const std::size_t j = p.index_of(swapped);
      REQUIRE(j != static_cast<std::size_t>(-1));
      CHECK(p.cell(d, j).dim() == d);
    }
  }
}

TEST_CASE("connectivity reports") {
  const DeletedProductReport rep = analyze_deleted_product(uniform_matroid(2, 6), 2);
  CHECK(rep.b == 3);
  CHECK(rep.hypotheses_hold);
  CHECK(rep.lower_bound == deleted_product_lower_bound(2, 3, 2));
  CHECK(rep.connectivity >= rep.lower_bound);
  CHECK(rep.bound_respected);
  CHECK(deleted_product_lower_bound(4, 4, 2) == 1);
  CHECK(deleted_product_lower_bound(3, 2, 3) == -2);
  const CWProductComplex c = conf2(build_mr(2));
  CHECK(c.k == 2);
  CHECK(homological_connectivity(c) >= 0);
}

TEST_CASE("cell budget") {
  CHECK_THROWS_AS(deleted_product(build_mr(3).complex, 3, 1000), Error);
  CHECK_THROWS_AS(count_product_cells(build_mr(3).complex, 3, 1000), Error);
  CHECK_THROWS_AS(deleted_product(simplex(3), 0), Error);
}
