#include "tvlab/random_complex.hpp"

#include <algorithm>
#include <numeric>

namespace tvlab {

namespace {

Face random_subset(std::mt19937_64& rng, int n, int max_size) {
  std::uniform_int_distribution<int> size_dist(1, std::max(1, std::min(max_size, n)));
  std::vector<Vertex> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), Vertex{0});
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(static_cast<std::size_t>(size_dist(rng)));
  return Face::from_vertices(pool);
}

}  // namespace

std::vector<std::size_t> random_order(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

ShelledComplex random_shellable_complex(std::mt19937_64& rng, int n, int facets, int attempts) {
  if (n < 1 || n > static_cast<int>(kMaxVertices) || facets < 1) {
    throw Error(ErrorCode::BadParameter, "random shellable complex needs 1 <= n <= 128 and facets >= 1");
  }
  const int max_size = std::min(n, 5);
  std::vector<Face> chosen{random_subset(rng, n, max_size)};
  int rejected = 0;
  while (static_cast<int>(chosen.size()) < facets && rejected < attempts) {
    const Face f = random_subset(rng, n, max_size);
    const bool comparable = std::any_of(chosen.begin(), chosen.end(),
                                        [&](const Face& g) { return f.is_subset_of(g) || g.is_subset_of(f); });
    if (comparable) {
      ++rejected;
      continue;
    }
    std::vector<Face> next = chosen;
    next.push_back(f);
    const SimplicialComplex candidate(numbered_vertices(static_cast<std::size_t>(n)), next);
    std::vector<std::size_t> order;
    for (const Face& g : next) order.push_back(*candidate.facet_index(g));
    if (verify_shelling_intersection(candidate, order).ok) {
      chosen = std::move(next);
    } else {
      ++rejected;
    }
  }
  SimplicialComplex sigma(numbered_vertices(static_cast<std::size_t>(n)), chosen);
  std::vector<std::size_t> order;
  for (const Face& g : chosen) order.push_back(*sigma.facet_index(g));
  ShellingVerdict v = verify_shelling_pairwise(sigma, order);
  if (!v.ok) throw Error(ErrorCode::InputNotShelling, "generated order does not verify");
  return ShelledComplex{std::move(sigma), ShellingOrder{std::move(order), std::move(v.witnesses)}};
}

SimplicialComplex random_complex(std::mt19937_64& rng, int n, int facets, int max_size) {
  if (n < 1 || n > static_cast<int>(kMaxVertices)) throw Error(ErrorCode::BadParameter, "bad vertex count");
  std::vector<Face> gens;
  for (int i = 0; i < facets; ++i) gens.push_back(random_subset(rng, n, max_size));
  return SimplicialComplex::from_generators(numbered_vertices(static_cast<std::size_t>(n)), std::move(gens));
}

}  // namespace tvlab
