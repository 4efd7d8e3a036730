#pragma once

#include <cstdint>
#include <random>

#include "tvlab/complex.hpp"
#include "tvlab/shelling.hpp"

namespace tvlab {

/// Grows a possibly non-pure complex on `n` vertices one facet at a time,
/// keeping a candidate only if the extended order still verifies as a
/// shelling. Stops after `facets` facets or `attempts` rejected candidates.
ShelledComplex random_shellable_complex(std::mt19937_64& rng, int n, int facets, int attempts = 2000);

/// Up to `facets` random subsets of {0..n-1} of size 1..max_size, reduced to
/// their maximal members.
SimplicialComplex random_complex(std::mt19937_64& rng, int n, int facets, int max_size);

/// A uniformly random order of 0..n-1.
std::vector<std::size_t> random_order(std::mt19937_64& rng, std::size_t n);

}  // namespace tvlab
