#include <doctest.h>

#include <random>

#include "tvlab/fundamental_group.hpp"
#include "tvlab/isomorphism.hpp"
#include "tvlab/matroid.hpp"
#include "tvlab/mr_shelling.hpp"
#include "tvlab/random_complex.hpp"
#include "tvlab/shelling.hpp"
#include "tvlab/vertex_decomposable.hpp"

using namespace tvlab;

namespace {

// Replays a pre-order decomposition record and checks every shedding step.
bool replay(const SimplicialComplex& sigma, const std::vector<ShedStep>& steps, std::size_t& pos, int depth) {
  if (sigma.facet_count() <= 1) return true;
  if (pos >= steps.size()) return false;
  const ShedStep s = steps[pos++];
  if (s.action != ShedAction::Link || s.depth != depth) return false;
  const SimplicialComplex lk = link(sigma, Face{s.vertex});
  const SimplicialComplex del = delete_vertex(sigma, s.vertex);
  for (const Face& f : lk.facets()) {
    if (del.facet_index(f)) return false;
  }
  if (!replay(lk, steps, pos, depth + 1)) return false;
  if (pos >= steps.size()) return false;
  const ShedStep d = steps[pos++];
  if (d.action != ShedAction::Delete || d.vertex != s.vertex || d.depth != depth) return false;
  return replay(del, steps, pos, depth + 1);
}

bool valid_sequence(const SimplicialComplex& sigma, const ShedSequence& seq) {
  std::size_t pos = 0;
  return replay(sigma, seq.steps, pos, 0) && pos == seq.steps.size();
}

}  // namespace

TEST_CASE("vertex decomposable complexes") {
  for (const SimplicialComplex& s : {simplex_boundary(4), SimplicialComplex(numbered_vertices(4), {Face{0, 1}, Face{1, 2}, Face{2, 3}}),
                                     chessboard(2, 3), uniform_matroid(2, 5).complex}) {
    const VdResult r = is_vertex_decomposable(s);
    REQUIRE(r.status == VdStatus::Yes);
    CHECK(valid_sequence(s, *r.sequence));
  }
  CHECK(is_vertex_decomposable(simplex(4)).sequence->steps.empty());
}

TEST_CASE("non-decomposable complexes") {
  CHECK(is_vertex_decomposable(chessboard(2, 2)).status == VdStatus::No);
  CHECK(is_vertex_decomposable(chessboard(3, 3)).status == VdStatus::No);
  CHECK_FALSE(passes_shellability_test(chessboard(2, 2)));
  CHECK(passes_shellability_test(simplex_boundary(5)));
}

TEST_CASE("decompositions of random shellable complexes replay") {
  std::mt19937_64 rng(41);
  int yes = 0;
  for (int t = 0; t < 40; ++t) {
    const ShelledComplex s = random_shellable_complex(rng, 4 + static_cast<int>(rng() % 5), 2 + static_cast<int>(rng() % 7));
    const VdResult r = is_vertex_decomposable(s.complex);
    CHECK(r.status != VdStatus::Exhausted);
    if (r.status == VdStatus::Yes) {
      ++yes;
      CHECK(valid_sequence(s.complex, *r.sequence));
    }
  }
  CHECK(yes > 0);
}

TEST_CASE("vertex-decomposable complexes are never reported non-shellable") {
  std::mt19937_64 rng(53);
  int yes = 0;
  for (int t = 0; t < 60; ++t) {
    const SimplicialComplex s = random_complex(rng, 5 + static_cast<int>(rng() % 3), 2 + static_cast<int>(rng() % 5), 3);
    if (is_vertex_decomposable(s).status != VdStatus::Yes) continue;
    ++yes;
    CHECK(search_shelling(s).status != SearchStatus::NotShellable);
  }
  CHECK(yes > 0);
}

TEST_CASE("deleted join of M_3 is not vertex-decomposable") {
  const SimplicialComplex dj = deleted_join(build_mr(3).complex, 2);
  const VdResult r = is_vertex_decomposable(dj, 200'000, block_join_symmetries(3, 3));
  CHECK(r.status == VdStatus::No);
  Face guarded;
  for (Vertex v = 12; v < 18; ++v) guarded = guarded.with(v);
  const ChainRefutation c = refute_by_deletion_chain(dj, guarded);
  CHECK(c.refuted);
  CHECK(c.states > 1);
}

TEST_CASE("chain refutation finds a guarded shed on a decomposable complex") {
  const SimplicialComplex s = simplex_boundary(4);
  const ChainRefutation c = refute_by_deletion_chain(s, Face{0});
  CHECK_FALSE(c.refuted);
}

TEST_CASE("isomorphism by canonical labelling") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 30; ++t) {
    const SimplicialComplex a = compact(random_complex(rng, 7, 5, 4));
    const std::vector<std::size_t> p = random_order(rng, a.vertex_count());
    const std::vector<Vertex> perm(p.begin(), p.end());
    const SimplicialComplex b = permute_vertices(a, perm);
    CHECK(canonical_form(a).facets == canonical_form(b).facets);
    const auto iso = find_isomorphism(a, b);
    REQUIRE(iso);
    CHECK(permute_vertices(a, *iso).facets() == b.facets());
  }
  const SimplicialComplex path(numbered_vertices(4), {Face{0, 1}, Face{1, 2}, Face{2, 3}});
  const SimplicialComplex star(numbered_vertices(4), {Face{0, 1}, Face{0, 2}, Face{0, 3}});
  CHECK_FALSE(find_isomorphism(path, star).has_value());
  CHECK_THROWS_AS(canonical_form(points(12), 10), Error);
}

TEST_CASE("fundamental group presentations") {
  const Pi1Simplification circle = try_trivialize(pi1_presentation(simplex_boundary(3)));
  CHECK(circle.outcome == Pi1Outcome::Free);
  CHECK(circle.remaining.generators.size() == 1);
  CHECK(try_trivialize(pi1_presentation(simplex_boundary(4))).outcome == Pi1Outcome::Trivial);
  CHECK(try_trivialize(pi1_presentation(simplex(5))).outcome == Pi1Outcome::Trivial);
  CHECK(try_trivialize(pi1_presentation(deleted_join(build_mr(2).complex, 2))).outcome == Pi1Outcome::Trivial);
  CHECK_THROWS_AS(pi1_presentation(points(2)), Error);
  CHECK(to_string(Pi1Outcome::Inconclusive) == "inconclusive");
}
