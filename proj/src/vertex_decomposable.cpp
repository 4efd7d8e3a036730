#include "tvlab/vertex_decomposable.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "tvlab/homology.hpp"

namespace tvlab {

bool passes_shellability_test(const SimplicialComplex& sigma) {
  if (sigma.is_void()) return true;
  const FTriangle ft = f_triangle(sigma);
  const BettiVector b = betti_f2(sigma);
  for (std::size_t j = 0; j < ft.h.size(); ++j) {
    if (ft.h[j] < 0 || ft.h[j] != b.at(static_cast<int>(j) - 1)) return false;
  }
  return true;
}

namespace {

// No facet of the link of v is a facet of the deletion of v.
bool shedding_facets_ok(const SimplicialComplex& lk, const SimplicialComplex& del) {
  return std::none_of(lk.facets().begin(), lk.facets().end(),
                      [&](const Face& f) { return del.facet_index(f).has_value(); });
}

std::string encode(const SimplicialComplex& compacted) {
  std::string key;
  key.reserve(compacted.facet_count() * 16 + 8);
  key.append(std::to_string(compacted.vertex_count())).push_back(':');
  for (const Face& f : compacted.facets()) {
    const std::uint64_t w[2] = {f.lo(), f.hi()};
    key.append(reinterpret_cast<const char*>(w), sizeof(w));
  }
  return key;
}

struct VdSearch {
  std::size_t budget;
  std::size_t nodes = 0;
  std::unordered_map<std::string, std::optional<ShedSequence>> memo;  // compact labels

  VdStatus run(const SimplicialComplex& sigma, int depth, const std::vector<Vertex>& candidates, ShedSequence& seq) {
    if (sigma.facet_count() <= 1) return VdStatus::Yes;
    const std::vector<Vertex> support = sigma.support().vertices();
    const std::string key = encode(compact(sigma));
    if (auto it = memo.find(key); it != memo.end()) {
      if (!it->second) return VdStatus::No;
      for (ShedStep s : it->second->steps) {
        s.vertex = support[s.vertex];
        s.depth += depth;
        seq.steps.push_back(s);
      }
      return VdStatus::Yes;
    }
    if (++nodes > budget) return VdStatus::Exhausted;
    if (!passes_shellability_test(sigma)) {
      memo.emplace(key, std::nullopt);
      return VdStatus::No;
    }
    bool exhausted = false;
    for (Vertex v : candidates.empty() ? support : candidates) {
      const SimplicialComplex lk = link(sigma, Face{v});
      const SimplicialComplex del = delete_vertex(sigma, v);
      if (!shedding_facets_ok(lk, del)) continue;
      ShedSequence lk_seq, del_seq;
      const VdStatus d = run(del, depth + 1, {}, del_seq);
      if (d == VdStatus::No) continue;
      const VdStatus l = run(lk, depth + 1, {}, lk_seq);
      if (d == VdStatus::Yes && l == VdStatus::Yes) {
        ShedSequence mine;
        mine.steps.push_back({v, ShedAction::Link, depth});
        mine.steps.insert(mine.steps.end(), lk_seq.steps.begin(), lk_seq.steps.end());
        mine.steps.push_back({v, ShedAction::Delete, depth});
        mine.steps.insert(mine.steps.end(), del_seq.steps.begin(), del_seq.steps.end());
        // Memo in compact labels, relative depth.
        ShedSequence stored;
        for (ShedStep s : mine.steps) {
          s.vertex = static_cast<Vertex>(std::lower_bound(support.begin(), support.end(), s.vertex) - support.begin());
          s.depth -= depth;
          stored.steps.push_back(s);
        }
        memo.emplace(key, std::move(stored));
        seq.steps.insert(seq.steps.end(), mine.steps.begin(), mine.steps.end());
        return VdStatus::Yes;
      }
      if (d == VdStatus::Exhausted || l == VdStatus::Exhausted) exhausted = true;
      if (nodes > budget) return VdStatus::Exhausted;
    }
    if (exhausted) return VdStatus::Exhausted;
    memo.emplace(key, std::nullopt);
    return VdStatus::No;
  }
};

// One vertex per orbit of the group generated by `gens`, among `support`.
std::vector<Vertex> orbit_representatives(const std::vector<Vertex>& support, std::size_t n,
                                          const std::vector<std::vector<Vertex>>& gens) {
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens) {
    if (g.size() != n) throw Error(ErrorCode::NotAPermutation, "symmetry has wrong length");
    for (Vertex v = 0; v < n; ++v) {
      const Vertex a = find(v);
      const Vertex b = find(g[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<Vertex> reps;
  std::unordered_set<Vertex> seen;
  for (Vertex v : support) {
    if (seen.insert(find(v)).second) reps.push_back(v);
  }
  return reps;
}

}  // namespace

VdResult is_vertex_decomposable(const SimplicialComplex& sigma, std::size_t budget,
                                const std::vector<std::vector<Vertex>>& symmetries) {
  for (const auto& g : symmetries) {
    if (permute_vertices(sigma, g).facets() != sigma.facets()) {
      throw Error(ErrorCode::NotAnAutomorphism, "symmetry generator does not preserve the complex");
    }
  }
  VdSearch search;
  search.budget = budget;
  const std::vector<Vertex> support = sigma.support().vertices();
  std::vector<Vertex> candidates =
      symmetries.empty() ? support : orbit_representatives(support, sigma.vertex_count(), symmetries);
  ShedSequence seq;
  VdResult out;
  out.status = search.run(sigma, 0, candidates, seq);
  out.nodes = search.nodes;
  if (out.status == VdStatus::Yes) out.sequence = std::move(seq);
  return out;
}

ChainRefutation refute_by_deletion_chain(const SimplicialComplex& sigma, const Face& guarded, std::size_t budget) {
  ChainRefutation out;
  if (!passes_shellability_test(sigma)) {
    out.refuted = true;
    return out;
  }
  auto shed_ok = [](const SimplicialComplex& m, Vertex v) {
    const SimplicialComplex lk = link(m, Face{v});
    const SimplicialComplex del = delete_vertex(m, v);
    return shedding_facets_ok(lk, del) && passes_shellability_test(lk) && passes_shellability_test(del);
  };
  const Face all = sigma.support();
  std::unordered_set<Face, FaceHash> seen{Face{}};
  std::deque<Face> queue{Face{}};
  while (!queue.empty()) {
    const Face deleted = queue.front();
    queue.pop_front();
    if (++out.states > budget) return out;
    const SimplicialComplex m = restriction(sigma, all - deleted);
    if (m.facet_count() <= 1) {
      out.deleted = deleted.vertices();
      return out;
    }
    const Face present = m.support();
    bool blocked = false;
    (present & guarded).for_each_vertex([&](Vertex s) {
      if (!blocked && shed_ok(m, s)) {
        blocked = true;
        out.deleted = deleted.vertices();
        out.shed = s;
      }
    });
    if (blocked) return out;
    (present - guarded).for_each_vertex([&](Vertex u) {
      const Face next = deleted.with(u);
      if (seen.count(next)) return;
      if (shed_ok(m, u)) {
        seen.insert(next);
        queue.push_back(next);
      }
    });
  }
  out.refuted = true;
  return out;
}

}  // namespace tvlab
