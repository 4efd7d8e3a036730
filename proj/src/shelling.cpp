#include "tvlab/shelling.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace tvlab {

namespace {

void check_order(const SimplicialComplex& sigma, std::span<const std::size_t> order) {
  const std::size_t n = sigma.facet_count();
  if (order.size() != n) throw Error(ErrorCode::NotAPermutation, "order does not list every facet once");
  std::vector<bool> seen(n, false);
  for (std::size_t i : order) {
    if (i >= n || seen[i]) throw Error(ErrorCode::NotAPermutation, "order does not list every facet once");
    seen[i] = true;
  }
}

// incidence[v] has bit t set iff the facet at position t contains v.
struct Incidence {
  Incidence(std::span<const Face> ordered, std::size_t vertices)
      : words((ordered.size() + 63) / 64), bits(vertices * words, 0) {
    for (std::size_t t = 0; t < ordered.size(); ++t) {
      ordered[t].for_each_vertex([&](Vertex v) { bits[v * words + t / 64] |= 1ULL << (t % 64); });
    }
  }
  const std::uint64_t* row(Vertex v) const { return &bits[v * words]; }

  std::size_t words;
  std::vector<std::uint64_t> bits;
};

// Positions < t as a mask for word w.
inline std::uint64_t prefix_mask(std::size_t w, std::size_t t) {
  const std::size_t lo = w * 64;
  if (t >= lo + 64) return ~0ULL;
  if (t <= lo) return 0;
  return (1ULL << (t - lo)) - 1;
}

// Smallest set bit among the first `nw` words, or npos.
inline std::size_t first_bit(const std::uint64_t* a, std::size_t nw) {
  for (std::size_t w = 0; w < nw; ++w) {
    if (a[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(a[w]));
  }
  return static_cast<std::size_t>(-1);
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Pairwise check over facets already placed in order. Witness facets are
// reported as positions.
struct PairwiseChecker {
  PairwiseChecker(std::span<const Face> ordered, std::size_t vertices) : faces(ordered), inc(ordered, vertices) {}

  // V_B and witnesses for the facet at position t; returns the position of an
  // earlier facet containing V_B, or kNone when the condition holds.
  std::size_t check(std::size_t t, std::vector<std::pair<std::size_t, Vertex>>& wit) {
    wit.clear();
    if (t == 0) return kNone;
    const Face& b = faces[t];
    const std::size_t nw = (t + 63) / 64;
    const std::vector<Vertex> vs = b.vertices();
    const std::size_t m = vs.size();
    // prefix[i] = AND of rows vs[0..i-1], suffix[i] = AND of rows vs[i..m-1].
    prefix.assign((m + 1) * nw, 0);
    suffix.assign((m + 1) * nw, 0);
    for (std::size_t w = 0; w < nw; ++w) {
      prefix[w] = prefix_mask(w, t);
      suffix[m * nw + w] = prefix_mask(w, t);
    }
    for (std::size_t i = 0; i < m; ++i) {
      const std::uint64_t* r = inc.row(vs[i]);
      for (std::size_t w = 0; w < nw; ++w) prefix[(i + 1) * nw + w] = prefix[i * nw + w] & r[w];
    }
    for (std::size_t i = m; i-- > 0;) {
      const std::uint64_t* r = inc.row(vs[i]);
      for (std::size_t w = 0; w < nw; ++w) suffix[i * nw + w] = suffix[(i + 1) * nw + w] & r[w];
    }
    Face vb;
    scratch.assign(nw, 0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t w = 0; w < nw; ++w) scratch[w] = prefix[i * nw + w] & suffix[(i + 1) * nw + w];
      const std::size_t c = first_bit(scratch.data(), nw);
      if (c != kNone) {
        wit.emplace_back(c, vs[i]);
        vb = vb.with(vs[i]);
      }
    }
    // Conflict: an earlier facet containing all of V_B.
    for (std::size_t w = 0; w < nw; ++w) scratch[w] = prefix_mask(w, t);
    vb.for_each_vertex([&](Vertex v) {
      const std::uint64_t* r = inc.row(v);
      for (std::size_t w = 0; w < nw; ++w) scratch[w] &= r[w];
    });
    return first_bit(scratch.data(), nw);
  }

  std::span<const Face> faces;
  Incidence inc;
  std::vector<std::uint64_t> prefix, suffix, scratch;
};

std::vector<Face> ordered_facets(const SimplicialComplex& sigma, std::span<const std::size_t> order) {
  std::vector<Face> out;
  out.reserve(order.size());
  for (std::size_t i : order) out.push_back(sigma.facets()[i]);
  return out;
}

}  // namespace

std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> o(n);
  std::iota(o.begin(), o.end(), std::size_t{0});
  return o;
}

std::vector<std::size_t> dimension_decreasing(const SimplicialComplex& sigma, std::span<const std::size_t> order) {
  std::vector<std::size_t> out(order.begin(), order.end());
  std::stable_sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
    return sigma.facets()[a].size() > sigma.facets()[b].size();
  });
  return out;
}

ShellingVerdict verify_shelling_pairwise(const SimplicialComplex& sigma, std::span<const std::size_t> order) {
  check_order(sigma, order);
  const std::vector<Face> faces = ordered_facets(sigma, order);
  PairwiseChecker checker(faces, sigma.vertex_count());
  ShellingVerdict out;
  std::vector<std::pair<std::size_t, Vertex>> wit;
  for (std::size_t t = 1; t < faces.size(); ++t) {
    const std::size_t bad = checker.check(t, wit);
    if (bad != kNone) {
      out.failed_position = t;
      out.conflicting_facet = order[bad];
      out.witnesses.clear();
      return out;
    }
    for (const auto& [c, v] : wit) out.witnesses.push_back({order[t], order[c], v});
  }
  out.ok = true;
  return out;
}

ShellingVerdict verify_shelling_intersection(const SimplicialComplex& sigma, std::span<const std::size_t> order) {
  check_order(sigma, order);
  const std::vector<Face> faces = ordered_facets(sigma, order);
  ShellingVerdict out;
  std::vector<Face> maximal;
  for (std::size_t t = 1; t < faces.size(); ++t) {
    const Face& b = faces[t];
    maximal.clear();
    for (std::size_t s = 0; s < t; ++s) {
      const Face meet = faces[s] & b;
      bool covered = false;
      for (const Face& m : maximal) {
        if (meet.is_subset_of(m)) {
          covered = true;
          break;
        }
      }
      if (covered) continue;
      std::erase_if(maximal, [&](const Face& m) { return m.is_subset_of(meet); });
      maximal.push_back(meet);
    }
    for (const Face& m : maximal) {
      if (m.size() != b.size() - 1) {
        out.failed_position = t;
        for (std::size_t s = 0; s < t; ++s) {
          if ((faces[s] & b) == m) {
            out.conflicting_facet = order[s];
            break;
          }
        }
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

bool check_certificate(const SimplicialComplex& sigma, const ShellingOrder& s) {
  try {
    check_order(sigma, s.order);
  } catch (const Error&) {
    return false;
  }
  const auto& facets = sigma.facets();
  std::vector<std::size_t> position(facets.size());
  for (std::size_t t = 0; t < s.order.size(); ++t) position[s.order[t]] = t;
  std::vector<Face> vb(facets.size());
  for (const ShellingWitness& w : s.witnesses) {
    if (w.b >= facets.size() || w.c >= facets.size()) return false;
    if (position[w.c] >= position[w.b]) return false;
    const Face& b = facets[w.b];
    if (!b.contains(w.v) || (b - facets[w.c]) != Face{w.v}) return false;
    vb[w.b] = vb[w.b].with(w.v);
  }
  for (std::size_t t = 1; t < s.order.size(); ++t) {
    const Face& need = vb[s.order[t]];
    for (std::size_t u = 0; u < t; ++u) {
      if (need.is_subset_of(facets[s.order[u]])) return false;
    }
  }
  return true;
}

SearchResult search_shelling(const SimplicialComplex& sigma, std::size_t budget) {
  SearchResult out;
  const auto& facets = sigma.facets();
  const std::size_t n = facets.size();
  if (n <= 1) {
    out.status = SearchStatus::Found;
    out.shelling = ShellingOrder{identity_order(n), {}};
    return out;
  }
  const std::size_t words = (n + 63) / 64;
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& k) const noexcept {
      std::size_t h = 0;
      for (std::uint64_t w : k) h = h * 0x9E3779B97F4A7C15ULL + (w ^ (w >> 29));
      return h;
    }
  };
  std::unordered_set<std::vector<std::uint64_t>, KeyHash> dead;
  std::vector<std::uint64_t> used(words, 0);
  std::vector<std::size_t> order;
  bool exhausted = false;

  // B may follow the placed facets iff no placed facet contains V_B.
  auto valid_next = [&](std::size_t bi) {
    if (order.empty()) return true;
    const Face& b = facets[bi];
    Face vb;
    b.for_each_vertex([&](Vertex v) {
      const Face rest = b.without(v);
      for (std::size_t c : order) {
        if (rest.is_subset_of(facets[c])) {
          vb = vb.with(v);
          break;
        }
      }
    });
    for (std::size_t a : order) {
      if (vb.is_subset_of(facets[a])) return false;
    }
    return true;
  };

  auto recurse = [&](auto&& self) -> bool {
    if (order.size() == n) return true;
    if (++out.nodes > budget) {
      exhausted = true;
      return false;
    }
    if (dead.count(used)) return false;
    // Dimension-decreasing: only facets of the largest remaining size.
    int size = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (!((used[i / 64] >> (i % 64)) & 1U)) size = std::max(size, facets[i].size());
    }
    for (std::size_t i = 0; i < n; ++i) {
      if ((used[i / 64] >> (i % 64)) & 1U) continue;
      if (facets[i].size() != size || !valid_next(i)) continue;
      used[i / 64] |= 1ULL << (i % 64);
      order.push_back(i);
      if (self(self)) return true;
      order.pop_back();
      used[i / 64] &= ~(1ULL << (i % 64));
      if (exhausted) return false;
    }
    dead.insert(used);
    return false;
  };

  if (recurse(recurse)) {
    const ShellingVerdict v = verify_shelling_pairwise(sigma, order);
    out.status = SearchStatus::Found;
    out.shelling = ShellingOrder{order, v.witnesses};
  } else {
    out.status = exhausted ? SearchStatus::Exhausted : SearchStatus::NotShellable;
  }
  return out;
}

namespace {

// Earliest position of a facet of `sigma` containing each face of `faces`.
std::vector<std::size_t> earliest_facets(const SimplicialComplex& sigma, const ShellingOrder& shelling,
                                         std::span<const Face> faces) {
  std::vector<Face> ordered = ordered_facets(sigma, shelling.order);
  Incidence inc(ordered, sigma.vertex_count());
  std::vector<std::uint64_t> acc(inc.words);
  std::vector<std::size_t> out;
  out.reserve(faces.size());
  for (const Face& g : faces) {
    std::fill(acc.begin(), acc.end(), ~0ULL);
    g.for_each_vertex([&](Vertex v) {
      const std::uint64_t* r = inc.row(v);
      for (std::size_t w = 0; w < inc.words; ++w) acc[w] &= r[w];
    });
    const std::size_t p = first_bit(acc.data(), inc.words);
    if (p >= ordered.size()) throw Error(ErrorCode::FaceNotInComplex, "face lies in no facet");
    out.push_back(p);
  }
  return out;
}

}  // namespace

ShelledComplex compatible_skeleton_shelling(const SimplicialComplex& sigma, const ShellingOrder& shelling, int m) {
  if (m < 0 || m > sigma.dimension()) throw Error(ErrorCode::BadParameter, "skeleton dimension out of range");
  if (!verify_shelling_pairwise(sigma, shelling.order).ok) {
    throw Error(ErrorCode::InputNotShelling, "given order is not a shelling");
  }
  SimplicialComplex skel = skeleton(sigma, m);
  const auto& sf = skel.facets();
  const std::vector<std::size_t> first = earliest_facets(sigma, shelling, sf);

  std::vector<std::size_t> order = identity_order(sf.size());
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (first[a] != first[b]) return first[a] < first[b];
    return lex_less(sf[a], sf[b]);
  });
  ShellingVerdict v = verify_shelling_pairwise(skel, order);
  if (!v.ok) {
    // Fallback: keep the groups, search an order inside each group.
    std::vector<Face> placed;
    std::vector<std::size_t> result;
    std::size_t start = 0;
    while (start < order.size()) {
      std::size_t end = start;
      while (end < order.size() && first[order[end]] == first[order[start]]) ++end;
      std::vector<std::size_t> group(order.begin() + static_cast<std::ptrdiff_t>(start),
                                     order.begin() + static_cast<std::ptrdiff_t>(end));
      std::vector<bool> taken(group.size(), false);
      std::size_t nodes = 0;
      auto fits = [&](const Face& b) {
        if (placed.empty()) return true;
        Face vb;
        b.for_each_vertex([&](Vertex x) {
          const Face rest = b.without(x);
          for (const Face& c : placed) {
            if (rest.is_subset_of(c)) {
              vb = vb.with(x);
              break;
            }
          }
        });
        return std::none_of(placed.begin(), placed.end(), [&](const Face& a) { return vb.is_subset_of(a); });
      };
      auto rec = [&](auto&& self, std::size_t left) -> bool {
        if (left == 0) return true;
        if (++nodes > 1'000'000) return false;
        for (std::size_t i = 0; i < group.size(); ++i) {
          if (taken[i] || !fits(sf[group[i]])) continue;
          taken[i] = true;
          placed.push_back(sf[group[i]]);
          result.push_back(group[i]);
          if (self(self, left - 1)) return true;
          result.pop_back();
          placed.pop_back();
          taken[i] = false;
        }
        return false;
      };
      if (!rec(rec, group.size())) {
        throw Error(ErrorCode::BudgetExceeded, "no compatible skeleton shelling found");
      }
      start = end;
    }
    order = std::move(result);
    v = verify_shelling_pairwise(skel, order);
    if (!v.ok) throw Error(ErrorCode::BudgetExceeded, "no compatible skeleton shelling found");
  }
  return ShelledComplex{std::move(skel), ShellingOrder{std::move(order), std::move(v.witnesses)}};
}

bool is_compatible(const SimplicialComplex& sigma, const ShellingOrder& shelling, const SimplicialComplex& skel,
                   const ShellingOrder& skeleton_order) {
  std::vector<Face> faces = ordered_facets(skel, skeleton_order.order);
  const std::vector<std::size_t> first = earliest_facets(sigma, shelling, faces);
  return std::is_sorted(first.begin(), first.end());
}

ShelledComplex lexicographic_join_shelling(std::span<const ShelledComplex> factors) {
  std::vector<SimplicialComplex> parts;
  for (const auto& f : factors) parts.push_back(f.complex);
  SimplicialComplex joined = join(parts);

  std::vector<Vertex> offsets;
  Vertex off = 0;
  for (const auto& f : factors) {
    offsets.push_back(off);
    off += static_cast<Vertex>(f.complex.vertex_count());
  }
  std::unordered_map<Face, std::size_t, FaceHash> index;
  for (std::size_t i = 0; i < joined.facets().size(); ++i) index.emplace(joined.facets()[i], i);

  std::vector<std::size_t> order;
  std::vector<std::size_t> pos(factors.size(), 0);
  if (std::any_of(factors.begin(), factors.end(), [](const ShelledComplex& f) { return f.complex.is_void(); })) {
    return ShelledComplex{joined, ShellingOrder{}};
  }
  while (true) {
    Face u;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const Face& f = factors[i].complex.facets()[factors[i].shelling.order[pos[i]]];
      f.for_each_vertex([&](Vertex v) { u = u.with(v + offsets[i]); });
    }
    order.push_back(index.at(u));
    std::size_t i = factors.size();
    while (i > 0) {
      --i;
      if (++pos[i] < factors[i].shelling.order.size()) break;
      pos[i] = 0;
      if (i == 0) {
        i = factors.size() + 1;
        break;
      }
    }
    if (i == factors.size() + 1) break;
  }
  ShellingVerdict v = verify_shelling_pairwise(joined, order);
  if (!v.ok) throw Error(ErrorCode::InputNotShelling, "lexicographic join order failed to verify");
  return ShelledComplex{std::move(joined), ShellingOrder{std::move(order), std::move(v.witnesses)}};
}

std::vector<std::int64_t> homotopy_from_shelling(const SimplicialComplex& sigma, const ShellingOrder& shelling) {
  if (!verify_shelling_pairwise(sigma, shelling.order).ok) {
    throw Error(ErrorCode::InputNotShelling, "given order is not a shelling");
  }
  const FTriangle ft = f_triangle(sigma);
  return std::vector<std::int64_t>(ft.h.begin() + (ft.h.empty() ? 0 : 1), ft.h.end());
}

}  // namespace tvlab
