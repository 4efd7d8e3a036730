#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the Face and SimplicialComplex containers.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "tvlab/complex.hpp"

namespace oracle {

using tvlab::Face;
using tvlab::SimplicialComplex;
using tvlab::Vertex;

// Every face (including the empty one), grouped by size.
inline std::map<int, std::set<Face>> faces_by_size(const SimplicialComplex& sigma) {
  std::map<int, std::set<Face>> out;
  for (const Face& f : sigma.facets()) {
    const std::vector<Vertex> vs = f.vertices();
    const std::size_t n = vs.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      Face g;
      for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1U) g = g.with(vs[i]);
      }
      out[static_cast<int>(g.size())].insert(g);
    }
  }
  return out;
}

// Rank over F2 of a matrix given as rows of bit words.
inline std::size_t rank_f2(std::vector<std::vector<std::uint64_t>> rows) {
  std::size_t rank = 0;
  const std::size_t words = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < words * 64 && rank < rows.size(); ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r][w] & bit)) {
        for (std::size_t t = 0; t < words; ++t) rows[r][t] ^= rows[rank][t];
      }
    }
    ++rank;
  }
  return rank;
}

// Reduced Betti numbers β̃_{-1}, β̃_0, ... (index d + 1) by dense elimination.
inline std::vector<std::int64_t> betti(const SimplicialComplex& sigma) {
  const auto faces = faces_by_size(sigma);
  if (faces.empty()) return {};
  const int top = faces.rbegin()->first;
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);  // ranks[s] = rank of ∂ from size s
  for (int s = 1; s <= top; ++s) {
    const std::vector<Face> hi(faces.at(s).begin(), faces.at(s).end());
    const std::vector<Face> lo(faces.at(s - 1).begin(), faces.at(s - 1).end());
    std::map<Face, std::size_t> index;
    for (std::size_t i = 0; i < lo.size(); ++i) index[lo[i]] = i;
    const std::size_t words = (lo.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows;
    for (const Face& f : hi) {
      std::vector<std::uint64_t> row(words, 0);
      for (Vertex v : f.vertices()) {
        const std::size_t i = index.at(f.without(v));
        row[i / 64] |= std::uint64_t{1} << (i % 64);
      }
      rows.push_back(std::move(row));
    }
    ranks[static_cast<std::size_t>(s)] = rank_f2(std::move(rows));
  }
  std::vector<std::int64_t> out;
  for (int s = 0; s <= top; ++s) {
    const auto n = static_cast<std::int64_t>(faces.at(s).size());
    const auto out_rank = static_cast<std::int64_t>(ranks[static_cast<std::size_t>(s)]);
    const auto in_rank = s + 1 <= top ? static_cast<std::int64_t>(ranks[static_cast<std::size_t>(s) + 1]) : 0;
    out.push_back(n - out_rank - in_rank);
  }
  return out;
}

// Shelling by definition: each later facet meets the earlier ones in a pure
// complex of codimension one in the facet.
inline bool is_shelling(const SimplicialComplex& sigma, const std::vector<std::size_t>& order) {
  const auto& fs = sigma.facets();
  for (std::size_t j = 1; j < order.size(); ++j) {
    const Face b = fs[order[j]];
    std::vector<Face> meets;
    for (std::size_t i = 0; i < j; ++i) meets.push_back(fs[order[i]] & b);
    for (const Face& m : meets) {
      const bool maximal = std::none_of(meets.begin(), meets.end(), [&](const Face& o) {
        return m != o && m.is_subset_of(o);
      });
      if (maximal && m.size() + 1 != b.size()) return false;
    }
  }
  return true;
}

// Exchange axiom on all pairs of faces.
inline bool is_matroid(const SimplicialComplex& sigma) {
  const auto faces = faces_by_size(sigma);
  std::vector<Face> all;
  for (const auto& [s, set] : faces) all.insert(all.end(), set.begin(), set.end());
  const std::set<Face> members(all.begin(), all.end());
  for (const Face& i : all) {
    for (const Face& j : all) {
      if (i.size() >= j.size()) continue;
      bool augmentable = false;
      for (Vertex v : (j - i).vertices()) augmentable = augmentable || members.count(i.with(v));
      if (!augmentable) return false;
    }
  }
  return true;
}

// Smallest prime factor table up to n.
inline std::vector<std::uint32_t> smallest_factor(std::uint32_t n) {
  std::vector<std::uint32_t> spf(n + 1, 0);
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= n; j += i) {
      if (spf[j] == 0) spf[j] = i;
    }
  }
  return spf;
}

// Reduced Betti numbers (index d + 1) of the k-fold deleted product, from
// all k-tuples of pairwise disjoint non-empty faces with the augmentation.
inline std::vector<std::int64_t> product_betti(const SimplicialComplex& sigma, int k) {
  std::vector<Face> nonempty;
  for (const auto& [s, set] : faces_by_size(sigma)) {
    if (s > 0) nonempty.insert(nonempty.end(), set.begin(), set.end());
  }
  std::map<int, std::vector<std::vector<Face>>> cells;  // by dimension
  cells[-1].push_back({});
  std::vector<Face> cur;
  auto rec = [&](auto&& self, Face used, int dim) -> void {
    if (static_cast<int>(cur.size()) == k) {
      cells[dim].push_back(cur);
      return;
    }
    for (const Face& f : nonempty) {
      if (!f.disjoint(used)) continue;
      cur.push_back(f);
      self(self, used | f, dim + f.size() - 1);
      cur.pop_back();
    }
  };
  rec(rec, Face{}, 0);
  const int top = cells.rbegin()->first;
  std::map<int, std::size_t> ranks;  // rank of the boundary out of dimension d
  for (int d = 0; d <= top; ++d) {
    const auto& lo = cells[d - 1];
    std::map<std::vector<Face>, std::size_t> index;
    for (std::size_t i = 0; i < lo.size(); ++i) index[lo[i]] = i;
    const std::size_t words = (lo.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& c : cells[d]) {
      std::vector<std::uint64_t> row(words, 0);
      if (d == 0) {
        row[0] = 1;
      } else {
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (c[i].size() < 2) continue;
          for (Vertex v : c[i].vertices()) {
            std::vector<Face> t = c;
            t[i] = t[i].without(v);
            const std::size_t j = index.at(t);
            row[j / 64] ^= std::uint64_t{1} << (j % 64);
          }
        }
      }
      rows.push_back(std::move(row));
    }
    ranks[d] = rank_f2(std::move(rows));
  }
  std::vector<std::int64_t> out;
  for (int d = -1; d <= top; ++d) {
    const auto n = static_cast<std::int64_t>(cells[d].size());
    const auto out_rank = d >= 0 ? static_cast<std::int64_t>(ranks[d]) : 0;
    const auto in_rank = d + 1 <= top ? static_cast<std::int64_t>(ranks[d + 1]) : 0;
    out.push_back(n - out_rank - in_rank);
  }
  return out;
}

}  // namespace oracle
