#include "tvlab/fundamental_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>

namespace tvlab {

GroupPresentation pi1_presentation(const SimplicialComplex& sigma) {
  if (connected_components(sigma).size() != 1) {
    throw Error(ErrorCode::Disconnected, "fundamental group needs a connected complex");
  }
  const FaceTable& table = sigma.faces();
  const std::size_t n = sigma.vertex_count();
  std::vector<std::vector<Vertex>> adj(n);
  const std::vector<Face> no_faces;
  const auto& edges = table.top_dim() >= 1 ? table.of_dim(1) : no_faces;
  for (const Face& e : edges) {
    const Vertex u = e.min_vertex();
    const Vertex v = e.max_vertex();
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  // BFS tree from the smallest used vertex.
  const Vertex root = sigma.support().min_vertex();
  std::vector<bool> seen(n, false);
  std::map<std::pair<Vertex, Vertex>, bool> in_tree;
  std::queue<Vertex> queue;
  queue.push(root);
  seen[root] = true;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop();
    for (Vertex v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = true;
      in_tree[{std::min(u, v), std::max(u, v)}] = true;
      queue.push(v);
    }
  }

  GroupPresentation p;
  std::map<std::pair<Vertex, Vertex>, int> gen;
  for (const Face& e : edges) {
    const std::pair<Vertex, Vertex> key{e.min_vertex(), e.max_vertex()};
    if (in_tree.count(key)) continue;
    p.generators.push_back(key);
    gen[key] = static_cast<int>(p.generators.size());
  }
  // Letter for traversing u -> v.
  auto letter = [&](Vertex u, Vertex v) -> int {
    const auto it = gen.find({std::min(u, v), std::max(u, v)});
    if (it == gen.end()) return 0;
    return u < v ? it->second : -it->second;
  };
  if (table.top_dim() >= 2) {
    for (const Face& t : table.of_dim(2)) {
      const std::vector<Vertex> vs = t.vertices();
      Word w;
      for (int l : {letter(vs[0], vs[1]), letter(vs[1], vs[2]), letter(vs[2], vs[0])}) {
        if (l != 0) w.push_back(l);
      }
      p.relators.push_back(std::move(w));
    }
  }
  return p;
}

namespace {

// Free reduction followed by cyclic reduction.
void reduce_word(Word& w) {
  Word out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  std::size_t a = 0;
  std::size_t b = out.size();
  while (b - a >= 2 && out[a] == -out[b - 1]) {
    ++a;
    --b;
  }
  w.assign(out.begin() + static_cast<std::ptrdiff_t>(a), out.begin() + static_cast<std::ptrdiff_t>(b));
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

}  // namespace

Pi1Simplification try_trivialize(GroupPresentation p, std::size_t budget) {
  Pi1Simplification out;
  const std::size_t g = p.generators.size();
  std::vector<bool> alive(g + 1, true);
  alive[0] = false;
  std::vector<Word>& rels = p.relators;

  while (true) {
    for (Word& w : rels) {
      out.steps += w.size();
      reduce_word(w);
    }
    rels.erase(std::remove_if(rels.begin(), rels.end(), [](const Word& w) { return w.empty(); }), rels.end());
    if (out.steps > budget) break;

    // Find a relator in which some generator occurs exactly once.
    bool moved = false;
    for (std::size_t ri = 0; ri < rels.size() && !moved; ++ri) {
      const Word& w = rels[ri];
      std::map<int, int> count;
      for (int l : w) ++count[std::abs(l)];
      for (std::size_t pos = 0; pos < w.size(); ++pos) {
        const int x = std::abs(w[pos]);
        if (count[x] != 1) continue;
        // w = u x^e v  =>  x^e = u^{-1} v^{-1}, so x = (v u)^{-e}.
        Word vu(w.begin() + static_cast<std::ptrdiff_t>(pos) + 1, w.end());
        vu.insert(vu.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        const Word x_value = w[pos] > 0 ? inverse(vu) : vu;
        const Word x_inv = inverse(x_value);
        rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(ri));
        for (Word& r : rels) {
          Word next;
          for (int l : r) {
            if (std::abs(l) != x) {
              next.push_back(l);
              continue;
            }
            const Word& sub = l > 0 ? x_value : x_inv;
            next.insert(next.end(), sub.begin(), sub.end());
            out.steps += sub.size();
          }
          r.swap(next);
        }
        alive[static_cast<std::size_t>(x)] = false;
        moved = true;
        break;
      }
    }
    if (!moved || out.steps > budget) break;
  }

  for (Word& w : rels) reduce_word(w);
  rels.erase(std::remove_if(rels.begin(), rels.end(), [](const Word& w) { return w.empty(); }), rels.end());

  // Renumber surviving generators.
  std::vector<int> renumber(g + 1, 0);
  GroupPresentation rest;
  for (std::size_t i = 1; i <= g; ++i) {
    if (!alive[i]) continue;
    rest.generators.push_back(p.generators[i - 1]);
    renumber[i] = static_cast<int>(rest.generators.size());
  }
  for (const Word& w : rels) {
    Word r;
    for (int l : w) r.push_back(l > 0 ? renumber[static_cast<std::size_t>(l)] : -renumber[static_cast<std::size_t>(-l)]);
    rest.relators.push_back(std::move(r));
  }
  if (rest.generators.empty()) {
    out.outcome = Pi1Outcome::Trivial;
  } else if (rest.relators.empty()) {
    out.outcome = Pi1Outcome::Free;
  } else {
    out.outcome = Pi1Outcome::Inconclusive;
  }
  out.remaining = std::move(rest);
  return out;
}

std::string to_string(Pi1Outcome o) {
  switch (o) {
    case Pi1Outcome::Trivial:
      return "trivial";
    case Pi1Outcome::Free:
      return "free";
    case Pi1Outcome::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

}  // namespace tvlab
