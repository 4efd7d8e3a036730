#include "tvlab/complex.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>

namespace tvlab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::FaceNotInComplex: return "FaceNotInComplex";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::NotAntichain: return "NotAntichain";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::InputNotShelling: return "InputNotShelling";
    case ErrorCode::NotBalanced: return "NotBalanced";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Face

Face::Face(std::initializer_list<Vertex> vs) {
  for (Vertex v : vs) *this = with(v);
}

Face Face::from_vertices(std::span<const Vertex> vs) {
  Face f;
  for (Vertex v : vs) f = f.with(v);
  return f;
}

Face Face::range(std::size_t n) {
  if (n > kMaxVertices) {
    throw Error(ErrorCode::TooManyVertices, std::to_string(n) + " vertices exceed the limit of 128");
  }
  const std::uint64_t lo = n >= 64 ? ~0ULL : ((1ULL << n) - 1);
  const std::uint64_t hi = n >= 128 ? ~0ULL : (n > 64 ? ((1ULL << (n - 64)) - 1) : 0ULL);
  return from_words(lo, hi);
}

Face Face::with(Vertex v) const {
  if (v >= kMaxVertices) {
    throw Error(ErrorCode::TooManyVertices, "vertex index " + std::to_string(v) + " exceeds 127");
  }
  Face f = *this;
  f.w_[v >> 6] |= 1ULL << (v & 63);
  return f;
}

Face Face::without(Vertex v) const {
  Face f = *this;
  if (v < kMaxVertices) f.w_[v >> 6] &= ~(1ULL << (v & 63));
  return f;
}

Vertex Face::min_vertex() const {
  if (w_[0]) return static_cast<Vertex>(std::countr_zero(w_[0]));
  return static_cast<Vertex>(64 + std::countr_zero(w_[1]));
}

Vertex Face::max_vertex() const {
  if (w_[1]) return static_cast<Vertex>(127 - std::countl_zero(w_[1]));
  return static_cast<Vertex>(63 - std::countl_zero(w_[0]));
}

std::vector<Vertex> Face::vertices() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each_vertex([&](Vertex v) { out.push_back(v); });
  return out;
}

bool lex_less(const Face& a, const Face& b) {
  const Face diff = a ^ b;
  if (diff.empty()) return false;
  const Vertex p = diff.min_vertex();
  // Both sequences agree below p. Whoever holds p compares against the other's
  // next element, which is larger than p if it exists at all.
  const Face above = Face::range(p + 1);
  if (a.contains(p)) return !(b - above).empty();
  return (a - above).empty();
}

bool size_desc_lex_less(const Face& a, const Face& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return lex_less(a, b);
}

// ---------------------------------------------------------------------------
// FaceTable

std::size_t FaceTable::count(int d) const {
  const auto idx = static_cast<std::size_t>(d + 1);
  return d >= -1 && idx < by_dim.size() ? by_dim[idx].size() : 0;
}

std::size_t FaceTable::total() const {
  std::size_t n = 0;
  for (const auto& level : by_dim) n += level.size();
  return n;
}

std::optional<std::size_t> FaceTable::index_of(const Face& f) const {
  const auto idx = static_cast<std::size_t>(f.size());
  if (idx >= by_dim.size()) return std::nullopt;
  const auto& level = by_dim[idx];
  auto it = std::lower_bound(level.begin(), level.end(), f);
  if (it == level.end() || *it != f) return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

FaceTable enumerate_faces(std::span<const Face> facets) {
  FaceTable table;
  if (facets.empty()) return table;
  int top = -1;
  for (const Face& f : facets) top = std::max(top, f.size());
  table.by_dim.assign(static_cast<std::size_t>(top + 1), {});
  for (const Face& f : facets) table.by_dim[static_cast<std::size_t>(f.size())].push_back(f);

  for (int s = top; s >= 0; --s) {
    auto& level = table.by_dim[static_cast<std::size_t>(s)];
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    if (s == 0) break;
    auto& below = table.by_dim[static_cast<std::size_t>(s - 1)];
    below.reserve(below.size() + level.size() * static_cast<std::size_t>(s));
    for (const Face& f : level) {
      f.for_each_vertex([&](Vertex v) { below.push_back(f.without(v)); });
    }
  }
  return table;
}

// ---------------------------------------------------------------------------
// SimplicialComplex

struct SimplicialComplex::Cache {
  std::once_flag once;
  std::unique_ptr<FaceTable> faces;
};

namespace {

void check_vertices(const std::vector<VertexInfo>& vertices, const std::vector<Face>& facets) {
  if (vertices.size() > kMaxVertices) {
    throw Error(ErrorCode::TooManyVertices,
                std::to_string(vertices.size()) + " vertices exceed the limit of 128");
  }
  const Face all = Face::range(vertices.size());
  for (const Face& f : facets) {
    if (!f.is_subset_of(all)) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "facet uses vertex " + std::to_string((f - all).min_vertex()) +
                      " outside a table of " + std::to_string(vertices.size()));
    }
  }
}

// Sorts by (size desc, lex), removes duplicates, and returns the facets that
// are strictly contained in a larger one (only sets of different sizes can
// nest once duplicates are gone).
std::vector<bool> nested_flags(std::vector<Face>& sets) {
  std::sort(sets.begin(), sets.end(), size_desc_lex_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<bool> nested(sets.size(), false);
  std::size_t larger_end = 0;  // sets[0, larger_end) are strictly larger than the current one
  for (std::size_t i = 0; i < sets.size(); ++i) {
    while (larger_end < i && sets[larger_end].size() > sets[i].size()) ++larger_end;
    for (std::size_t j = 0; j < larger_end; ++j) {
      if (!nested[j] && sets[i].is_subset_of(sets[j])) {
        nested[i] = true;
        break;
      }
    }
  }
  return nested;
}

}  // namespace

SimplicialComplex::SimplicialComplex() : cache_(std::make_shared<Cache>()) {}

SimplicialComplex::SimplicialComplex(std::vector<VertexInfo> vertices, std::vector<Face> facets)
    : vertices_(std::move(vertices)), facets_(std::move(facets)), cache_(std::make_shared<Cache>()) {
  check_vertices(vertices_, facets_);
  const std::size_t before = facets_.size();
  const auto nested = nested_flags(facets_);
  if (facets_.size() != before) {
    throw Error(ErrorCode::NotAntichain, "duplicate facet");
  }
  for (std::size_t i = 0; i < nested.size(); ++i) {
    if (nested[i]) {
      throw Error(ErrorCode::NotAntichain, "a facet of size " + std::to_string(facets_[i].size()) +
                                               " is contained in a larger facet");
    }
  }
}

SimplicialComplex SimplicialComplex::from_generators(std::vector<VertexInfo> vertices,
                                                     std::vector<Face> generators) {
  check_vertices(vertices, generators);
  const auto nested = nested_flags(generators);
  std::vector<Face> maximal;
  maximal.reserve(generators.size());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (!nested[i]) maximal.push_back(generators[i]);
  }
  SimplicialComplex out;
  out.vertices_ = std::move(vertices);
  out.facets_ = std::move(maximal);
  return out;
}

SimplicialComplex SimplicialComplex::void_complex(std::vector<VertexInfo> vertices) {
  return SimplicialComplex(std::move(vertices), {});
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -2;
  return facets_.front().dim();
}

bool SimplicialComplex::is_pure() const {
  return facets_.empty() || facets_.front().size() == facets_.back().size();
}

Face SimplicialComplex::support() const {
  Face s;
  for (const Face& f : facets_) s = s | f;
  return s;
}

bool SimplicialComplex::contains(const Face& f) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const Face& g) { return f.is_subset_of(g); });
}

std::optional<std::size_t> SimplicialComplex::facet_index(const Face& f) const {
  auto it = std::lower_bound(facets_.begin(), facets_.end(), f, size_desc_lex_less);
  if (it == facets_.end() || *it != f) return std::nullopt;
  return static_cast<std::size_t>(it - facets_.begin());
}

const FaceTable& SimplicialComplex::faces() const {
  std::call_once(cache_->once, [this] {
    cache_->faces = std::make_unique<FaceTable>(enumerate_faces(facets_));
  });
  return *cache_->faces;
}

std::vector<VertexInfo> numbered_vertices(std::size_t n, const std::string& prefix) {
  std::vector<VertexInfo> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].label = prefix + std::to_string(i + 1);
  return out;
}

}  // namespace tvlab
