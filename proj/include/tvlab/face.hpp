#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace tvlab {

using Vertex = std::uint32_t;

/// Upper bound on the vertex table of any complex handled by the library.
inline constexpr std::size_t kMaxVertices = 128;

/// A finite set of vertex indices, stored as a fixed-width bit mask.
///
/// The set is the strictly increasing vertex sequence of a simplex; the empty
/// set is the empty face of dimension -1. The default ordering (`<=>`) is the
/// numeric order of the mask, which is a colexicographic order on vertex
/// sequences. `lex_less` gives the lexicographic order on sorted sequences.
class Face {
 public:
  constexpr Face() = default;
  Face(std::initializer_list<Vertex> vs);

  static Face from_vertices(std::span<const Vertex> vs);
  static constexpr Face from_words(std::uint64_t lo, std::uint64_t hi) {
    Face f;
    f.w_ = {lo, hi};
    return f;
  }
  /// {0, 1, ..., n-1}
  static Face range(std::size_t n);

  constexpr bool contains(Vertex v) const { return (w_[v >> 6] >> (v & 63)) & 1U; }
  constexpr bool empty() const { return (w_[0] | w_[1]) == 0; }
  constexpr int size() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
  constexpr int dim() const { return size() - 1; }

  constexpr bool is_subset_of(const Face& o) const {
    return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
  }
  constexpr bool disjoint(const Face& o) const {
    return (w_[0] & o.w_[0]) == 0 && (w_[1] & o.w_[1]) == 0;
  }

  Face with(Vertex v) const;
  Face without(Vertex v) const;

  /// Smallest / largest vertex; undefined on the empty face.
  Vertex min_vertex() const;
  Vertex max_vertex() const;

  std::vector<Vertex> vertices() const;

  template <class Fn>
  void for_each_vertex(Fn&& fn) const {
    for (int k = 0; k < 2; ++k) {
      std::uint64_t x = w_[k];
      while (x) {
        const int b = std::countr_zero(x);
        fn(static_cast<Vertex>(64 * k + b));
        x &= x - 1;
      }
    }
  }

  constexpr std::uint64_t lo() const { return w_[0]; }
  constexpr std::uint64_t hi() const { return w_[1]; }

  friend constexpr Face operator|(Face a, const Face& b) {
    a.w_[0] |= b.w_[0];
    a.w_[1] |= b.w_[1];
    return a;
  }
  friend constexpr Face operator&(Face a, const Face& b) {
    a.w_[0] &= b.w_[0];
    a.w_[1] &= b.w_[1];
    return a;
  }
  /// Set difference.
  friend constexpr Face operator-(Face a, const Face& b) {
    a.w_[0] &= ~b.w_[0];
    a.w_[1] &= ~b.w_[1];
    return a;
  }
  friend constexpr Face operator^(Face a, const Face& b) {
    a.w_[0] ^= b.w_[0];
    a.w_[1] ^= b.w_[1];
    return a;
  }

  friend constexpr bool operator==(const Face& a, const Face& b) = default;
  friend constexpr std::strong_ordering operator<=>(const Face& a, const Face& b) {
    if (auto c = a.w_[1] <=> b.w_[1]; c != 0) return c;
    return a.w_[0] <=> b.w_[0];
  }

 private:
  std::array<std::uint64_t, 2> w_{0, 0};
};

/// Lexicographic order on the sorted vertex sequences.
bool lex_less(const Face& a, const Face& b);

/// Sort by decreasing size, ties broken lexicographically.
bool size_desc_lex_less(const Face& a, const Face& b);

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept {
    std::uint64_t h = f.lo() * 0x9E3779B97F4A7C15ULL;
    h ^= (f.hi() + 0x632BE59BD9B4E019ULL) * 0xC2B2AE3D27D4EB4FULL;
    h ^= h >> 31;
    return static_cast<std::size_t>(h);
  }
};

}  // namespace tvlab

template <>
struct std::hash<tvlab::Face> : tvlab::FaceHash {};
