#pragma once

// Integer grid {0,...,m}^n, k-strings and the lift/pivot adjacency between them.
//
// Axes are 1-based throughout: p[1] is the first coordinate. A k-string is
// stored as (base, perm) where perm[i-1] is the axis stepped at position i, so
// vertex j is base + e_perm[0] + ... + e_perm[j-1].

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace stringchase {

struct GridSpec {
  int n = 1;  ///< dimension
  int m = 1;  ///< subdivisions per axis

  /// Throws InvalidArgument unless n >= 1 and m >= 1.
  static GridSpec make(int n, int m);

  /// (m+1)^n, saturating at UINT64_MAX.
  std::uint64_t point_count() const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

class GridPoint {
 public:
  GridPoint() = default;
  explicit GridPoint(std::vector<int> coords) : coords_(std::move(coords)) {}

  static GridPoint origin(int n) { return GridPoint(std::vector<int>(static_cast<std::size_t>(n), 0)); }

  int dim() const { return static_cast<int>(coords_.size()); }

  /// 1-based axis access.
  int operator[](int axis) const { return coords_[static_cast<std::size_t>(axis - 1)]; }
  int& operator[](int axis) { return coords_[static_cast<std::size_t>(axis - 1)]; }

  std::span<const int> coords() const { return coords_; }
  long sum() const;

  /// Copy stepped by `delta` along `axis`.
  GridPoint stepped(int axis, int delta) const;

  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;

 private:
  std::vector<int> coords_;
};

struct GridPointHash {
  std::size_t operator()(const GridPoint& p) const noexcept;
};

bool contains(const GridSpec& spec, const GridPoint& p);

/// True when every coordinate beyond axis k is zero (membership in L_k).
bool in_slab(const GridPoint& p, int k);

/// coords / m.
std::vector<double> to_real(const GridSpec& spec, const GridPoint& p);

struct StringK {
  GridPoint base;
  std::vector<int> perm;

  int k() const { return static_cast<int>(perm.size()); }

  // Lexicographic by base, then by perm.
  friend auto operator<=>(const StringK&, const StringK&) = default;
  friend bool operator==(const StringK&, const StringK&) = default;
};

struct StringKHash {
  std::size_t operator()(const StringK& s) const noexcept;
};

/// A k-string with vertex `omitted` removed.
struct Face {
  StringK parent;
  int omitted = 0;
};

/// The 0-string <0>.
StringK origin_string(int n);

/// Checks the structural invariants: perm is a bijection on 1..k, base lies in
/// L_k, and every stepped axis has room for one step.
bool is_valid(const GridSpec& spec, const StringK& s);

/// <x_0, ..., x_k> in order.
std::vector<GridPoint> vertices(const StringK& s);
std::vector<GridPoint> vertices(const Face& f);

/// Inverse of vertices(): recovers (base, perm) from an unordered vertex set.
/// Throws NotAString.
StringK string_from_vertices(const GridSpec& spec, std::span<const GridPoint> pts);

/// Unique k-string containing the (k-1)-string c, which must lie in L_{k-1}.
/// Throws DimensionExceeded when c.k() + 1 > n.
StringK lift(const GridSpec& spec, const StringK& c);

/// True when the face omitting vertex h lies in L_{k-1}: h = k, perm(k) = k and
/// base[k] = 0. That face is itself a (k-1)-string.
bool is_lower_door(const StringK& b, int h);

/// The other k-string through the face omitting vertex h, or nullopt when the
/// step it needs leaves the grid.
std::optional<StringK> try_pivot(const GridSpec& spec, const StringK& b, int h);

/// As try_pivot, but throws BoundaryFace on the grid edge.
StringK pivot(const GridSpec& spec, const StringK& b, int h);

/// Index of the vertex of `s` not in `face_vertices` (which must be k vertices of s).
int omitted_index(const StringK& s, std::span<const GridPoint> face_vertices);

/// m^k * k!, saturating at UINT64_MAX.
std::uint64_t string_count(const GridSpec& spec, int k);

/// Streams every k-string exactly once, in lexicographic (base, perm) order.
class StringEnumerator {
 public:
  StringEnumerator(const GridSpec& spec, int k);

  std::optional<StringK> next();

 private:
  bool advance_base();

  GridSpec spec_;
  int k_;
  StringK current_;
  bool done_ = false;
  bool started_ = false;
};

/// Calls fn for every k-string.
void for_each_string(const GridSpec& spec, int k, const std::function<void(const StringK&)>& fn);

}  // namespace stringchase
