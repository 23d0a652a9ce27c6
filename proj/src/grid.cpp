#include "stringchase/grid.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "stringchase/errors.hpp"

namespace stringchase {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::string describe(const GridPoint& p) {
  std::string out = "(";
  for (int i = 1; i <= p.dim(); ++i) {
    if (i > 1) out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

}  // namespace

GridSpec GridSpec::make(int n, int m) {
  if (n < 1 || m < 1) {
    throw Error(Errc::InvalidArgument,
                "grid needs n >= 1 and m >= 1 (got n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
  }
  return GridSpec{n, m};
}

std::uint64_t GridSpec::point_count() const {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total = saturating_mul(total, static_cast<std::uint64_t>(m) + 1);
  return total;
}

long GridPoint::sum() const { return std::accumulate(coords_.begin(), coords_.end(), 0L); }

GridPoint GridPoint::stepped(int axis, int delta) const {
  GridPoint out = *this;
  out[axis] += delta;
  return out;
}

std::size_t GridPointHash::operator()(const GridPoint& p) const noexcept {
  std::size_t seed = static_cast<std::size_t>(p.dim());
  for (int c : p.coords()) seed = hash_combine(seed, std::hash<int>{}(c));
  return seed;
}

std::size_t StringKHash::operator()(const StringK& s) const noexcept {
  std::size_t seed = GridPointHash{}(s.base);
  for (int a : s.perm) seed = hash_combine(seed, std::hash<int>{}(a));
  return seed;
}

bool contains(const GridSpec& spec, const GridPoint& p) {
  if (p.dim() != spec.n) return false;
  return std::all_of(p.coords().begin(), p.coords().end(), [&](int c) { return c >= 0 && c <= spec.m; });
}

bool in_slab(const GridPoint& p, int k) {
  for (int i = k + 1; i <= p.dim(); ++i) {
    if (p[i] != 0) return false;
  }
  return true;
}

std::vector<double> to_real(const GridSpec& spec, const GridPoint& p) {
  std::vector<double> out(static_cast<std::size_t>(p.dim()));
  for (int i = 1; i <= p.dim(); ++i) out[static_cast<std::size_t>(i - 1)] = static_cast<double>(p[i]) / spec.m;
  return out;
}

StringK origin_string(int n) { return StringK{GridPoint::origin(n), {}}; }

bool is_valid(const GridSpec& spec, const StringK& s) {
  const int k = s.k();
  if (k > spec.n || !contains(spec, s.base) || !in_slab(s.base, k)) return false;
  std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
  for (int axis : s.perm) {
    if (axis < 1 || axis > k || seen[static_cast<std::size_t>(axis)]) return false;
    seen[static_cast<std::size_t>(axis)] = true;
    if (s.base[axis] > spec.m - 1) return false;
  }
  return true;
}

std::vector<GridPoint> vertices(const StringK& s) {
  std::vector<GridPoint> out;
  out.reserve(static_cast<std::size_t>(s.k()) + 1);
  out.push_back(s.base);
  for (int axis : s.perm) out.push_back(out.back().stepped(axis, 1));
  return out;
}

std::vector<GridPoint> vertices(const Face& f) {
  auto out = vertices(f.parent);
  out.erase(out.begin() + f.omitted);
  return out;
}

StringK string_from_vertices(const GridSpec& spec, std::span<const GridPoint> pts) {
  if (pts.empty()) throw Error(Errc::NotAString, "empty vertex set");
  std::vector<GridPoint> sorted(pts.begin(), pts.end());
  for (const auto& p : sorted) {
    if (!contains(spec, p)) throw Error(Errc::NotAString, "vertex " + describe(p) + " is outside the grid");
  }
  std::sort(sorted.begin(), sorted.end(), [](const GridPoint& a, const GridPoint& b) {
    const long sa = a.sum(), sb = b.sum();
    return sa != sb ? sa < sb : a < b;
  });
  const int k = static_cast<int>(sorted.size()) - 1;
  if (k > spec.n) throw Error(Errc::NotAString, "more than n+1 vertices");

  StringK out{sorted.front(), {}};
  std::vector<bool> used(static_cast<std::size_t>(spec.n) + 1, false);
  for (std::size_t j = 1; j < sorted.size(); ++j) {
    const GridPoint& prev = sorted[j - 1];
    const GridPoint& cur = sorted[j];
    if (cur.sum() != prev.sum() + 1) {
      throw Error(Errc::NotAString, "coordinate sums of " + describe(prev) + " and " + describe(cur) +
                                        " are not consecutive");
    }
    int axis = 0;
    for (int i = 1; i <= spec.n; ++i) {
      const int d = cur[i] - prev[i];
      if (d == 0) continue;
      if (d != 1 || axis != 0) {
        throw Error(Errc::NotAString, describe(prev) + " -> " + describe(cur) + " is not a unit step");
      }
      axis = i;
    }
    if (axis > k || used[static_cast<std::size_t>(axis)]) {
      throw Error(Errc::NotAString, "step on axis " + std::to_string(axis) + " is repeated or beyond k");
    }
    used[static_cast<std::size_t>(axis)] = true;
    out.perm.push_back(axis);
  }
  for (const auto& p : sorted) {
    if (!in_slab(p, k)) throw Error(Errc::NotAString, "vertex " + describe(p) + " lies outside L_k");
  }
  return out;
}

StringK lift(const GridSpec& spec, const StringK& c) {
  const int k = c.k() + 1;
  if (k > spec.n) {
    throw Error(Errc::DimensionExceeded, "cannot lift a " + std::to_string(c.k()) + "-string in dimension " +
                                             std::to_string(spec.n));
  }
  if (!in_slab(c.base, c.k())) throw Error(Errc::InvalidArgument, "lift needs a string inside L_{k-1}");
  StringK out = c;
  out.perm.push_back(k);
  return out;
}

bool is_lower_door(const StringK& b, int h) {
  const int k = b.k();
  return k >= 1 && h == k && b.perm.back() == k && b.base[k] == 0;
}

std::optional<StringK> try_pivot(const GridSpec& spec, const StringK& b, int h) {
  const int k = b.k();
  if (k < 1 || h < 0 || h > k) {
    throw Error(Errc::InvalidArgument, "pivot index " + std::to_string(h) + " outside 0.." + std::to_string(k));
  }
  if (h == 0) {
    // <x_1, ..., x_k, x_k + e_perm(1)>
    const int axis = b.perm.front();
    if (b.base[axis] + 2 > spec.m) return std::nullopt;
    StringK out{b.base.stepped(axis, 1), {}};
    out.perm.assign(b.perm.begin() + 1, b.perm.end());
    out.perm.push_back(axis);
    return out;
  }
  if (h < k) {
    StringK out = b;
    std::swap(out.perm[static_cast<std::size_t>(h - 1)], out.perm[static_cast<std::size_t>(h)]);
    return out;
  }
  // <x_0 - e_perm(k), x_0, ..., x_{k-1}>
  const int axis = b.perm.back();
  if (b.base[axis] == 0) return std::nullopt;
  StringK out{b.base.stepped(axis, -1), {axis}};
  out.perm.insert(out.perm.end(), b.perm.begin(), b.perm.end() - 1);
  return out;
}

StringK pivot(const GridSpec& spec, const StringK& b, int h) {
  auto out = try_pivot(spec, b, h);
  if (!out) {
    throw Error(Errc::BoundaryFace, is_lower_door(b, h) ? "face lies in L_{k-1}"
                                                        : "face omitting vertex " + std::to_string(h) +
                                                              " lies on the grid boundary");
  }
  return *out;
}

int omitted_index(const StringK& s, std::span<const GridPoint> face_vertices) {
  const auto verts = vertices(s);
  int found = -1;
  for (int j = 0; j < static_cast<int>(verts.size()); ++j) {
    if (std::find(face_vertices.begin(), face_vertices.end(), verts[static_cast<std::size_t>(j)]) ==
        face_vertices.end()) {
      if (found != -1) throw Error(Errc::InvalidArgument, "face is not a face of the string");
      found = j;
    }
  }
  if (found == -1) throw Error(Errc::InvalidArgument, "face is not a face of the string");
  return found;
}

std::uint64_t string_count(const GridSpec& spec, int k) {
  std::uint64_t total = 1;
  for (int i = 1; i <= k; ++i) {
    total = saturating_mul(total, static_cast<std::uint64_t>(spec.m));
    total = saturating_mul(total, static_cast<std::uint64_t>(i));
  }
  return total;
}

StringEnumerator::StringEnumerator(const GridSpec& spec, int k) : spec_(spec), k_(k) {
  if (k < 0 || k > spec.n) {
    throw Error(Errc::InvalidArgument, "string level " + std::to_string(k) + " outside 0.." + std::to_string(spec.n));
  }
  current_.base = GridPoint::origin(spec.n);
  current_.perm.resize(static_cast<std::size_t>(k));
  std::iota(current_.perm.begin(), current_.perm.end(), 1);
}

bool StringEnumerator::advance_base() {
  // Odometer over axes 1..k with axis 1 most significant.
  for (int axis = k_; axis >= 1; --axis) {
    if (current_.base[axis] < spec_.m - 1) {
      ++current_.base[axis];
      return true;
    }
    current_.base[axis] = 0;
  }
  return false;
}

std::optional<StringK> StringEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return current_;
  }
  if (!std::next_permutation(current_.perm.begin(), current_.perm.end())) {
    if (!advance_base()) {
      done_ = true;
      return std::nullopt;
    }
  }
  return current_;
}

void for_each_string(const GridSpec& spec, int k, const std::function<void(const StringK&)>& fn) {
  StringEnumerator it(spec, k);
  while (auto s = it.next()) fn(*s);
}

}  // namespace stringchase
