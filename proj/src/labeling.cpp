#include "stringchase/labeling.hpp"

#include <mutex>
#include <random>
#include <shared_mutex>
#include <unordered_map>

#include "stringchase/errors.hpp"

namespace stringchase {

struct Labeling::State {
  GridSpec spec;
  Rule rule;
  std::string description;
  std::optional<MapFn> source;

  mutable std::shared_mutex mutex;
  mutable std::unordered_map<GridPoint, Label, GridPointHash> cache;
  mutable std::uint64_t misses = 0;
};

Labeling::Labeling(std::unique_ptr<State> state) : state_(std::move(state)) {}
Labeling::Labeling(Labeling&&) noexcept = default;
Labeling& Labeling::operator=(Labeling&&) noexcept = default;
Labeling::~Labeling() = default;

Labeling Labeling::induced(const GridSpec& spec, MapFn g) {
  if (g.dim() != spec.n) {
    throw Error(Errc::InvalidArgument, "map " + g.name() + " has dimension " + std::to_string(g.dim()) +
                                           ", grid has " + std::to_string(spec.n));
  }
  auto state = std::make_unique<State>();
  state->spec = spec;
  state->description = g.name();
  state->source.emplace(std::move(g));
  const MapFn* map = &*state->source;
  state->rule = [spec, map](const GridPoint& x) {
    const RealPoint real = to_real(spec, x);
    const RealPoint image = (*map)(real);
    for (int k = spec.n; k >= 1; --k) {
      const auto i = static_cast<std::size_t>(k - 1);
      if (x[k] > 0 && image[i] <= real[i]) return k;
    }
    return 0;
  };
  return Labeling(std::move(state));
}

Labeling Labeling::from_rule(const GridSpec& spec, Rule rule, std::string description) {
  auto state = std::make_unique<State>();
  state->spec = spec;
  state->rule = std::move(rule);
  state->description = std::move(description);
  return Labeling(std::move(state));
}

Label Labeling::label(const GridPoint& x) const {
  if (!contains(state_->spec, x)) throw Error(Errc::InvalidArgument, "label query outside the grid");
  {
    std::shared_lock lock(state_->mutex);
    auto it = state_->cache.find(x);
    if (it != state_->cache.end()) return it->second;
  }
  const Label value = state_->rule(x);
  std::unique_lock lock(state_->mutex);
  auto [it, inserted] = state_->cache.emplace(x, value);
  if (inserted) ++state_->misses;
  return it->second;
}

const GridSpec& Labeling::spec() const { return state_->spec; }
const std::string& Labeling::description() const { return state_->description; }
const MapFn* Labeling::source() const { return state_->source ? &*state_->source : nullptr; }

std::uint64_t Labeling::evaluations() const {
  std::shared_lock lock(state_->mutex);
  return state_->misses;
}

std::optional<Violation> check_point(const GridSpec& spec, const GridPoint& x, Label label) {
  if (label < 0 || label > spec.n) return Violation{x, label, Condition::Range, 0};
  for (int k = 1; k <= spec.n; ++k) {
    if (x[k] == 0 && label == k) return Violation{x, label, Condition::B1, k};
    if (x[k] == spec.m && label < k) return Violation{x, label, Condition::B2, k};
  }
  return std::nullopt;
}

ValidationReport validate_brouwer(const Labeling& lab, const ValidateOptions& opts) {
  const GridSpec& spec = lab.spec();
  ValidationReport report;
  auto check = [&](const GridPoint& x) {
    ++report.checked;
    if (auto v = check_point(spec, x, lab.label(x))) report.violations.push_back(*v);
  };

  if (spec.point_count() <= opts.exhaustive_budget) {
    GridPoint x = GridPoint::origin(spec.n);
    while (true) {
      check(x);
      int axis = spec.n;
      while (axis >= 1 && x[axis] == spec.m) x[axis--] = 0;
      if (axis < 1) break;
      ++x[axis];
    }
    return report;
  }

  report.exhaustive = false;
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> coord(0, spec.m);
  for (std::uint64_t i = 0; i < opts.sample_size; ++i) {
    std::vector<int> c(static_cast<std::size_t>(spec.n));
    for (int& v : c) v = coord(rng);
    check(GridPoint(std::move(c)));
  }
  return report;
}

std::vector<Label> labels_of(const Labeling& lab, const StringK& s) {
  std::vector<Label> out;
  out.reserve(static_cast<std::size_t>(s.k()) + 1);
  for (const auto& v : vertices(s)) out.push_back(lab.label(v));
  return out;
}

bool is_fully_labeled(std::span<const Label> labels) {
  const int k = static_cast<int>(labels.size()) - 1;
  std::vector<bool> seen(labels.size(), false);
  for (Label l : labels) {
    if (l < 0 || l > k || seen[static_cast<std::size_t>(l)]) return false;
    seen[static_cast<std::size_t>(l)] = true;
  }
  return true;
}

bool is_fully_labeled(const Labeling& lab, const StringK& s) { return is_fully_labeled(labels_of(lab, s)); }

FaceCount fully_labeled_faces(std::span<const Label> labels) {
  const int k = static_cast<int>(labels.size()) - 1;
  if (k < 1) throw Error(Errc::InvalidArgument, "faces need a string with k >= 1");

  // A face omitting h is fully labeled iff the remaining labels hit each of
  // 0..k-1 exactly once.
  std::vector<int> count(static_cast<std::size_t>(k), 0);
  int out_of_range = 0;
  for (Label l : labels) {
    if (l >= 0 && l < k) {
      ++count[static_cast<std::size_t>(l)];
    } else {
      ++out_of_range;
    }
  }

  FaceCount result;
  for (int h = 0; h <= k; ++h) {
    const Label dropped = labels[static_cast<std::size_t>(h)];
    const bool dropped_in_range = dropped >= 0 && dropped < k;
    if (out_of_range - (dropped_in_range ? 0 : 1) != 0) continue;
    bool ok = true;
    for (int v = 0; v < k && ok; ++v) {
      ok = count[static_cast<std::size_t>(v)] - (dropped == v ? 1 : 0) == 1;
    }
    if (ok) result.omitted.push_back(h);
  }
  result.count = static_cast<int>(result.omitted.size());
  return result;
}

FaceCount count_fully_labeled_faces(const Labeling& lab, const StringK& s) {
  return fully_labeled_faces(labels_of(lab, s));
}

}  // namespace stringchase
