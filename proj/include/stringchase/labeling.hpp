#pragma once

// Brouwer labelings of the grid and fully-labeled queries on strings.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stringchase/grid.hpp"
#include "stringchase/map_fn.hpp"

namespace stringchase {

using Label = int;

/// Memoized labeling GridPoint -> {0,...,n}. Either induced from a map by the
/// max-rule, or hand-built from an arbitrary rule (for tests and diagnostics).
///
/// label() may be called concurrently; the cache is guarded internally and a
/// point may be evaluated twice under contention, which is harmless because
/// the rule is pure.
class Labeling {
 public:
  using Rule = std::function<Label(const GridPoint&)>;

  /// label(x) = max{ k : x_k > 0 and g_k(x/m) <= x_k/m }, or 0 if no k qualifies.
  static Labeling induced(const GridSpec& spec, MapFn g);
  static Labeling from_rule(const GridSpec& spec, Rule rule, std::string description);

  Labeling(Labeling&&) noexcept;
  Labeling& operator=(Labeling&&) noexcept;
  ~Labeling();

  Label label(const GridPoint& x) const;

  const GridSpec& spec() const;
  const std::string& description() const;
  /// The inducing map, or nullptr for hand-built labelings.
  const MapFn* source() const;
  /// Cache misses so far, i.e. rule (map) evaluations.
  std::uint64_t evaluations() const;

 private:
  struct State;
  explicit Labeling(std::unique_ptr<State> state);
  std::unique_ptr<State> state_;
};

enum class Condition { B1, B2, Range };

struct Violation {
  GridPoint point;
  Label label = 0;
  Condition condition = Condition::Range;
  int axis = 0;  ///< offending axis for B1/B2; 0 for Range
};

/// First violated condition at x for the given label, if any: label outside
/// 0..n, (B1) x_k = 0 with label k, or (B2) x_k = m with label < k.
std::optional<Violation> check_point(const GridSpec& spec, const GridPoint& x, Label label);

struct ValidateOptions {
  std::uint64_t exhaustive_budget = 1'000'000;
  std::uint64_t sample_size = 10'000;
  std::uint64_t seed = 0x5eed;
};

struct ValidationReport {
  std::uint64_t checked = 0;
  bool exhaustive = true;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks (B1)/(B2) on every grid point, or on a uniform sample when the grid
/// exceeds the exhaustive budget.
ValidationReport validate_brouwer(const Labeling& lab, const ValidateOptions& opts = {});

/// Labels of the k+1 vertices in vertex order.
std::vector<Label> labels_of(const Labeling& lab, const StringK& s);

/// True iff the labels are exactly {0,...,k} where k+1 = labels.size().
bool is_fully_labeled(std::span<const Label> labels);
bool is_fully_labeled(const Labeling& lab, const StringK& s);

struct FaceCount {
  int count = 0;
  std::vector<int> omitted;  ///< ascending vertex indices h
};

/// Faces (omitting vertex h) whose labels are exactly {0,...,k-1}, for a
/// string whose k+1 labels are given in vertex order. Requires k >= 1.
FaceCount fully_labeled_faces(std::span<const Label> labels);
FaceCount count_fully_labeled_faces(const Labeling& lab, const StringK& s);

}  // namespace stringchase
