#pragma once

// Finding fully-labeled strings: an exhaustive oracle with the parity
// bookkeeping, and a door-in/door-out path follower.

#include <cstdint>
#include <string>
#include <vector>

#include "stringchase/grid.hpp"
#include "stringchase/labeling.hpp"

namespace stringchase {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// All k-fully-labeled k-strings in lexicographic (base, perm) order.
/// Throws BudgetExceeded when m^k k! > budget.
std::vector<StringK> exhaustive_fully_labeled(const Labeling& lab, int k, std::uint64_t budget = kDefaultBudget);

/// Double-counting tallies for one level k >= 1.
///   S1/S2: k-strings containing exactly one/two (k-1)-fully-labeled faces.
///   T1/T2: (k-1)-fully-labeled faces contained in exactly one/two k-strings.
struct LevelParity {
  int k = 0;
  std::uint64_t s1 = 0, s2 = 0, t1 = 0, t2 = 0;
  std::uint64_t fully_labeled = 0;  ///< counted directly, independent of s1
  std::uint64_t crowded_faces = 0;  ///< faces in more than two strings (never for valid strings)

  bool identity_ok() const { return s1 + 2 * s2 == t1 + 2 * t2 && crowded_faces == 0; }
  bool odd_ok() const { return fully_labeled % 2 == 1 && fully_labeled == s1; }
};

struct ParityReport {
  std::vector<LevelParity> levels;  ///< k = 1..n

  bool ok() const;
};

/// Tallies every level by enumeration. Throws BudgetExceeded when m^n n! > budget.
ParityReport parity_check(const Labeling& lab, std::uint64_t budget = kDefaultBudget);

/// Marks a move between levels in TraceStep::entry / TraceStep::exit.
inline constexpr int kLevelMove = -1;

struct TraceStep {
  int level = 0;
  StringK string;
  std::vector<Label> labels;
  int entry = kLevelMove;  ///< omitted index of the entry face, or kLevelMove (seed / came down from level+1)
  int exit = kLevelMove;   ///< omitted index of the exit face, or kLevelMove (lifted / terminal)
};

enum class Outcome { FoundFullyLabeled, ReachedBoundaryString };

struct PathTrace {
  std::vector<TraceStep> steps;
  Outcome outcome = Outcome::FoundFullyLabeled;
  StringK end;  ///< the fully-labeled string found, or the lower-level door reached
};

/// Walks one level from `start`, entering through face `entry` (or kLevelMove
/// when start is fully labeled and was reached from the level above). Stops at a
/// fully-labeled string or when the exit face lies in L_{k-1}.
PathTrace walk_level(const Labeling& lab, const StringK& start, int entry);

struct PathResult {
  StringK found;
  PathTrace trace;
};

/// Follows the unique door-in/door-out path from <0> through all levels to an
/// n-fully-labeled n-string.
///
/// Throws LabelingInvalid when a touched point breaks (B1)/(B2) or a door runs
/// into the grid boundary, and StepLimitExceeded if a level visits more than
/// m^k k! + 1 strings or a string repeats (both mean a broken invariant).
PathResult path_follow(const Labeling& lab);

/// Structural check of a trace using only its own contents: each consecutive
/// pair shares exactly max(level) vertices carrying labels {0..max(level)-1},
/// no (level, string) repeats, and the final step is fully labeled.
/// Returns a list of problems (empty = pass).
std::vector<std::string> check_trace(const GridSpec& spec, const PathTrace& trace);

}  // namespace stringchase
