#pragma once

// Approximate fixed points by refining the grid until a fully-labeled
// string's best vertex has a small residual.

#include <cstdint>
#include <vector>

#include "stringchase/grid.hpp"
#include "stringchase/labeling.hpp"
#include "stringchase/map_fn.hpp"
#include "stringchase/search.hpp"

namespace stringchase {

enum class Engine { Oracle, PathFollow };

struct SolveConfig {
  int initial_m = 2;
  int growth = 2;
  int max_m = 1 << 16;
  double tol = 1e-6;
  Engine engine = Engine::PathFollow;
  std::uint64_t budget = kDefaultBudget;  ///< oracle enumeration budget

  /// Throws ConfigInvalid.
  void validate() const;
};

struct Certificate {
  int m = 0;
  StringK string;
  std::vector<Label> labels;
};

struct ResolutionRecord {
  int m = 0;
  double residual = 0.0;
  double diameter = 0.0;  ///< sqrt(n) / m
  std::uint64_t evals = 0;
};

struct SolveReport {
  int n = 0;
  RealPoint z;
  double residual = 0.0;
  int m_final = 0;
  bool converged = false;
  Certificate certificate;
  std::vector<ResolutionRecord> history;
};

/// Vertex of s with the smallest residual; ties go to the earlier vertex.
RealPoint select_witness(const MapFn& g, const GridSpec& spec, const StringK& s);

/// One n-fully-labeled n-string at a fixed resolution, from the chosen engine.
StringK find_fully_labeled(const Labeling& lab, Engine engine, std::uint64_t budget = kDefaultBudget);

/// Runs m = initial_m, initial_m*growth, ... up to max_m and stops at the first
/// witness with residual <= tol. Without convergence, reports the best witness
/// seen across all resolutions with converged = false.
SolveReport solve(const MapFn& g, const SolveConfig& cfg = {});

}  // namespace stringchase
