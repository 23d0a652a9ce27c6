#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace stringchase {

using RealPoint = std::vector<double>;

/// Facts known about a map ahead of time. Builtins fill these in; parsed maps
/// leave them empty.
struct MapInfo {
  std::optional<double> lipschitz;  ///< Euclidean Lipschitz constant
  std::vector<RealPoint> fixed_points;
};

/// A map [0,1]^n -> [0,1]^n. Outputs are clamped componentwise into [0,1].
class MapFn {
 public:
  using Eval = std::function<RealPoint(std::span<const double>)>;

  MapFn(int n, std::string name, Eval eval, MapInfo info = {});

  int dim() const { return n_; }
  const std::string& name() const { return name_; }
  const MapInfo& info() const { return info_; }

  /// Evaluates and clamps. Throws MapEvaluationFailed if the evaluator throws,
  /// returns the wrong dimension, or produces NaN.
  RealPoint operator()(std::span<const double> x) const;

 private:
  int n_;
  std::string name_;
  Eval eval_;
  MapInfo info_;
};

/// max_k |g_k(p) - p_k| with g clamped.
double residual(const MapFn& g, std::span<const double> p);

}  // namespace stringchase
