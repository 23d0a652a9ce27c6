#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stringchase/map_fn.hpp"

namespace stringchase {

/// Fixed point of cos on [0,1].
inline constexpr double kDottieNumber = 0.7390851332151607;

struct BuiltinParams {
  int n = 0;              ///< 0 = the builtin's natural dimension
  std::vector<double> c;  ///< parameter of const-c / avg-c; a single value is broadcast
};

/// Catalog:
///   reflect1d  g(x) = 1 - x              n = 1, fixed point 1/2,      L = 1
///   dottie     g(x) = cos x              n = 1, fixed point 0.739..., L = sin 1
///   rot90      g(x, y) = (1 - y, x)      n = 2, fixed point (1/2,1/2), L = 1
///   const-c    g(x) = c                  any n, fixed point c,        L = 0
///   avg-c      g(x) = (x + c) / 2        any n, fixed point c,        L = 1/2
///   squeeze    g(x) = x^2                n = 1, fixed points 0 and 1, L = 2
/// c defaults to 1/2 in every coordinate. Throws UnknownBuiltin, or
/// InvalidArgument for a dimension the builtin does not support.
MapFn builtin(std::string_view name, const BuiltinParams& params = {});

std::vector<std::string> builtin_names();

}  // namespace stringchase
