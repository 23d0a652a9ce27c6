#include "stringchase/builtins.hpp"

#include <cmath>

#include "stringchase/errors.hpp"

namespace stringchase {

namespace {

int fixed_dimension(std::string_view name, const BuiltinParams& params, int natural) {
  if (params.n != 0 && params.n != natural) {
    throw Error(Errc::InvalidArgument, std::string(name) + " is defined for n = " + std::to_string(natural));
  }
  return natural;
}

RealPoint resolve_c(std::string_view name, const BuiltinParams& params) {
  int n = params.n;
  RealPoint c = params.c;
  if (c.empty()) {
    c.assign(static_cast<std::size_t>(n > 0 ? n : 1), 0.5);
  } else if (c.size() == 1 && n > 1) {
    c.assign(static_cast<std::size_t>(n), c.front());
  } else if (n != 0 && static_cast<int>(c.size()) != n) {
    throw Error(Errc::InvalidArgument, std::string(name) + ": c has " + std::to_string(c.size()) +
                                           " entries but n = " + std::to_string(n));
  }
  for (double v : c) {
    if (!(v >= 0.0 && v <= 1.0)) throw Error(Errc::InvalidArgument, std::string(name) + ": c must lie in [0,1]");
  }
  return c;
}

}  // namespace

MapFn builtin(std::string_view name, const BuiltinParams& params) {
  if (name == "reflect1d") {
    fixed_dimension(name, params, 1);
    return MapFn(1, "reflect1d", [](std::span<const double> x) { return RealPoint{1.0 - x[0]}; },
                 MapInfo{1.0, {{0.5}}});
  }
  if (name == "dottie") {
    fixed_dimension(name, params, 1);
    return MapFn(1, "dottie", [](std::span<const double> x) { return RealPoint{std::cos(x[0])}; },
                 MapInfo{std::sin(1.0), {{kDottieNumber}}});
  }
  if (name == "rot90") {
    fixed_dimension(name, params, 2);
    return MapFn(2, "rot90", [](std::span<const double> x) { return RealPoint{1.0 - x[1], x[0]}; },
                 MapInfo{1.0, {{0.5, 0.5}}});
  }
  if (name == "squeeze") {
    fixed_dimension(name, params, 1);
    return MapFn(1, "squeeze", [](std::span<const double> x) { return RealPoint{x[0] * x[0]}; },
                 MapInfo{2.0, {{0.0}, {1.0}}});
  }
  if (name == "const-c") {
    RealPoint c = resolve_c(name, params);
    const int n = static_cast<int>(c.size());
    return MapFn(n, "const-c", [c](std::span<const double>) { return c; }, MapInfo{0.0, {c}});
  }
  if (name == "avg-c") {
    RealPoint c = resolve_c(name, params);
    const int n = static_cast<int>(c.size());
    return MapFn(
        n, "avg-c",
        [c](std::span<const double> x) {
          RealPoint y(c.size());
          for (std::size_t i = 0; i < c.size(); ++i) y[i] = (x[i] + c[i]) / 2.0;
          return y;
        },
        MapInfo{0.5, {c}});
  }
  throw Error(Errc::UnknownBuiltin, "no builtin named '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() {
  return {"reflect1d", "dottie", "rot90", "const-c", "avg-c", "squeeze"};
}

}  // namespace stringchase
