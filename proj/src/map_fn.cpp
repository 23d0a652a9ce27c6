#include "stringchase/map_fn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "stringchase/errors.hpp"

namespace stringchase {

namespace {

std::string describe(std::span<const double> x) {
  std::string out = "(";
  char buf[32];
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", x[i]);
    if (i > 0) out += ",";
    out += buf;
  }
  return out + ")";
}

}  // namespace

MapFn::MapFn(int n, std::string name, Eval eval, MapInfo info)
    : n_(n), name_(std::move(name)), eval_(std::move(eval)), info_(std::move(info)) {
  if (n_ < 1) throw Error(Errc::InvalidArgument, "map dimension must be >= 1");
  if (!eval_) throw Error(Errc::InvalidArgument, "map has no evaluator");
}

RealPoint MapFn::operator()(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != n_) {
    throw Error(Errc::InvalidArgument, "point of dimension " + std::to_string(x.size()) + " passed to " + name_);
  }
  RealPoint y;
  try {
    y = eval_(x);
  } catch (const std::exception& e) {
    throw Error(Errc::MapEvaluationFailed, name_ + " at " + describe(x) + ": " + e.what());
  }
  if (static_cast<int>(y.size()) != n_) {
    throw Error(Errc::MapEvaluationFailed, name_ + " at " + describe(x) + " returned wrong dimension");
  }
  for (double& v : y) {
    if (std::isnan(v)) throw Error(Errc::MapEvaluationFailed, name_ + " at " + describe(x) + " returned NaN");
    v = std::clamp(v, 0.0, 1.0);
  }
  return y;
}

double residual(const MapFn& g, std::span<const double> p) {
  const RealPoint y = g(p);
  double worst = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) worst = std::max(worst, std::abs(y[i] - p[i]));
  return worst;
}

}  // namespace stringchase
