#include "stringchase/solver.hpp"

#include <cmath>
#include <string>

#include "stringchase/errors.hpp"

namespace stringchase {

void SolveConfig::validate() const {
  if (initial_m < 1) throw Error(Errc::ConfigInvalid, "initial_m must be >= 1");
  if (growth < 2) throw Error(Errc::ConfigInvalid, "growth must be >= 2");
  if (max_m < initial_m) throw Error(Errc::ConfigInvalid, "max_m must be >= initial_m");
  if (!(tol > 0.0)) throw Error(Errc::ConfigInvalid, "tol must be > 0");
}

RealPoint select_witness(const MapFn& g, const GridSpec& spec, const StringK& s) {
  RealPoint best;
  double best_residual = 0.0;
  for (const auto& v : vertices(s)) {
    RealPoint p = to_real(spec, v);
    const double r = residual(g, p);
    if (best.empty() || r < best_residual) {
      best = std::move(p);
      best_residual = r;
    }
  }
  return best;
}

StringK find_fully_labeled(const Labeling& lab, Engine engine, std::uint64_t budget) {
  if (engine == Engine::PathFollow) return path_follow(lab).found;
  auto all = exhaustive_fully_labeled(lab, lab.spec().n, budget);
  if (all.empty()) throw Error(Errc::LabelingInvalid, "no fully-labeled string exists");
  return all.front();
}

SolveReport solve(const MapFn& g, const SolveConfig& cfg) {
  cfg.validate();
  const int n = g.dim();
  SolveReport report;
  report.n = n;
  bool have_best = false;

  long long m = cfg.initial_m;
  while (m <= cfg.max_m) {
    const GridSpec spec = GridSpec::make(n, static_cast<int>(m));
    const Labeling lab = Labeling::induced(spec, g);
    const StringK found = find_fully_labeled(lab, cfg.engine, cfg.budget);
    RealPoint z = select_witness(g, spec, found);
    const double r = residual(g, z);

    report.history.push_back({spec.m, r, std::sqrt(static_cast<double>(n)) / spec.m, lab.evaluations()});
    if (!have_best || r < report.residual) {
      have_best = true;
      report.z = std::move(z);
      report.residual = r;
      report.m_final = spec.m;
      report.certificate = Certificate{spec.m, found, labels_of(lab, found)};
    }
    if (r <= cfg.tol) {
      report.converged = true;
      break;
    }
    m *= cfg.growth;
  }
  return report;
}

}  // namespace stringchase
