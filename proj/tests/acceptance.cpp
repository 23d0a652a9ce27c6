// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "stringchase/builtins.hpp"
#include "stringchase/cli.hpp"
#include "stringchase/errors.hpp"
#include "stringchase/expr.hpp"
#include "stringchase/labeling.hpp"
#include "stringchase/search.hpp"
#include "stringchase/solver.hpp"

using namespace stringchase;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Instance {
  std::string name;
  MapFn map;
  int m;
};

// Every builtin at each dimension it supports plus 100 random polynomial maps
// per dimension, each at m = 1..5.
std::vector<Instance> parity_instances() {
  std::vector<std::pair<std::string, MapFn>> maps;
  maps.emplace_back("reflect1d", builtin("reflect1d"));
  maps.emplace_back("dottie", builtin("dottie"));
  maps.emplace_back("squeeze", builtin("squeeze"));
  maps.emplace_back("rot90", builtin("rot90"));
  for (int n = 1; n <= 3; ++n) {
    maps.emplace_back("const-c/" + std::to_string(n), builtin("const-c", {n, {}}));
    maps.emplace_back("avg-c/" + std::to_string(n), builtin("avg-c", {n, {0.8}}));
  }
  std::mt19937_64 rng(20261018);
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i < 100; ++i) {
      const std::string text = oracle::random_polynomial_map(rng, n);
      maps.emplace_back(text, to_map_fn(parse_map(text, n)));
    }
  }
  std::vector<Instance> out;
  for (const auto& [name, g] : maps) {
    for (int m = 1; m <= 5; ++m) out.push_back({name, g, m});
  }
  return out;
}

Verdict parity_theorem(const std::vector<Instance>& instances) {
  Verdict o;
  std::size_t levels = 0;
  for (const auto& inst : instances) {
    const Labeling lab = Labeling::induced(GridSpec::make(inst.map.dim(), inst.m), inst.map);
    const ParityReport report = parity_check(lab);
    for (const auto& l : report.levels) {
      ++levels;
      const auto direct = exhaustive_fully_labeled(lab, l.k).size();
      if (direct % 2 != 1) o.fail(inst.name + " m=" + std::to_string(inst.m) + " k=" + std::to_string(l.k) + ": even count");
      if (l.s1 + 2 * l.s2 != l.t1 + 2 * l.t2) o.fail(inst.name + ": S1+2S2 != T1+2T2");
      if (!l.odd_ok() || !l.identity_ok()) o.fail(inst.name + ": parity report flagged");
    }
  }
  if (o.pass) o.detail = std::to_string(instances.size()) + " instances, " + std::to_string(levels) + " levels";
  return o;
}

Verdict oracle_equivalence(const std::vector<Instance>& instances) {
  Verdict o;
  for (const auto& inst : instances) {
    const Labeling lab = Labeling::induced(GridSpec::make(inst.map.dim(), inst.m), inst.map);
    const PathResult result = path_follow(lab);
    const auto all = exhaustive_fully_labeled(lab, lab.spec().n);
    if (!std::binary_search(all.begin(), all.end(), result.found)) o.fail(inst.name + ": result not in oracle list");
    const auto problems = check_trace(lab.spec(), result.trace);
    if (!problems.empty()) o.fail(inst.name + ": " + problems.front());
    for (const auto& step : result.trace.steps) {
      if (step.labels != labels_of(lab, step.string)) o.fail(inst.name + ": trace labels disagree with labeling");
    }
  }
  if (o.pass) o.detail = std::to_string(instances.size()) + " instances";
  return o;
}

Labeling random_brouwer_labeling(const GridSpec& spec, std::uint64_t seed) {
  return Labeling::from_rule(
      spec,
      [spec, seed](const GridPoint& x) {
        std::vector<int> allowed;
        for (int l = 0; l <= spec.n; ++l) {
          if (!check_point(spec, x, l)) allowed.push_back(l);
        }
        std::mt19937_64 rng(seed ^ GridPointHash{}(x));
        return allowed[rng() % allowed.size()];
      },
      "random-brouwer");
}

Verdict lemma_micro_checks(const std::vector<Instance>& instances) {
  Verdict o;
  std::size_t strings = 0, faces = 0;

  // Face counting on random label vectors.
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10000; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 3);
    std::vector<int> labels(static_cast<std::size_t>(k) + 1);
    for (int& l : labels) l = static_cast<int>(rng() % static_cast<unsigned>(k + 1));
    const FaceCount fc = fully_labeled_faces(labels);
    if (fc.count > 2) o.fail("more than two faces");
    if ((fc.count == 1) != is_fully_labeled(labels)) o.fail("count = 1 does not match fully labeled");
    if (fc.omitted != oracle::brute_faces(labels)) o.fail("face count disagrees with subset enumeration");
  }

  std::vector<Labeling> labelings;
  for (const auto& inst : instances) {
    if (inst.map.dim() <= 2 && inst.m <= 3) {
      labelings.push_back(Labeling::induced(GridSpec::make(inst.map.dim(), inst.m), inst.map));
    }
  }
  for (int n = 1; n <= 2; ++n) {
    for (int m = 1; m <= 3; ++m) {
      for (int i = 0; i < 50; ++i) labelings.push_back(random_brouwer_labeling(GridSpec::make(n, m), rng()));
    }
  }

  for (const Labeling& lab : labelings) {
    const GridSpec& spec = lab.spec();
    for (int k = 1; k <= spec.n; ++k) {
      std::vector<StringK> level;
      for_each_string(spec, k, [&](const StringK& s) { level.push_back(s); });
      for (const StringK& s : level) {
        ++strings;
        const std::vector<Label> labels = labels_of(lab, s);
        const FaceCount fc = count_fully_labeled_faces(lab, s);
        if (fc.count > 2) o.fail("more than two faces");
        if ((fc.count == 1) != is_fully_labeled(labels)) o.fail("count = 1 does not match fully labeled");
        if (fc.omitted != oracle::brute_faces(labels)) o.fail("face count disagrees with subset enumeration");

        for (int h : fc.omitted) {
          ++faces;
          const auto face = vertices(Face{s, h});
          int containing = 0;
          for (const StringK& b : level) {
            const auto bv = vertices(b);
            if (std::all_of(face.begin(), face.end(),
                            [&](const GridPoint& p) { return std::find(bv.begin(), bv.end(), p) != bv.end(); })) {
              ++containing;
            }
          }
          bool is_lower_string = false;
          try {
            is_lower_string = string_from_vertices(spec, face).k() == k - 1;
          } catch (const Error&) {
          }
          if (containing > 2) o.fail("face in more than two strings");
          if ((containing == 1) != is_lower_string) o.fail("face in exactly one string iff it is a (k-1)-string");
        }
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(labelings.size()) + " labelings, " + std::to_string(strings) + " strings, " +
               std::to_string(faces) + " faces";
  }
  return o;
}

std::vector<std::pair<MapFn, SolveReport>> g_reports;

Verdict fixed_point_accuracy() {
  Verdict o;
  std::ostringstream detail;
  auto timed = [&](const std::string& name, const MapFn& g, const SolveConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    SolveReport r = solve(g, cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 5.0) o.fail(name + " took " + std::to_string(secs) + " s");
    g_reports.emplace_back(g, r);
    return r;
  };

  const auto reflect = timed("reflect1d", builtin("reflect1d"), SolveConfig{.tol = 1e-9});
  if (!(reflect.z == RealPoint{0.5} && reflect.residual == 0.0 && reflect.m_final <= 4)) o.fail("reflect1d");
  detail << "reflect1d z=" << reflect.z[0] << " m=" << reflect.m_final;

  const double dottie_ref = oracle::bisect([](double x) { return std::cos(x) - x; }, 0.0, 1.0, 1e-12);
  const auto dottie = timed("dottie", builtin("dottie"), SolveConfig{.tol = 1e-3});
  if (!(std::abs(dottie.z[0] - dottie_ref) <= 1e-3 && dottie.m_final <= (1 << 13) && dottie.converged)) o.fail("dottie");
  if (std::abs(dottie_ref - 0.7390851332) > 1e-9) o.fail("bisection reference");
  detail << "; dottie |dz|=" << std::abs(dottie.z[0] - dottie_ref) << " m=" << dottie.m_final;

  const auto rot = timed("rot90", builtin("rot90"), SolveConfig{.tol = 1e-2});
  const double rot_err = std::max(std::abs(rot.z[0] - 0.5), std::abs(rot.z[1] - 0.5));
  if (!(rot_err <= 1e-2)) o.fail("rot90");
  detail << "; rot90 |dz|=" << rot_err;

  const auto avg = timed("avg-c", builtin("avg-c", {1, {0.8}}), SolveConfig{});
  const double avg_err = std::abs(avg.z[0] - 0.8);
  if (!(avg_err <= 2.0 / avg.m_final)) o.fail("avg-c");
  detail << "; avg-c |dz|=" << avg_err << " <= 2/" << avg.m_final;

  if (o.pass) o.detail = detail.str();
  return o;
}

Verdict brouwer_validity() {
  Verdict o;
  std::mt19937_64 rng(4242);
  std::vector<MapFn> maps;
  for (const auto& name : builtin_names()) maps.push_back(builtin(name));
  for (int n = 1; n <= 3; ++n) {
    maps.push_back(builtin("const-c", {n, {1.0}}));
    maps.push_back(builtin("avg-c", {n, {0.0}}));
    for (int i = 0; i < 60; ++i) {
      maps.push_back(to_map_fn(parse_map(oracle::random_general_map(rng, n), n)));
      maps.push_back(to_map_fn(parse_map(oracle::random_polynomial_map(rng, n), n)));
    }
  }
  std::size_t checked = 0;
  for (const auto& g : maps) {
    for (int m = 1; m <= 4; ++m) {
      const Labeling lab = Labeling::induced(GridSpec::make(g.dim(), m), g);
      const auto report = validate_brouwer(lab);
      checked += report.checked;
      if (!report.exhaustive) o.fail("validation was not exhaustive");
      if (!report.ok()) o.fail(g.name() + " m=" + std::to_string(m) + " breaks (B1)/(B2)");
    }
  }
  if (o.pass) o.detail = std::to_string(maps.size()) + " maps, " + std::to_string(checked) + " points";
  return o;
}

Verdict certificate_sandwich() {
  Verdict o;
  std::mt19937_64 rng(99);
  for (int i = 0; i < 30; ++i) {
    const int n = 1 + i % 3;
    const MapFn g = to_map_fn(parse_map(oracle::random_general_map(rng, n), n));
    g_reports.emplace_back(g, solve(g, SolveConfig{.max_m = n == 3 ? 32 : 256, .tol = 1e-4}));
  }
  for (const auto& [g, r] : g_reports) {
    const GridSpec spec = GridSpec::make(r.n, r.certificate.m);
    const auto verts = vertices(r.certificate.string);
    if (!is_fully_labeled(r.certificate.labels)) o.fail(g.name() + ": certificate not fully labeled");
    for (std::size_t j = 0; j < verts.size(); ++j) {
      const Label l = r.certificate.labels[j];
      const RealPoint y = to_real(spec, verts[j]);
      const RealPoint gy = g(y);
      if (l == 0) {
        for (std::size_t i = 0; i < y.size(); ++i) {
          if (gy[i] < y[i]) o.fail(g.name() + ": g(y0) >= y0 fails");
        }
      } else if (gy[static_cast<std::size_t>(l - 1)] > y[static_cast<std::size_t>(l - 1)]) {
        o.fail(g.name() + ": g_k(y_k) <= (y_k)_k fails");
      }
    }
  }
  if (o.pass) o.detail = std::to_string(g_reports.size()) + " certificates";
  return o;
}

Verdict determinism() {
  Verdict o;
  const std::vector<std::vector<std::string>> commands = {
      {"solve", "--builtin", "dottie", "--tol", "1e-4"},
      {"solve", "--map", "0.5 + 0.4 * sin(x2); 1 - x1^2", "--tol", "1e-2"},
      {"solve", "--builtin", "rot90", "--tol", "1e-3", "--engine", "oracle", "--csv"},
      {"solve", "--builtin", "avg-c", "--c", "0.8", "--max-m", "256"},
      {"verify-parity", "--builtin", "avg-c", "--n", "3", "--m", "5"},
      {"trace", "--map", "max2(x2, 0.3); cos(x1)", "--m", "12"},
      {"labels", "--builtin", "rot90", "--m", "6"},
  };
  for (const auto& args : commands) {
    std::ostringstream a, b, ea, eb;
    const int ca = cli::run(args, a, ea);
    const int cb = cli::run(args, b, eb);
    if (ca != cb || a.str() != b.str() || a.str().empty()) o.fail("in-process run of " + args[0] + " differs");
#ifdef STRINGCHASE_CLI_PATH
    std::string cmd = STRINGCHASE_CLI_PATH;
    for (const auto& arg : args) cmd += " '" + arg + "'";
    std::string outs[2];
    for (auto& out : outs) {
      FILE* pipe = popen(cmd.c_str(), "r");
      if (!pipe) {
        o.fail("cannot start " + cmd);
        continue;
      }
      char buf[4096];
      while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
      pclose(pipe);
    }
    if (outs[0] != outs[1]) o.fail("binary output differs for " + cmd);
    if (outs[0] != a.str()) o.fail("binary and in-process output differ for " + cmd);
#endif
  }
  if (o.pass) o.detail = std::to_string(commands.size()) + " commands, repeated in-process and as subprocesses";
  return o;
}

}  // namespace

int main() {
  const auto instances = parity_instances();
  struct Criterion {
    const char* id;
    const char* name;
    double limit_s;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1", "parity theorem at desk scale", 60.0, [&] { return parity_theorem(instances); }},
      {"AC2", "path-follow vs exhaustive oracle", 30.0, [&] { return oracle_equivalence(instances); }},
      {"AC3", "lemma micro-checks", 30.0, [&] { return lemma_micro_checks(instances); }},
      {"AC4", "fixed-point accuracy", 20.0, fixed_point_accuracy},
      {"AC5", "Brouwer labeling validity", 10.0, brouwer_validity},
      {"AC6", "certificate sandwich", 60.0, certificate_sandwich},
      {"AC7", "CLI determinism", 60.0, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.limit_s) o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s");
    failures += o.pass ? 0 : 1;
    std::printf("[%s] %s %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
