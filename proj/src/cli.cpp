#include "stringchase/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "stringchase/builtins.hpp"
#include "stringchase/errors.hpp"
#include "stringchase/expr.hpp"
#include "stringchase/report_io.hpp"
#include "stringchase/search.hpp"
#include "stringchase/solver.hpp"
#include "stringchase/svg.hpp"

namespace stringchase::cli {

namespace {

struct MapOptions {
  std::string map_text;
  std::string builtin_name;
  int n = 0;
  std::vector<double> c;
};

void add_map_options(CLI::App& cmd, MapOptions& opts) {
  auto* map = cmd.add_option("--map", opts.map_text, "semicolon-separated component expressions in x1..xn");
  auto* bi = cmd.add_option("--builtin", opts.builtin_name, "builtin map name");
  map->excludes(bi);
  cmd.add_option("--n", opts.n, "dimension")->check(CLI::PositiveNumber);
  cmd.add_option("--c", opts.c, "parameter for const-c / avg-c")->delimiter(',');
}

MapFn resolve_map(const MapOptions& opts) {
  if (!opts.map_text.empty()) {
    int n = opts.n;
    if (n == 0) n = static_cast<int>(std::count(opts.map_text.begin(), opts.map_text.end(), ';')) + 1;
    return to_map_fn(parse_map(opts.map_text, n));
  }
  if (!opts.builtin_name.empty()) return builtin(opts.builtin_name, BuiltinParams{opts.n, opts.c});
  throw Error(Errc::InvalidArgument, "one of --map or --builtin is required");
}

std::uint64_t resolve_budget(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("STRINGCHASE_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidArgument, std::string("STRINGCHASE_BUDGET is not an integer: ") + env);
    }
  }
  return kDefaultBudget;
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_record(const std::string& path, const std::string& command, const std::vector<std::string>& args,
                  const Json& payload) {
  if (path.empty()) return;
  std::ofstream file(path);
  if (!file) throw Error(Errc::InvalidArgument, "cannot write " + path);
  file << dump(to_json(RunRecord{command, args, utc_now(), kVersion, payload})) << '\n';
}

int exit_code_for(Errc code) { return code == Errc::BudgetExceeded ? kBudget : kUsage; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Approximate Brouwer fixed points by path-following on labeled grids", "stringchase"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::optional<std::uint64_t> budget;
  std::string record_path;

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "refine the grid until the residual meets --tol");
  MapOptions solve_map;
  SolveConfig cfg;
  std::string engine = "path";
  bool as_json = false, as_csv = false;
  add_map_options(*solve_cmd, solve_map);
  solve_cmd->add_option("--tol", cfg.tol, "sup-norm residual tolerance");
  solve_cmd->add_option("--max-m", cfg.max_m, "largest resolution to try");
  solve_cmd->add_option("--initial-m", cfg.initial_m, "first resolution");
  solve_cmd->add_option("--growth", cfg.growth, "resolution multiplier");
  solve_cmd->add_option("--engine", engine, "oracle | path")->check(CLI::IsMember({"oracle", "path"}));
  auto* json_flag = solve_cmd->add_flag("--json", as_json, "JSON report (default)");
  solve_cmd->add_flag("--csv", as_csv, "CSV history")->excludes(json_flag);
  solve_cmd->add_option("--budget", budget, "oracle enumeration budget");
  solve_cmd->add_option("--record", record_path, "also write a run record to this file");

  // verify-parity
  auto* parity_cmd = app.add_subcommand("verify-parity", "check the parity and double-counting identities");
  MapOptions parity_map;
  int parity_m = 0;
  add_map_options(*parity_cmd, parity_map);
  parity_cmd->add_option("--m", parity_m, "resolution")->required()->check(CLI::PositiveNumber);
  parity_cmd->add_option("--budget", budget, "enumeration budget");
  parity_cmd->add_option("--record", record_path, "also write a run record to this file");

  // trace
  auto* trace_cmd = app.add_subcommand("trace", "emit the door-in/door-out path at a fixed resolution");
  MapOptions trace_map;
  int trace_m = 0;
  std::string svg_path;
  add_map_options(*trace_cmd, trace_map);
  trace_cmd->add_option("--m", trace_m, "resolution")->required()->check(CLI::PositiveNumber);
  trace_cmd->add_option("--svg", svg_path, "also render the path (n = 2 only)");
  trace_cmd->add_option("--record", record_path, "also write a run record to this file");

  // labels
  auto* labels_cmd = app.add_subcommand("labels", "dump every grid label as CSV");
  MapOptions labels_map;
  int labels_m = 0;
  add_map_options(*labels_cmd, labels_map);
  labels_cmd->add_option("--m", labels_m, "resolution")->required()->check(CLI::PositiveNumber);
  labels_cmd->add_option("--budget", budget, "point budget");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (solve_cmd->parsed()) {
      const MapFn g = resolve_map(solve_map);
      cfg.engine = engine == "oracle" ? Engine::Oracle : Engine::PathFollow;
      cfg.budget = resolve_budget(budget);
      const SolveReport report = solve(g, cfg);
      if (as_csv) {
        out << history_csv(report);
      } else {
        out << dump(to_json(report)) << '\n';
      }
      write_record(record_path, "solve", args, to_json(report));
      return report.converged ? kOk : kNotConverged;
    }
    if (parity_cmd->parsed()) {
      const MapFn g = resolve_map(parity_map);
      const Labeling lab = Labeling::induced(GridSpec::make(g.dim(), parity_m), g);
      const ParityReport report = parity_check(lab, resolve_budget(budget));
      out << dump(to_json(report)) << '\n';
      write_record(record_path, "verify-parity", args, to_json(report));
      return report.ok() ? kOk : kNotConverged;
    }
    if (trace_cmd->parsed()) {
      const MapFn g = resolve_map(trace_map);
      const GridSpec spec = GridSpec::make(g.dim(), trace_m);
      if (!svg_path.empty() && spec.n != 2) {
        throw Error(Errc::SvgUnsupportedDimension, "SVG output needs n = 2, got n = " + std::to_string(spec.n));
      }
      const Labeling lab = Labeling::induced(spec, g);
      const PathResult result = path_follow(lab);
      out << dump(to_json(result.trace)) << '\n';
      if (!svg_path.empty()) {
        std::ofstream file(svg_path);
        if (!file) throw Error(Errc::InvalidArgument, "cannot write " + svg_path);
        file << render_trace_svg(spec, result.trace);
      }
      write_record(record_path, "trace", args, to_json(result.trace));
      return kOk;
    }
    if (labels_cmd->parsed()) {
      const MapFn g = resolve_map(labels_map);
      const Labeling lab = Labeling::induced(GridSpec::make(g.dim(), labels_m), g);
      out << labels_csv(lab, resolve_budget(budget));
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kUsage;
}

}  // namespace stringchase::cli
