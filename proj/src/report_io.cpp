#include "stringchase/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "stringchase/errors.hpp"

namespace stringchase {

namespace {

Json to_json(const GridPoint& p) { return Json(std::vector<int>(p.coords().begin(), p.coords().end())); }

GridPoint point_from_json(const Json& j) { return GridPoint(j.get<std::vector<int>>()); }

StringK string_from_json(const Json& j) {
  return StringK{point_from_json(j.at("base")), j.at("perm").get<std::vector<int>>()};
}

const char* outcome_name(Outcome o) { return o == Outcome::FoundFullyLabeled ? "found" : "boundary"; }

void write(std::string& out, const Json& j, int indent, int depth) {
  const bool pretty = indent >= 0;
  auto newline = [&](int d) {
    if (!pretty) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(it.key()).dump();
        out += pretty ? ": " : ":";
        write(out, it.value(), indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::all_of(j.begin(), j.end(), [](const Json& v) { return v.is_primitive(); });
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += flat && pretty ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        write(out, v, indent, depth + 1);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float: out += format_real(j.get<double>()); return;
    default: out += j.dump(); return;
  }
}

}  // namespace

std::string format_real(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  // Keep the value a JSON float so it does not read back as an integer.
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

std::string dump(const Json& j, int indent) {
  std::string out;
  write(out, j, indent, 0);
  return out;
}

Json to_json(const SolveReport& r) {
  Json history = Json::array();
  for (const auto& h : r.history) {
    history.push_back({{"m", h.m}, {"residual", h.residual}, {"diameter", h.diameter}, {"evals", h.evals}});
  }
  return Json{{"n", r.n},
              {"z", r.z},
              {"residual", r.residual},
              {"m_final", r.m_final},
              {"converged", r.converged},
              {"certificate",
               {{"m", r.certificate.m},
                {"base", to_json(r.certificate.string.base)},
                {"perm", r.certificate.string.perm},
                {"labels", r.certificate.labels}}},
              {"history", history}};
}

SolveReport solve_report_from_json(const Json& j) {
  SolveReport r;
  r.n = j.at("n").get<int>();
  r.z = j.at("z").get<RealPoint>();
  r.residual = j.at("residual").get<double>();
  r.m_final = j.at("m_final").get<int>();
  r.converged = j.at("converged").get<bool>();
  const Json& c = j.at("certificate");
  r.certificate.m = c.at("m").get<int>();
  r.certificate.string = string_from_json(c);
  r.certificate.labels = c.at("labels").get<std::vector<Label>>();
  for (const auto& h : j.at("history")) {
    r.history.push_back({h.at("m").get<int>(), h.at("residual").get<double>(), h.at("diameter").get<double>(),
                         h.at("evals").get<std::uint64_t>()});
  }
  return r;
}

Json to_json(const ParityReport& r) {
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    levels.push_back({{"k", l.k},
                      {"S1", l.s1},
                      {"S2", l.s2},
                      {"T1", l.t1},
                      {"T2", l.t2},
                      {"fully_labeled", l.fully_labeled},
                      {"identity_ok", l.identity_ok()},
                      {"odd_ok", l.odd_ok()}});
  }
  return Json{{"levels", levels}, {"ok", r.ok()}};
}

ParityReport parity_report_from_json(const Json& j) {
  ParityReport r;
  for (const auto& l : j.at("levels")) {
    LevelParity level;
    level.k = l.at("k").get<int>();
    level.s1 = l.at("S1").get<std::uint64_t>();
    level.s2 = l.at("S2").get<std::uint64_t>();
    level.t1 = l.at("T1").get<std::uint64_t>();
    level.t2 = l.at("T2").get<std::uint64_t>();
    level.fully_labeled = l.at("fully_labeled").get<std::uint64_t>();
    r.levels.push_back(level);
  }
  return r;
}

Json to_json(const PathTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"level", s.level},
                     {"base", to_json(s.string.base)},
                     {"perm", s.string.perm},
                     {"labels", s.labels},
                     {"entry", s.entry},
                     {"exit", s.exit}});
  }
  return Json{{"steps", steps},
              {"outcome",
               {{"kind", outcome_name(t.outcome)},
                {"level", t.end.k()},
                {"base", to_json(t.end.base)},
                {"perm", t.end.perm}}}};
}

PathTrace path_trace_from_json(const Json& j) {
  PathTrace t;
  for (const auto& s : j.at("steps")) {
    t.steps.push_back({s.at("level").get<int>(), string_from_json(s), s.at("labels").get<std::vector<Label>>(),
                       s.at("entry").get<int>(), s.at("exit").get<int>()});
  }
  const Json& o = j.at("outcome");
  const auto kind = o.at("kind").get<std::string>();
  if (kind != "found" && kind != "boundary") throw Error(Errc::InvalidArgument, "unknown trace outcome " + kind);
  t.outcome = kind == "found" ? Outcome::FoundFullyLabeled : Outcome::ReachedBoundaryString;
  t.end = string_from_json(o);
  return t;
}

Json to_json(const RunRecord& r) {
  return Json{{"command", r.command},
              {"arguments", r.arguments},
              {"timestamp", r.timestamp},
              {"version", r.version},
              {"payload", r.payload}};
}

RunRecord run_record_from_json(const Json& j) {
  return RunRecord{j.at("command").get<std::string>(), j.at("arguments").get<std::vector<std::string>>(),
                   j.at("timestamp").get<std::string>(), j.at("version").get<std::string>(), j.at("payload")};
}

std::string labels_csv(const Labeling& lab, std::uint64_t budget) {
  const GridSpec& spec = lab.spec();
  if (spec.point_count() > budget) {
    throw Error(Errc::BudgetExceeded, "grid has " + std::to_string(spec.point_count()) + " points, budget is " +
                                          std::to_string(budget));
  }
  std::ostringstream out;
  for (int i = 1; i <= spec.n; ++i) out << 'i' << i << ',';
  for (int i = 1; i <= spec.n; ++i) out << 'x' << i << ',';
  out << "label\n";

  GridPoint x = GridPoint::origin(spec.n);
  while (true) {
    for (int c : x.coords()) out << c << ',';
    for (double r : to_real(spec, x)) out << format_real(r) << ',';
    out << lab.label(x) << '\n';
    int axis = spec.n;
    while (axis >= 1 && x[axis] == spec.m) x[axis--] = 0;
    if (axis < 1) break;
    ++x[axis];
  }
  return out.str();
}

std::string history_csv(const SolveReport& r) {
  std::ostringstream out;
  out << "m,residual,diameter,evals\n";
  for (const auto& h : r.history) {
    out << h.m << ',' << format_real(h.residual) << ',' << format_real(h.diameter) << ',' << h.evals << '\n';
  }
  return out.str();
}

}  // namespace stringchase
