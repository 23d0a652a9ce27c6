#pragma once

// JSON and CSV forms of reports. Floats are written with 17 significant
// digits so output is byte-stable and round-trips exactly.

#include <string>
#include <vector>

#include <json.hpp>

#include "stringchase/labeling.hpp"
#include "stringchase/search.hpp"
#include "stringchase/solver.hpp"

namespace stringchase {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

Json to_json(const SolveReport& r);
Json to_json(const ParityReport& r);
Json to_json(const PathTrace& t);

SolveReport solve_report_from_json(const Json& j);
ParityReport parity_report_from_json(const Json& j);
PathTrace path_trace_from_json(const Json& j);

struct RunRecord {
  std::string command;
  std::vector<std::string> arguments;
  std::string timestamp;  ///< ISO 8601, UTC
  std::string version = kVersion;
  Json payload;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

Json to_json(const RunRecord& r);
RunRecord run_record_from_json(const Json& j);

/// Serializes with `indent` spaces per level (negative = compact) and
/// "%.17g" for floating-point values.
std::string dump(const Json& j, int indent = 2);

/// Every grid point in lexicographic order: i1..in, x1..xn, label.
/// Throws BudgetExceeded when (m+1)^n > budget.
std::string labels_csv(const Labeling& lab, std::uint64_t budget);

/// m, residual, diameter, evals per resolution.
std::string history_csv(const SolveReport& r);

std::string format_real(double v);

}  // namespace stringchase
