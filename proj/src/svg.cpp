#include "stringchase/svg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "stringchase/errors.hpp"

namespace stringchase {

namespace {

constexpr double kMargin = 24.0;

const char* level_colour(int level) {
  switch (level) {
    case 0: return "#555555";
    case 1: return "#1f77b4";
    default: return "#2ca02c";
  }
}

}  // namespace

std::string render_trace_svg(const GridSpec& spec, const PathTrace& trace) {
  if (spec.n != 2) {
    throw Error(Errc::SvgUnsupportedDimension, "SVG output needs n = 2, got n = " + std::to_string(spec.n));
  }
  const double cell = std::max(8.0, 480.0 / spec.m);
  const double side = cell * spec.m;
  auto px = [&](const GridPoint& p) { return kMargin + cell * p[1]; };
  auto py = [&](const GridPoint& p) { return kMargin + side - cell * p[2]; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side + 2 * kMargin << "\" height=\""
      << side + 2 * kMargin << "\">\n";
  out << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (int i = 0; i <= spec.m; ++i) {
    const double t = kMargin + cell * i;
    out << "<line x1=\"" << t << "\" y1=\"" << kMargin << "\" x2=\"" << t << "\" y2=\"" << kMargin + side << "\"/>\n";
    out << "<line x1=\"" << kMargin << "\" y1=\"" << t << "\" x2=\"" << kMargin + side << "\" y2=\"" << t << "\"/>\n";
  }
  out << "</g>\n";

  std::map<GridPoint, Label> labelled;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& step = trace.steps[i];
    const bool certificate = i + 1 == trace.steps.size() && trace.outcome == Outcome::FoundFullyLabeled;
    const auto verts = vertices(step.string);
    out << "<polyline fill=\"none\" stroke=\"" << (certificate ? "#d62728" : level_colour(step.level))
        << "\" stroke-width=\"" << (certificate ? 4 : 2) << "\" data-step=\"" << i << "\" data-level=\""
        << step.level << "\" points=\"";
    for (std::size_t v = 0; v < verts.size(); ++v) {
      out << (v > 0 ? " " : "") << px(verts[v]) << ',' << py(verts[v]);
      labelled.emplace(verts[v], step.labels[v]);
    }
    out << "\"/>\n";
  }
  out << "<g font-family=\"monospace\" font-size=\"12\">\n";
  for (const auto& [p, label] : labelled) {
    out << "<text x=\"" << px(p) + 3 << "\" y=\"" << py(p) - 3 << "\">" << label << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace stringchase
