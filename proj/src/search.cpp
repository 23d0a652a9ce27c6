#include "stringchase/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <unordered_set>

#include "stringchase/errors.hpp"

namespace stringchase {

namespace {

void require_budget(const GridSpec& spec, int k, std::uint64_t budget) {
  const std::uint64_t need = string_count(spec, k);
  if (need > budget) {
    throw Error(Errc::BudgetExceeded, "level " + std::to_string(k) + " has " + std::to_string(need) +
                                          " strings, budget is " + std::to_string(budget));
  }
}

std::string describe(const StringK& s) {
  std::string out = "<base=(";
  for (int i = 1; i <= s.base.dim(); ++i) out += (i > 1 ? "," : "") + std::to_string(s.base[i]);
  out += "), perm=(";
  for (std::size_t i = 0; i < s.perm.size(); ++i) out += (i > 0 ? "," : "") + std::to_string(s.perm[i]);
  return out + ")>";
}

// Index, in the string produced by pivot(b, h), of the vertex that replaced x_h.
int entry_after_pivot(int k, int h) {
  if (h == 0) return k;
  if (h == k) return 0;
  return h;
}

StringK drop_last_axis(const StringK& b) {
  StringK out = b;
  out.perm.pop_back();
  return out;
}

class Walker {
 public:
  explicit Walker(const Labeling& lab) : lab_(lab), spec_(lab.spec()), visits_(spec_.n + 1, 0), seen_(spec_.n + 1) {}

  std::vector<Label> checked_labels(const StringK& b) {
    const int k = b.k();
    std::vector<Label> labels = labels_of(lab_, b);
    const auto verts = vertices(b);
    for (std::size_t j = 0; j < verts.size(); ++j) {
      auto bad = check_point(spec_, verts[j], labels[j]);
      if (!bad && labels[j] > k) bad = Violation{verts[j], labels[j], Condition::Range, 0};
      if (bad) {
        throw Error(Errc::LabelingInvalid, "label " + std::to_string(labels[j]) + " at vertex " + std::to_string(j) +
                                               " of " + describe(b) + " breaks the Brouwer conditions");
      }
    }
    return labels;
  }

  void visit(int k, const StringK& b) {
    if (++visits_[static_cast<std::size_t>(k)] > string_count(spec_, k) + 1) {
      throw Error(Errc::StepLimitExceeded, "level " + std::to_string(k) + " exceeded its step limit");
    }
    if (!seen_[static_cast<std::size_t>(k)].insert(b).second) {
      throw Error(Errc::StepLimitExceeded, "string " + describe(b) + " visited twice at level " + std::to_string(k));
    }
  }

  void walk(PathTrace& trace, StringK b, int entry) {
    const int k = b.k();
    if (k < 1) throw Error(Errc::InvalidArgument, "walks start at level 1 or above");
    while (true) {
      visit(k, b);
      std::vector<Label> labels = checked_labels(b);
      const FaceCount faces = fully_labeled_faces(labels);
      int exit = kLevelMove;
      if (entry == kLevelMove) {
        if (faces.count != 1) {
          throw Error(Errc::InvalidArgument, describe(b) + " entered from above is not fully labeled");
        }
        exit = faces.omitted.front();
      } else {
        if (std::find(faces.omitted.begin(), faces.omitted.end(), entry) == faces.omitted.end()) {
          throw Error(Errc::InvalidArgument, "entry face " + std::to_string(entry) + " of " + describe(b) +
                                                 " is not fully labeled");
        }
        if (faces.count == 1) {
          trace.steps.push_back({k, b, std::move(labels), entry, kLevelMove});
          trace.outcome = Outcome::FoundFullyLabeled;
          trace.end = b;
          return;
        }
        exit = faces.omitted[0] == entry ? faces.omitted[1] : faces.omitted[0];
      }
      trace.steps.push_back({k, b, std::move(labels), entry, exit});

      if (is_lower_door(b, exit)) {
        trace.outcome = Outcome::ReachedBoundaryString;
        trace.end = drop_last_axis(b);
        return;
      }
      auto next = try_pivot(spec_, b, exit);
      if (!next) {
        throw Error(Errc::LabelingInvalid, "fully-labeled face " + std::to_string(exit) + " of " + describe(b) +
                                               " lies on the grid boundary");
      }
      entry = entry_after_pivot(k, exit);
      b = std::move(*next);
    }
  }

 private:
  const Labeling& lab_;
  const GridSpec& spec_;
  std::vector<std::uint64_t> visits_;
  std::vector<std::unordered_set<StringK, StringKHash>> seen_;
};

}  // namespace

std::vector<StringK> exhaustive_fully_labeled(const Labeling& lab, int k, std::uint64_t budget) {
  const GridSpec& spec = lab.spec();
  require_budget(spec, k, budget);
  std::vector<StringK> out;
  for_each_string(spec, k, [&](const StringK& s) {
    if (is_fully_labeled(lab, s)) out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool ParityReport::ok() const {
  return std::all_of(levels.begin(), levels.end(),
                     [](const LevelParity& l) { return l.identity_ok() && l.odd_ok(); });
}

ParityReport parity_check(const Labeling& lab, std::uint64_t budget) {
  const GridSpec& spec = lab.spec();
  require_budget(spec, spec.n, budget);
  ParityReport report;
  for (int k = 1; k <= spec.n; ++k) {
    LevelParity level;
    level.k = k;
    // Faces keyed by their sorted vertex sets.
    std::map<std::vector<GridPoint>, std::uint64_t> containing;
    for_each_string(spec, k, [&](const StringK& s) {
      const std::vector<Label> labels = labels_of(lab, s);
      if (is_fully_labeled(labels)) ++level.fully_labeled;
      const FaceCount faces = fully_labeled_faces(labels);
      if (faces.count == 1) ++level.s1;
      if (faces.count == 2) ++level.s2;
      for (int h : faces.omitted) {
        std::vector<GridPoint> face = vertices(Face{s, h});
        std::sort(face.begin(), face.end());
        ++containing[std::move(face)];
      }
    });
    for (const auto& [face, count] : containing) {
      if (count == 1) ++level.t1;
      else if (count == 2) ++level.t2;
      else ++level.crowded_faces;
    }
    report.levels.push_back(level);
  }
  return report;
}

PathTrace walk_level(const Labeling& lab, const StringK& start, int entry) {
  Walker walker(lab);
  PathTrace trace;
  walker.walk(trace, start, entry);
  return trace;
}

PathResult path_follow(const Labeling& lab) {
  const GridSpec& spec = lab.spec();
  Walker walker(lab);
  PathTrace trace;

  StringK seed = origin_string(spec.n);
  walker.visit(0, seed);
  std::vector<Label> seed_labels = walker.checked_labels(seed);
  trace.steps.push_back({0, seed, std::move(seed_labels), kLevelMove, kLevelMove});

  // Each iteration walks one level: up through lift() after a fully-labeled
  // string, down into the (k-1)-string door otherwise.
  StringK b = lift(spec, seed);
  int entry = 1;
  while (true) {
    const int k = b.k();
    PathTrace leg;
    walker.walk(leg, std::move(b), entry);
    trace.steps.insert(trace.steps.end(), std::make_move_iterator(leg.steps.begin()),
                       std::make_move_iterator(leg.steps.end()));
    if (leg.outcome == Outcome::FoundFullyLabeled) {
      if (k == spec.n) {
        trace.outcome = Outcome::FoundFullyLabeled;
        trace.end = leg.end;
        return PathResult{leg.end, std::move(trace)};
      }
      b = lift(spec, leg.end);
      entry = k + 1;
    } else {
      if (k == 1) {
        throw Error(Errc::StepLimitExceeded, "path returned to the seed <0>");
      }
      b = leg.end;
      entry = kLevelMove;
    }
  }
}

std::vector<std::string> check_trace(const GridSpec& spec, const PathTrace& trace) {
  std::vector<std::string> problems;
  auto at = [](std::size_t i) { return "step " + std::to_string(i) + ": "; };
  std::set<std::pair<int, StringK>> seen;

  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& step = trace.steps[i];
    if (step.string.k() != step.level || !is_valid(spec, step.string)) {
      problems.push_back(at(i) + "not a valid " + std::to_string(step.level) + "-string");
      continue;
    }
    if (step.labels.size() != static_cast<std::size_t>(step.level) + 1) {
      problems.push_back(at(i) + "label count does not match the string");
      continue;
    }
    if (!seen.emplace(step.level, step.string).second) problems.push_back(at(i) + "string repeats");
    if (i == 0) continue;

    const TraceStep& prev = trace.steps[i - 1];
    if (std::abs(prev.level - step.level) > 1) {
      problems.push_back(at(i) + "level jumps by more than one");
      continue;
    }
    const int k = std::max(prev.level, step.level);
    const auto va = vertices(prev.string);
    const auto vb = vertices(step.string);
    std::vector<Label> shared_labels;
    for (std::size_t a = 0; a < va.size(); ++a) {
      for (std::size_t b = 0; b < vb.size(); ++b) {
        if (va[a] == vb[b]) shared_labels.push_back(prev.labels[a]);
      }
    }
    if (static_cast<int>(shared_labels.size()) != k) {
      problems.push_back(at(i) + "shares " + std::to_string(shared_labels.size()) + " vertices with the previous step, expected " +
                         std::to_string(k));
      continue;
    }
    std::sort(shared_labels.begin(), shared_labels.end());
    for (int v = 0; v < k; ++v) {
      if (shared_labels[static_cast<std::size_t>(v)] != v) {
        problems.push_back(at(i) + "shared face is not " + std::to_string(k - 1) + "-fully labeled");
        break;
      }
    }
  }
  if (trace.outcome == Outcome::FoundFullyLabeled && !trace.steps.empty()) {
    const TraceStep& last = trace.steps.back();
    if (!is_fully_labeled(last.labels)) problems.push_back("final step is not fully labeled");
    if (last.string != trace.end) problems.push_back("final step does not match the outcome");
  }
  return problems;
}

}  // namespace stringchase
