#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "stringchase/builtins.hpp"
#include "stringchase/errors.hpp"
#include "stringchase/expr.hpp"
#include "stringchase/search.hpp"

using namespace stringchase;

namespace {

GridPoint P(std::vector<int> c) { return GridPoint(std::move(c)); }

Labeling reflect_m4() { return Labeling::induced(GridSpec::make(1, 4), builtin("reflect1d")); }
Labeling half_m2() { return Labeling::induced(GridSpec::make(2, 2), builtin("const-c", {2, {0.5, 0.5}})); }

}  // namespace

TEST_CASE("exhaustive oracle examples") {
  CHECK(exhaustive_fully_labeled(reflect_m4(), 1) == std::vector{StringK{P({1}), {1}}});
  CHECK(exhaustive_fully_labeled(half_m2(), 2) == std::vector{StringK{P({0, 0}), {1, 2}}});
  CHECK(exhaustive_fully_labeled(half_m2(), 0) == std::vector{origin_string(2)});
  CHECK(exhaustive_fully_labeled(reflect_m4(), 0) == std::vector{origin_string(1)});
}

TEST_CASE("oracle budget") {
  const auto lab = Labeling::induced(GridSpec::make(3, 50), builtin("avg-c", {3, {0.5}}));
  try {
    exhaustive_fully_labeled(lab, 3, 1000);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BudgetExceeded);
    CHECK(std::string(e.what()).find("750000") != std::string::npos);
  }
  CHECK_THROWS_AS(parity_check(lab, 1000), Error);
}

TEST_CASE("parity tallies for reflect1d at m = 4") {
  const auto report = parity_check(reflect_m4());
  REQUIRE(report.levels.size() == 1);
  const auto& l = report.levels[0];
  CHECK(l.k == 1);
  CHECK(l.s1 == 1);
  CHECK(l.s2 == 1);
  CHECK(l.t1 == 1);
  CHECK(l.t2 == 1);
  CHECK(l.identity_ok());
  CHECK(l.odd_ok());
  CHECK(report.ok());
}

TEST_CASE("parity tallies for the constant map at m = 2") {
  const auto report = parity_check(half_m2());
  REQUIRE(report.levels.size() == 2);
  CHECK(report.levels[1].s1 == 1);
  CHECK(report.levels[1].fully_labeled == 1);
  CHECK(report.ok());
}

TEST_CASE("a constant-0 labeling is flagged") {
  const auto lab = Labeling::from_rule(GridSpec::make(2, 3), [](const GridPoint&) { return 0; }, "zero");
  const auto report = parity_check(lab);
  CHECK_FALSE(report.ok());
  for (const auto& l : report.levels) {
    CHECK(l.s1 == 0);
    CHECK_FALSE(l.odd_ok());
  }
}

TEST_CASE("T1 equals the number of lower-level solutions") {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 4; ++m) {
      const auto lab = Labeling::induced(GridSpec::make(n, m), to_map_fn(parse_map(oracle::random_polynomial_map(rng, n), n)));
      const auto report = parity_check(lab);
      std::uint64_t lower = 1;  // <0>
      for (const auto& l : report.levels) {
        CHECK(l.t1 == lower);
        CHECK(l.fully_labeled == exhaustive_fully_labeled(lab, l.k).size());
        lower = l.fully_labeled;
      }
    }
  }
}

TEST_CASE("path_follow, constant map: straight lifts") {
  const auto lab = half_m2();
  const auto result = path_follow(lab);
  CHECK(result.found == StringK{P({0, 0}), {1, 2}});
  const auto& steps = result.trace.steps;
  REQUIRE(steps.size() == 3);
  CHECK(steps[0].level == 0);
  CHECK(vertices(steps[1].string) == std::vector{P({0, 0}), P({1, 0})});
  CHECK(steps[1].labels == std::vector{0, 1});
  CHECK(steps[2].labels == std::vector{0, 1, 2});
  CHECK(steps[2].entry == 2);
  CHECK(steps[2].exit == kLevelMove);
  CHECK(check_trace(lab.spec(), result.trace).empty());
}

TEST_CASE("path_follow, reflect1d: one sideways pivot") {
  const auto lab = reflect_m4();
  const auto result = path_follow(lab);
  CHECK(result.found == StringK{P({1}), {1}});
  const auto& steps = result.trace.steps;
  REQUIRE(steps.size() == 3);
  CHECK(steps[1].string == StringK{P({0}), {1}});
  CHECK(steps[1].labels == std::vector{0, 0});
  CHECK(steps[1].entry == 1);
  CHECK(steps[1].exit == 0);
  CHECK(steps[2].string == StringK{P({1}), {1}});
  CHECK(steps[2].entry == 1);
  CHECK(check_trace(lab.spec(), result.trace).empty());
}

TEST_CASE("path_follow at m = 1 is forced by the corners") {
  for (const char* text : {"x1", "1 - x1", "0.3", "x1^2"}) {
    const auto lab = Labeling::induced(GridSpec::make(1, 1), to_map_fn(parse_map(text, 1)));
    const auto result = path_follow(lab);
    CHECK(result.found == StringK{P({0}), {1}});
    CHECK(result.trace.steps.size() == 2);
  }
}

namespace {

// Uniformly random labeling among the labels (B1)/(B2) allow at each point.
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

}  // namespace

TEST_CASE("path_follow on random Brouwer labelings, including downward doors") {
  std::mt19937_64 rng(17);
  int descents = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const int m = 2 + static_cast<int>(rng() % 4);
    const auto lab = random_brouwer_labeling(GridSpec::make(n, m), rng());
    const auto result = path_follow(lab);
    CHECK(check_trace(lab.spec(), result.trace).empty());
    const auto all = exhaustive_fully_labeled(lab, n);
    CHECK(std::binary_search(all.begin(), all.end(), result.found));
    for (std::size_t i = 1; i < result.trace.steps.size(); ++i) {
      if (result.trace.steps[i].level < result.trace.steps[i - 1].level) ++descents;
    }
  }
  // Downward doors do occur; the walk must come back up through them.
  CHECK(descents > 0);
}

TEST_CASE("path_follow on random induced labelings") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int m = 1 + static_cast<int>(rng() % 5);
    const auto lab = Labeling::induced(GridSpec::make(n, m), to_map_fn(parse_map(oracle::random_general_map(rng, n), n)));
    const auto result = path_follow(lab);
    CHECK(check_trace(lab.spec(), result.trace).empty());
    const auto all = exhaustive_fully_labeled(lab, n);
    CHECK(std::binary_search(all.begin(), all.end(), result.found));
  }
}

TEST_CASE("path_follow is deterministic") {
  const auto a = path_follow(Labeling::induced(GridSpec::make(2, 16), builtin("rot90")));
  const auto b = path_follow(Labeling::induced(GridSpec::make(2, 16), builtin("rot90")));
  REQUIRE(a.trace.steps.size() == b.trace.steps.size());
  for (std::size_t i = 0; i < a.trace.steps.size(); ++i) {
    CHECK(a.trace.steps[i].string == b.trace.steps[i].string);
    CHECK(a.trace.steps[i].entry == b.trace.steps[i].entry);
    CHECK(a.trace.steps[i].exit == b.trace.steps[i].exit);
  }
}

TEST_CASE("path_follow rejects labelings that break the Brouwer conditions") {
  const auto lab = Labeling::from_rule(GridSpec::make(1, 3), [](const GridPoint&) { return 0; }, "zero");
  try {
    path_follow(lab);
    FAIL("expected LabelingInvalid");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LabelingInvalid);
  }
}

TEST_CASE("walk_level stops at a lower-level door") {
  // Labels 0 1 0 0 on m = 3: starting from <1,2> heading through its face {1}
  // leads back to the door {0}.
  const auto lab = Labeling::from_rule(GridSpec::make(1, 3), [](const GridPoint& p) { return p[1] == 3 ? 1 : (p[1] == 1 ? 1 : 0); }, "wiggle");
  // <0,1> has labels {0,1}: fully labeled, entered from above, exits through {0}.
  const auto trace = walk_level(lab, StringK{P({0}), {1}}, kLevelMove);
  CHECK(trace.outcome == Outcome::ReachedBoundaryString);
  CHECK(trace.end == origin_string(1));
  REQUIRE(trace.steps.size() == 1);
  CHECK(trace.steps[0].exit == 1);
}

TEST_CASE("check_trace catches broken traces") {
  const auto lab = reflect_m4();
  auto trace = path_follow(lab).trace;
  SUBCASE("repeat") {
    trace.steps.push_back(trace.steps.back());
    CHECK_FALSE(check_trace(lab.spec(), trace).empty());
  }
  SUBCASE("non-adjacent") {
    trace.steps[2].string = StringK{P({3}), {1}};
    trace.end = trace.steps[2].string;
    CHECK_FALSE(check_trace(lab.spec(), trace).empty());
  }
  SUBCASE("wrong labels") {
    trace.steps[1].labels = {1, 1};
    CHECK_FALSE(check_trace(lab.spec(), trace).empty());
  }
}
