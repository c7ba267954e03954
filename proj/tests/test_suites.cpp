#include <gtest/gtest.h>

#include "firstfall/suites.hpp"
#include "firstfall/syzygy.hpp"
#include "helpers.hpp"

using namespace firstfall;

namespace {

SuiteOptions small(int trials, int bound) {
  SuiteOptions opt;
  opt.trials = trials;
  opt.bound = bound;
  opt.seed = 3;
  return opt;
}

}  // namespace

TEST(Suites, EveryNamedSuiteRunsClean) {
  for (const auto& name : suite_names()) {
    const auto res = run_suite(name, small(6, name == "prop3" ? 6 : 8));
    EXPECT_EQ(res.trials, 6) << name;
    EXPECT_TRUE(res.passed()) << name << "\n" << res.csv();
  }
}

TEST(Suites, RecordsAreSeedOrderedAndReproducible) {
  const auto a = run_suite("thm8", small(10, 8));
  const auto b = run_suite("thm8", small(10, 8));
  EXPECT_EQ(a.csv(), b.csv());
  for (std::size_t i = 1; i < a.records.size(); ++i) EXPECT_LT(a.records[i - 1].seed, a.records[i].seed);
}

TEST(Suites, ParallelJobsMatchSerial) {
  auto opt = small(8, 8);
  const auto serial = run_suite("diem", opt);
  opt.jobs = 4;
  EXPECT_EQ(run_suite("diem", opt).csv(), serial.csv());
}

TEST(Suites, UnknownSuiteRejected) { EXPECT_THROW(run_suite("nope", small(1, 4)), Error); }

TEST(Suites, PlantedDependencyFallsOneAboveFirstGenerator) {
  const auto r = RingSpec::standard(firstfall::testing::kP, 5);
  const auto sys = planted_dependency_system(r, {MultiDegree{2}, MultiDegree{2}, MultiDegree{3}}, 4);
  EXPECT_EQ(dff_prime(sys, 8), DegreeAnswer::found(3, 8));
}
