#include <gtest/gtest.h>

#include "suites.hpp"

// Smaller runs of the acceptance suites so a unit-test failure names the
// property directly.

TEST(Properties, AngleDiskDuality) {
  const prop::Outcome o = suites::angle_disk_duality(1000, 1);
  EXPECT_TRUE(o.ok()) << prop::describe(o);
}

TEST(Properties, LensMonotonicity) {
  const prop::Outcome o = suites::lens_monotonicity(1000, 40, 2);
  EXPECT_TRUE(o.ok()) << prop::describe(o);
}

TEST(Properties, EdgeRemoval) {
  const prop::Outcome o = suites::edge_removal(500, 3);
  EXPECT_TRUE(o.ok()) << prop::describe(o);
}

TEST(Properties, TypeOneRigidMotion) {
  const prop::Outcome o = suites::type1_rotation(500, 4);
  EXPECT_TRUE(o.ok()) << prop::describe(o);
}

TEST(Properties, AscentTrace) {
  std::size_t states = 0;
  const prop::Outcome o = suites::ascent_trace(300, 5, &states);
  EXPECT_TRUE(o.ok()) << prop::describe(o);
  EXPECT_GT(states, 300u);
}

TEST(Properties, RunnerReportsFirstFailure) {
  const prop::Outcome o = prop::check(10, 9, [](std::mt19937_64&, std::size_t i) -> std::string {
    return i >= 6 ? "boom" : "";
  });
  EXPECT_EQ(o.failures, 4u);
  EXPECT_EQ(o.first_failing_case, 6u);
  EXPECT_EQ(o.first_message, "boom");
}
