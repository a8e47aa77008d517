#include <algorithm>
#include <string>

#include <gtest/gtest.h>

#include "gpbc/validation.hpp"

namespace gpbc {
namespace {

using namespace validation;

TEST(ValidationTest, RangeChecks) {
  EXPECT_THROW(validate_betweenness(10, 11), DomainError);
  EXPECT_THROW(validate_betweenness(12, 101), DomainError);
  EXPECT_THROW(validate_sigma(4, 10), DomainError);
  EXPECT_THROW(validate_sigma(10, 9), DomainError);
  EXPECT_THROW(validate_distance_diameter(5, 201), DomainError);
  EXPECT_THROW(run_identity_suite(5, 61), DomainError);
}

TEST(ValidationTest, SigmaCleanAndCounted) {
  const auto single = validate_sigma(13, 13);
  EXPECT_TRUE(single.discrepancies.empty());
  // Classes per n: OO and II have r = 1..floor(n/2), OI has r = 0..floor(n/2).
  EXPECT_EQ(single.checks_run, 6u + 6u + 7u);
  const auto five = validate_sigma(5, 5);
  EXPECT_EQ(five.checks_run, 2u + 2u + 3u);
  EXPECT_EQ(validate_sigma(5, 60).exit_status(), 0);
}

TEST(ValidationTest, DistanceFindings) {
  const auto report = validate_distance_diameter(5, 60);
  EXPECT_EQ(report.exit_status(), 2);
  EXPECT_FALSE(report.has_identity_failures());
  // One InnerInner class per odd n is shorter than stated; diameters all agree.
  std::size_t odd_n = 0;
  for (std::size_t n = 5; n <= 60; n += 2) ++odd_n;
  ASSERT_EQ(report.discrepancies.size(), odd_n);
  for (const auto& d : report.discrepancies) {
    EXPECT_EQ(d.quantity, Quantity::Distance);
    EXPECT_EQ(d.n % 2, 1u);
    EXPECT_EQ(d.argument.rfind("InnerInner r=", 0), 0u);
    EXPECT_GT(d.formula_value, d.oracle_value) << d.n << " " << d.argument;
  }
  const auto& first = report.discrepancies.front();
  EXPECT_EQ(first.n, 5u);
  EXPECT_EQ(first.argument, "InnerInner r=1");
  EXPECT_EQ(first.formula_value, Rational(3));
  EXPECT_EQ(first.oracle_value, Rational(2));
  ASSERT_EQ(report.notes.size(), 1u);
}

TEST(ValidationTest, DistanceSpotChecks) {
  const auto twenty = validate_distance_diameter(20, 20);
  EXPECT_TRUE(twenty.discrepancies.empty());
  const auto diam = validate_distance_diameter(8, 100);
  EXPECT_TRUE(std::none_of(diam.discrepancies.begin(), diam.discrepancies.end(),
                           [](const Discrepancy& d) { return d.quantity == Quantity::Diameter; }));
  // n = 5..7: diameter is inapplicable and not counted.
  const auto low = validate_distance_diameter(5, 7);
  const auto with8 = validate_distance_diameter(5, 8);
  const auto only8 = validate_distance_diameter(8, 8);
  EXPECT_EQ(with8.checks_run, low.checks_run + only8.checks_run);
  EXPECT_EQ(only8.checks_run, 4u + 4u + 5u + 1u);
}

TEST(ValidationTest, BetweennessClean) {
  const auto report = validate_betweenness(12, 27);
  EXPECT_EQ(report.exit_status(), 0);
  EXPECT_TRUE(report.discrepancies.empty());
  EXPECT_GT(report.checks_run, 0u);
}

TEST(ValidationTest, IdentitiesClean) {
  const auto report = run_identity_suite(5, 20);
  EXPECT_EQ(report.exit_status(), 0);
  EXPECT_GT(report.checks_run, 0u);
}

TEST(ValidationTest, ClassicClean) {
  const auto report = validate_classic(2, 30);
  EXPECT_EQ(report.exit_status(), 0);
  EXPECT_GT(report.checks_run, 0u);
}

TEST(ValidationTest, ExitStatusCategories) {
  DiscrepancyReport r;
  EXPECT_EQ(r.exit_status(), 0);
  r.discrepancies.push_back({Quantity::Sigma, Category::Formula, 12, "x", Rational(1), Rational(2), "a"});
  EXPECT_EQ(r.exit_status(), 2);
  r.discrepancies.push_back({Quantity::HalfSum, Category::Identity, 12, "x", Rational(1), Rational(2), "a"});
  EXPECT_EQ(r.exit_status(), 1);
}

TEST(ValidationTest, MergeOrdersByN) {
  auto a = validate_distance_diameter(9, 9);
  auto b = validate_distance_diameter(5, 5);
  a.merge(std::move(b));
  ASSERT_EQ(a.discrepancies.size(), 2u);
  EXPECT_EQ(a.discrepancies[0].n, 5u);
  EXPECT_EQ(a.discrepancies[1].n, 9u);
  EXPECT_EQ(a.ranges.size(), 2u);
}

TEST(ValidationTest, DeterministicJson) {
  const auto a = to_json(validate_distance_diameter(5, 30), false).dump();
  const auto b = to_json(validate_distance_diameter(5, 30), false).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("elapsed_ms"), std::string::npos);
  const auto doc = to_json(validate_distance_diameter(5, 5), true);
  EXPECT_TRUE(doc.contains("elapsed_ms"));
  const auto& d = doc["discrepancies"][0];
  EXPECT_EQ(d["quantity"], "Distance");
  EXPECT_EQ(d["n"], 5);
  EXPECT_EQ(d["argument"], "InnerInner r=1");
  EXPECT_TRUE(d.contains("paper_anchor"));
  EXPECT_EQ(d["category"], "formula");
}

}  // namespace
}  // namespace gpbc
