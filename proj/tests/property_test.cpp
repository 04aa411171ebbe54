#include <gtest/gtest.h>

#include "property_checks.hpp"

namespace abicap {
namespace {

std::string join(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

}  // namespace

TEST(Properties, PracticeInvariants) {
  const auto failures = props::check_practice_invariants(1, 1000);
  EXPECT_TRUE(failures.empty()) << join(failures);
}

TEST(Properties, UpdateMonotonicity) {
  const auto failures = props::check_update_monotonicity(2, 1000);
  EXPECT_TRUE(failures.empty()) << join(failures);
}

TEST(Properties, KnowledgeNeverDrops) {
  const auto failures = props::check_knowledge_monotone(3, 50);
  EXPECT_TRUE(failures.empty()) << join(failures);
}

}  // namespace abicap
