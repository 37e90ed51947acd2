#include "eolab/search.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "eolab/error.hpp"
#include "eolab/json.hpp"
#include "eolab/oracle.hpp"
#include "test_support.hpp"

namespace eolab {
namespace {

using testing::program_fixture;

EnumeratorProgram fixture_program(const char* name) { return load_program(program_fixture(name)); }

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"evens",     "odds_fast",     "identity",
                                              "countdown", "swapped_pairs", "staircase",
                                              "squares_slow"};
  return names;
}

TEST(CompareNative, SameProgram) {
  const auto evens = fixture_program("evens");
  const auto cmp = compare_native(evens, evens, 6, 100);
  EXPECT_TRUE(cmp.uniform);
  EXPECT_TRUE(cmp.a_leq_b);
  EXPECT_TRUE(cmp.b_leq_a);
  EXPECT_FALSE(cmp.a_leq_b_violation);
}

TEST(CompareNative, IdentityVersusSwappedPairs) {
  // swapped_pairs natively lists 1,0,3,2,...: pattern [1,0,3,2,...].
  const auto cmp = compare_native(fixture_program("evens"), fixture_program("swapped_pairs"), 4, 100);
  EXPECT_EQ(cmp.pattern_a, OrderPattern::identity(4));
  EXPECT_EQ(cmp.pattern_b, (OrderPattern{1, 0, 3, 2}));
  EXPECT_FALSE(cmp.a_leq_b);
  EXPECT_EQ(cmp.a_leq_b_violation, (IndexPair{0, 1}));
  EXPECT_TRUE(cmp.b_leq_a);
  EXPECT_FALSE(cmp.b_leq_a_violation);
  EXPECT_FALSE(cmp.uniform);
}

TEST(CompareNative, TruncationIsInsufficientEnumeration) {
  EXPECT_THROW(compare_native(fixture_program("odds_fast"), fixture_program("evens"), 60, 50),
               InsufficientEnumeration);
}

TEST(SearchEo, ReflexiveWitnessIsAllZero) {
  const auto evens = fixture_program("evens");
  for (std::size_t w = 1; w <= 3; ++w) {
    const auto report = search_eo_witness(evens, evens, {5, w, 100000, 100});
    ASSERT_EQ(report.status, SearchStatus::witness_found);
    EXPECT_EQ(report.witness->first.choices, std::vector<std::size_t>(5, 0));
    EXPECT_EQ(report.witness->second.choices, std::vector<std::size_t>(5, 0));
  }
}

TEST(SearchEo, WindowOneWithOpposedPatternsIsExhausted) {
  const std::vector<Natural> a{0, 1};
  const std::vector<Natural> b{1, 0};
  const auto eo = search_witness(a, b, 2, 1, 1000, Relation::eo_leq);
  EXPECT_EQ(eo.status, SearchStatus::space_exhausted);
  EXPECT_FALSE(eo.witness);
  const auto uni = search_witness(a, b, 2, 1, 1000, Relation::uniform);
  EXPECT_EQ(uni.status, SearchStatus::space_exhausted);
  // The reverse direction holds natively.
  EXPECT_EQ(search_witness(b, a, 2, 1, 1000, Relation::eo_leq).status, SearchStatus::witness_found);
}

TEST(SearchEo, FullWindowAlwaysFindsWitness) {
  for (const auto& a : fixture_names()) {
    for (const auto& b : fixture_names()) {
      const auto pa = fixture_program(a.c_str());
      const auto pb = fixture_program(b.c_str());
      for (std::size_t k = 1; k <= 5; ++k) {
        const SearchBudget budget{k, k, 1000000, 1000};
        const auto eo = search_eo_witness(pa, pb, budget);
        const auto uni = search_uniform_witness(pa, pb, budget);
        ASSERT_EQ(eo.status, SearchStatus::witness_found) << a << " " << b << " k=" << k;
        ASSERT_EQ(uni.status, SearchStatus::witness_found) << a << " " << b << " k=" << k;
      }
    }
  }
}

TEST(SearchEo, BudgetExceededIsDistinct) {
  const std::vector<Natural> a{0, 1, 2, 3, 4, 5};
  const std::vector<Natural> b{5, 4, 3, 2, 1, 0};
  const auto report = search_witness(a, b, 6, 2, 3, Relation::eo_leq);
  EXPECT_EQ(report.status, SearchStatus::budget_exceeded);
  EXPECT_EQ(report.nodes_explored, 3u);
  EXPECT_FALSE(report.witness);
}

TEST(SearchEo, AgreesWithBruteForceOnFixtures) {
  for (const auto& a : fixture_names()) {
    for (const auto& b : fixture_names()) {
      const auto na = native_prefix(fixture_program(a.c_str()), 6, 1000);
      const auto nb = native_prefix(fixture_program(b.c_str()), 6, 1000);
      for (std::size_t k = 1; k <= 6; ++k) {
        const std::vector<Natural> ha(na.begin(), na.begin() + static_cast<long>(k));
        const std::vector<Natural> hb(nb.begin(), nb.begin() + static_cast<long>(k));
        for (std::size_t w = 1; w <= 3; ++w) {
          for (const auto rel : {Relation::eo_leq, Relation::uniform}) {
            const auto fast = search_witness(ha, hb, k, w, 10000000, rel);
            const auto slow = oracle::brute_force_witness(ha, hb, k, w, rel);
            ASSERT_EQ(fast.status, slow.status) << a << " " << b << " k=" << k << " w=" << w;
            if (fast.status != SearchStatus::witness_found) continue;
            EXPECT_EQ(fast.witness->first.choices, slow.witness->first.choices);
            EXPECT_EQ(fast.witness->second.choices, slow.witness->second.choices);
            EXPECT_TRUE(validate_witness(fast, ha, hb));
          }
        }
      }
    }
  }
}

TEST(SearchEo, MonotoneInWindowAndUniformImpliesEo) {
  for (const auto& a : fixture_names()) {
    for (const auto& b : fixture_names()) {
      const auto pa = fixture_program(a.c_str());
      const auto pb = fixture_program(b.c_str());
      bool found_before = false;
      for (std::size_t w = 1; w <= 4; ++w) {
        const SearchBudget budget{6, w, 10000000, 1000};
        const auto eo = search_eo_witness(pa, pb, budget);
        const auto uni = search_uniform_witness(pa, pb, budget);
        const bool found = eo.status == SearchStatus::witness_found;
        if (found_before) EXPECT_TRUE(found) << a << " " << b << " w=" << w;
        found_before = found;
        if (uni.status == SearchStatus::witness_found) EXPECT_TRUE(found);
      }
    }
  }
}

TEST(SearchEo, DeterministicReports) {
  const auto a = fixture_program("countdown");
  const auto b = fixture_program("squares_slow");
  const SearchBudget budget{6, 3, 100000, 1000};
  EXPECT_EQ(to_json(search_eo_witness(a, b, budget)).dump(),
            to_json(search_eo_witness(a, b, budget)).dump());
  EXPECT_EQ(to_json(search_uniform_witness(a, b, budget)).dump(),
            to_json(search_uniform_witness(a, b, budget)).dump());
}

TEST(SearchEo, InsufficientEnumeration) {
  EXPECT_THROW(search_eo_witness(fixture_program("odds_fast"), fixture_program("evens"),
                                 {60, 2, 1000, 50}),
               InsufficientEnumeration);
}

TEST(SearchEo, BudgetValidation) {
  const auto evens = fixture_program("evens");
  EXPECT_THROW(search_eo_witness(evens, evens, {0, 1, 10, 10}), InvalidArgument);
  EXPECT_THROW(search_eo_witness(evens, evens, {1, 0, 10, 10}), InvalidArgument);
  EXPECT_THROW(search_eo_witness(evens, evens, {1, 1, 0, 10}), InvalidArgument);
}

TEST(ReportJson, Keys) {
  const auto evens = fixture_program("evens");
  const auto doc = to_json(search_eo_witness(evens, evens, {3, 2, 1000, 100}));
  for (const char* key : {"status", "relation", "k", "w", "choicesA", "choicesB", "prefixA",
                          "prefixB", "patternA", "patternB", "nodesExplored", "restriction"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
  EXPECT_EQ(doc["status"], "witness_found");
  EXPECT_EQ(doc["relation"], "eo");
  EXPECT_EQ(doc["prefixA"], nlohmann::json::array({0, 2, 4}));
  EXPECT_EQ(doc["patternB"], nlohmann::json::array({0, 1, 2}));

  const auto none = to_json(search_witness(std::vector<Natural>{0, 1}, std::vector<Natural>{1, 0},
                                           2, 1, 100, Relation::uniform));
  EXPECT_EQ(none["status"], "space_exhausted");
  EXPECT_TRUE(none["choicesA"].is_null());
  EXPECT_EQ(none["relation"], "uniform");
}

TEST(ValidateWitness, RejectsTamperedReport) {
  const std::vector<Natural> a{2, 0, 1};
  const std::vector<Natural> b{0, 1, 2};
  auto report = search_witness(b, a, 3, 2, 1000, Relation::uniform);
  ASSERT_EQ(report.status, SearchStatus::witness_found);
  EXPECT_TRUE(validate_witness(report, b, a));
  report.witness->second.choices = {0, 0, 0};
  EXPECT_FALSE(validate_witness(report, b, a));
}

}  // namespace
}  // namespace eolab
