#include <doctest.h>

#include <random>

#include "niep/constructors.hpp"
#include "niep/error.hpp"
#include "niep/necessary.hpp"
#include "niep/sufficient.hpp"
#include "support/oracles.hpp"

using namespace niep;

TEST_CASE("Suleimanova") {
  const auto ok = check_suleimanova(validate_spectrum({6, -1, -2, -3}));
  CHECK(ok.verdict == Outcome::Realizable);
  CHECK(ok.witness->lhs == doctest::Approx(6));
  CHECK(check_suleimanova(validate_spectrum({1, -2})).verdict == Outcome::Undetermined);
  CHECK(check_suleimanova(validate_spectrum({3, -1, -1, -1})).verdict == Outcome::Realizable);
  CHECK(check_suleimanova(validate_spectrum({3, 1, -1})).reason == "several_positive_values");
  CHECK(check_suleimanova(validate_spectrum({0, 0})).verdict == Outcome::Realizable);
  const std::vector<Complex> pair{1, {0, 0.5}, {0, -0.5}};
  CHECK(check_suleimanova(validate_spectrum(pair)).verdict == Outcome::Inapplicable);
}

TEST_CASE("Suleimanova-Perfect") {
  const auto l = validate_spectrum({6, 4, -1, -2, -3, -1, -1, -1});
  const Partition given{{{6, {-1, -2, -3}}, {4, {-1, -1, -1}}}};
  CHECK(check_suleimanova_perfect(l, given).decision.verdict == Outcome::Realizable);
  const auto found = check_suleimanova_perfect(l);
  CHECK(found.decision.verdict == Outcome::Realizable);
  REQUIRE(found.partition);
  CHECK(found.partition->blocks.size() == 2);

  CHECK(check_suleimanova_perfect(validate_spectrum({1, -1})).decision.verdict == Outcome::Realizable);
  CHECK(check_suleimanova_perfect(validate_spectrum({2, 2, -3, -3})).decision.reason == "lambda1_not_dominant");
  const auto tight = validate_spectrum({3, 1, -2.5, -1.5});
  CHECK(check_suleimanova_perfect(tight).decision.verdict == Outcome::Undetermined);
  const auto exhaustive = check_suleimanova_perfect(tight, std::nullopt, PartitionSearch::Exhaustive);
  CHECK(exhaustive.decision.verdict == Outcome::Undetermined);
  CHECK(exhaustive.decision.reason == "no_feasible_partition");

  const Partition wrong{{{6, {-1, -2}}, {4, {-1, -1, -1}}}};
  CHECK_THROWS_AS(check_suleimanova_perfect(l, wrong), Error);
}

TEST_CASE("Suleimanova-Perfect: exhaustive search finds what greedy misses") {
  // Greedy sends -3 to the 4 and -2.5 to the 3.5, leaving -1.5 and -1.5 for
  // budgets 1 and 1. Pairing -3 with 3.5 and -2.5, -1.5 with 4 works.
  const auto l = validate_spectrum({4, 3.5, -3, -2.5, -1.5});
  const auto greedy = check_suleimanova_perfect(l);
  const auto full = check_suleimanova_perfect(l, std::nullopt, PartitionSearch::Exhaustive);
  CHECK(full.decision.verdict == Outcome::Realizable);
  CHECK(full.examined >= greedy.examined);
}

TEST_CASE("Perfect 2") {
  const auto base = make_base_realization(SquareMatrix::from_rows({{3, 2}, {2, 3}}), {5, 1});
  const auto d = check_perfect2(base, {{-2, -1}, {-2, -1}});
  CHECK(d.verdict == Outcome::Realizable);
  CHECK(d.flags == std::vector<std::string>{"perfect2+"});
  CHECK(perfect2_union(base, {{-2, -1}, {-2, -1}}) == std::vector<double>{5, 1, -1, -1, -2, -2});

  const auto one = make_base_realization(SquareMatrix::from_rows({{6}}), {6});
  CHECK(check_perfect2(one, {{-1, -2, -3}}).verdict == Outcome::Realizable);
  CHECK(check_perfect2(base, {{-4}, {}}).verdict == Outcome::Undetermined);

  CHECK_THROWS_AS(check_perfect2(base, {{-1}}), Error);
  CHECK_THROWS_AS(make_base_realization(SquareMatrix::from_rows({{3, 2}, {2, 3}}), {5, 2}), Error);
}

TEST_CASE("property: Suleimanova implies a companion realization and the one-block partition") {
  std::mt19937_64 rng(606);
  for (int t = 0; t < 500; ++t) {
    const auto l = validate_spectrum(oracle::random_suleimanova(rng, 1 + t % 10));
    REQUIRE(check_suleimanova(l).verdict == Outcome::Realizable);
    CHECK(realize_companion(l).valid);
    auto values = l.real_values();
    Partition one{{{values.front(), std::vector<double>(values.begin() + 1, values.end())}}};
    CHECK(check_suleimanova_perfect(l, one).decision.verdict == Outcome::Realizable);
    CHECK(check_suleimanova_perfect(l).decision.verdict == Outcome::Realizable);
  }
}

TEST_CASE("property: sufficient verdicts never claim NotRealizable") {
  std::mt19937_64 rng(91);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int t = 0; t < 2000; ++t) {
    std::vector<double> v(1 + t % 7);
    for (double& x : v) x = u(rng);
    const auto l = validate_spectrum(std::span<const double>(v));
    CHECK(check_suleimanova(l).verdict != Outcome::NotRealizable);
    CHECK(check_suleimanova_perfect(l).decision.verdict != Outcome::NotRealizable);
  }
}
