#include <doctest.h>

#include <cmath>
#include <random>

#include "niep/deciders.hpp"
#include "niep/error.hpp"
#include "niep/necessary.hpp"
#include "support/oracles.hpp"

using namespace niep;

namespace {

Outcome verdict(Decision d) { return d.verdict; }

Spectrum spec(std::vector<Complex> v) { return validate_spectrum(std::span<const Complex>(v)); }

std::vector<Complex> sweep(double t) { return {3 + t, 3 - t, -2, -2, -2}; }

}  // namespace

TEST_CASE("n = 3") {
  const double r3 = std::sqrt(3.0);
  CHECK(verdict(decide_niep_n3(spec({3, {0, -r3}, {0, r3}}))) == Outcome::Realizable);
  const auto out = decide_niep_n3(spec({1, {1, 0.1}, {1, -0.1}}));
  CHECK(out.verdict == Outcome::NotRealizable);
  CHECK(out.reason == "pi3");
  CHECK(verdict(decide_niep_n3(spec({2, -1, -1}))) == Outcome::Realizable);
  CHECK(verdict(decide_niep_n3(spec({1, -2, 0}))) == Outcome::NotRealizable);
  CHECK(verdict(decide_niep_n3(spec({-1, {0.2, 0.1}, {0.2, -0.1}}))) == Outcome::NotRealizable);
  CHECK_THROWS_AS(decide_niep_n3(spec({1, 1})), Error);
}

TEST_CASE("real lists up to order 4") {
  CHECK(verdict(decide_rniep_n_le4(spec({3, 3, -2, -2}))) == Outcome::Realizable);
  const auto trace = decide_rniep_n_le4(spec({2, -1, -1, -1}));
  CHECK(trace.verdict == Outcome::NotRealizable);
  CHECK(trace.reason == "trace");
  CHECK(verdict(decide_rniep_n_le4(spec({-1}))) == Outcome::NotRealizable);
  CHECK(verdict(decide_rniep_n_le4(spec({1, {0, 1}, {0, -1}}))) == Outcome::Inapplicable);
  CHECK_THROWS_AS(decide_rniep_n_le4(spec({1, 1, 1, 1, 1})), Error);
}

TEST_CASE("trace zero, n = 4") {
  CHECK(verdict(decide_trace0_n4(spec({3, -1, -1, -1}))) == Outcome::Realizable);
  CHECK(verdict(decide_trace0_n4(spec({1, 1, -1, -1}))) == Outcome::Realizable);
  CHECK(verdict(decide_trace0_n4(spec({1, {0, 1}, {0, -1}, -1}))) == Outcome::Realizable);
  CHECK(verdict(decide_trace0_n4(spec({3, -1, -1, 0}))) == Outcome::Inapplicable);
  const auto d = decide_trace0_n4(spec({1, 1, 1, -3}));
  CHECK(d.verdict == Outcome::NotRealizable);
  CHECK(d.reason == "s3_nonnegative");
  CHECK(d.witness->rhs == doctest::Approx(-24));
  // s_2 = 2, s_3 = -6, s_4 = -6.
  const auto pair = decide_trace0_n4(spec({-1, -1, {1, 1}, {1, -1}}));
  CHECK(pair.verdict == Outcome::NotRealizable);
}

TEST_CASE("trace zero, n = 5, lists the displayed clauses alone would accept") {
  // s_5 < 0 while every other clause holds.
  const auto neg = decide_trace0_n5(spec({0.83404556634073623, -2.5084050486642626, {-0.57180310255860922, -2.5671549846138317},
                                          {-0.57180310255860922, 2.5671549846138317}, 2.8179656874407448}));
  CHECK(neg.verdict == Outcome::NotRealizable);
  CHECK(neg.reason == "s5_nonnegative");
  const auto real = decide_trace0_sniep_n5(spec({2.5, 1.75, -0.875, -0.625, -2.75}));
  CHECK(real.verdict == Outcome::NotRealizable);
  CHECK(real.reason == "perron");
  CHECK(verdict(decide_trace0_sniep_n5(spec({0, 0, 0, 0, 0}))) == Outcome::Realizable);
}

TEST_CASE("trace zero, n = 5") {
  const auto ok = decide_trace0_n5(spec({4, 2, -2, -2, -2}));
  CHECK(ok.verdict == Outcome::Realizable);
  const auto near = decide_trace0_n5(spec({3.4, 2.6, -2, -2, -2}));
  CHECK(near.verdict == Outcome::NotRealizable);
  CHECK(near.witness->lhs == doctest::Approx(919.3024));
  CHECK(near.witness->rhs == doctest::Approx(909.3248));
  const auto classic = decide_trace0_n5(spec({3, 3, -2, -2, -2}));
  CHECK(classic.verdict == Outcome::NotRealizable);
  CHECK(classic.witness->lhs == doctest::Approx(900));
  CHECK(classic.witness->rhs == doctest::Approx(840));
}

TEST_CASE("coefficient gap") {
  CHECK(verdict(decide_coeff_gap(PolynomialCoeffs({0, -6, -8, -3}), 2)) == Outcome::Realizable);
  const auto d = decide_coeff_gap(PolynomialCoeffs({0, -15, -10, 60, 72}), 2);
  CHECK(d.verdict == Outcome::NotRealizable);
  CHECK(d.witness->lhs == doctest::Approx(60));
  CHECK(d.witness->rhs == doctest::Approx(56.25));
  CHECK(verdict(decide_coeff_gap(PolynomialCoeffs({0, -1, 0}), 2)) == Outcome::Realizable);
  CHECK(verdict(decide_coeff_gap(PolynomialCoeffs({1, -1, 0}), 2)) == Outcome::Inapplicable);
  CHECK(verdict(decide_coeff_gap(PolynomialCoeffs({0, -1, 0, 0, 0, 0}), 2)) == Outcome::Inapplicable);
  CHECK(verdict(decide_coeff_gap(PolynomialCoeffs({0, 1, 0}), 2)) == Outcome::NotRealizable);
}

TEST_CASE("symmetric, n = 5") {
  CHECK(verdict(decide_sniep_n5_gated(spec({4, 1, 1, -2, -2}))) == Outcome::Realizable);
  CHECK(verdict(decide_sniep_n5_gated(spec({6, 3, 3, -5, -5}))) == Outcome::Inapplicable);
  CHECK(verdict(decide_sniep_n5_gated(spec({2, 0, 0, 0, 0}))) == Outcome::Realizable);
  CHECK(verdict(decide_sniep_n5_gated(spec({3, 3, 3, -1, -4}))) == Outcome::NotRealizable);

  const auto t0 = decide_trace0_sniep_n5(spec({4, 1, 0, -2, -3}));
  CHECK(t0.verdict == Outcome::Realizable);
  const auto bad = decide_trace0_sniep_n5(spec({3, 3, -2, -2, -2}));
  CHECK(bad.verdict == Outcome::NotRealizable);
  CHECK(bad.witness->lhs == doctest::Approx(1));
  CHECK(verdict(decide_trace0_sniep_n5(spec({0, 0, 0, 0, 0}))) == Outcome::Realizable);
}

TEST_CASE("prescribed diagonal, n = 3") {
  const auto l = spec({5, 3, -2});
  CHECK(verdict(decide_diag_n3(l, {{3, 3, 0}})) == Outcome::Realizable);
  CHECK(verdict(decide_diag_n3(spec({1, 0, 0}), {{1, 0, 0}})) == Outcome::Realizable);
  const auto low = decide_diag_n3(l, {{2, 2, 2}});
  CHECK(low.verdict == Outcome::NotRealizable);
  CHECK(low.reason == "max_diagonal_ge_lambda2");
  CHECK_THROWS_AS(decide_diag_n3(l, {{1, 1}}), Error);

  CHECK(verdict(decide_sym_diag_n3(l, {{3, 0, 3}})) == Outcome::Realizable);
  CHECK(verdict(decide_sym_diag_n3(spec({1, 1, 1}), {{1, 1, 1}})) == Outcome::Realizable);
  const auto big = decide_sym_diag_n3(l, {{6, 0, 0}});
  CHECK(big.verdict == Outcome::NotRealizable);
  CHECK(big.reason == "majorization");
}

TEST_CASE("property: the trace-zero sweep flips once near 0.437") {
  int flips = 0;
  double where = 0.0;
  Outcome last = decide_trace0_n5(spec(sweep(0.3))).verdict;
  for (int i = 1; i <= 300; ++i) {
    const double t = 0.3 + 0.001 * i;
    const Outcome now = decide_trace0_n5(spec(sweep(t))).verdict;
    if (now != last) {
      ++flips;
      where = t;
    }
    last = now;
  }
  CHECK(flips == 1);
  CHECK(std::abs(where - std::sqrt(16 * std::sqrt(6.0) - 39)) <= 0.001);
  CHECK(std::abs(where - 0.437) <= 0.01);
}

TEST_CASE("property: trace-zero n = 5 with a zero agrees with n = 4") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  int compared = 0;
  for (int t = 0; t < 2000; ++t) {
    std::vector<Complex> core{u(rng), u(rng), u(rng)};
    if (t % 2 == 0) {
      const Complex z{u(rng), u(rng)};
      core = {u(rng), z, std::conj(z)};
    }
    Complex sum = 0;
    for (auto z : core) sum += z;
    core.push_back(-sum);
    auto five = core;
    five.push_back(0.0);
    const auto a = decide_trace0_n4(spec(core));
    const auto b = decide_trace0_n5(spec(five));
    if (a.verdict == Outcome::Inapplicable) continue;
    ++compared;
    CHECK(a.verdict == b.verdict);
  }
  CHECK(compared > 1000);
}

TEST_CASE("property: coefficient gap with p = 2 agrees with the trace-zero n = 4 decider") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int t = 0; t < 2000; ++t) {
    std::vector<Complex> v{u(rng), u(rng)};
    const Complex z{u(rng), u(rng)};
    if (t % 3 == 0) v.insert(v.end(), {u(rng), u(rng)});
    else v.insert(v.end(), {z, std::conj(z)});
    Complex sum = 0;
    for (auto x : v) sum += x;
    v[0] -= sum;
    const auto s = spec(v);
    const auto a = decide_trace0_n4(s);
    const auto k = oracle::coeffs_by_subsets(v);
    const auto b = decide_coeff_gap(PolynomialCoeffs(std::vector<double>{0.0, k[1], k[2], k[3]}), 2);
    CHECK(a.verdict == b.verdict);
  }
}
