#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "niep/necessary.hpp"
#include "support/oracles.hpp"

using namespace niep;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

SpectralProfile profile(const std::vector<Complex>& v) {
  return SpectralProfile::from_spectrum(validate_spectrum(v));
}

std::vector<Complex> independence_jll() { return {2.0, -2.0, -2.0, {1.0, 1.0}, {1.0, -1.0}}; }
std::vector<Complex> independence_taamp() {
  return {20.0, -18.0, {5 * kSqrt2, 5 * kSqrt2}, {5 * kSqrt2, -5 * kSqrt2}};
}
std::vector<Complex> not_sufficient() { return {3.0, 3.0, {-kSqrt3, 1.0}, {-kSqrt3, -1.0}}; }

SquareMatrix random_nonnegative(std::mt19937_64& rng, std::size_t n, double density) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  SquareMatrix a(n);
  for (double& x : a.entries()) x = u(rng) < density ? u(rng) : 0.0;
  return a;
}

}  // namespace

TEST_CASE("reality") {
  CHECK(check_reality(std::vector<Complex>{1.0, {0, 1}, {0, -1}}).verdict == Verdict::Satisfied);
  CHECK(check_reality(std::vector<Complex>{{0, 1}, {0, 1}}).verdict == Verdict::Violated);
  CHECK(check_reality(not_sufficient()).verdict == Verdict::Satisfied);
}

TEST_CASE("trace") {
  const auto bad = check_trace(profile({2, -1, -1, -1}));
  CHECK(bad.verdict == Verdict::Violated);
  CHECK(bad.witness->rhs == doctest::Approx(-1.0));
  CHECK(check_trace(profile({3, -1, -1, -1})).verdict == Verdict::Satisfied);
  CHECK(check_trace(profile({1})).verdict == Verdict::Satisfied);
}

TEST_CASE("k-th moment") {
  const auto r = check_moments(profile(independence_jll()));
  REQUIRE(r.verdict == Verdict::Violated);
  CHECK(r.witness->indices == std::vector<long long>{3});
  CHECK(r.witness->rhs == doctest::Approx(-12.0));
  CHECK(check_moments(profile({3, -1, -1, -1})).verdict == Verdict::Satisfied);
  CHECK(check_moments(profile({1, 1})).verdict == Verdict::Satisfied);
}

TEST_CASE("Perron") {
  CHECK(check_perron(profile({-1, 1})).verdict == Verdict::Satisfied);
  CHECK(check_perron(profile({-2, 1})).verdict == Verdict::Violated);
  CHECK(check_perron(profile(not_sufficient())).verdict == Verdict::Satisfied);
}

TEST_CASE("JLL") {
  const double r = std::sqrt(3.0 / 8.0);
  const auto small = check_jll(profile({1.0, {0, r}, {0, -r}}));
  REQUIRE(small.verdict == Verdict::Violated);
  CHECK(small.witness->indices == std::vector<long long>{1, 2});
  CHECK(small.witness->lhs == doctest::Approx(1.0));
  CHECK(small.witness->rhs == doctest::Approx(0.75));

  const auto odd = check_jll(profile(independence_jll()));
  REQUIRE(odd.verdict == Verdict::Violated);
  CHECK(odd.witness->indices == std::vector<long long>{1, 3});

  CHECK(check_jll(profile(not_sufficient())).verdict == Verdict::Satisfied);
}

TEST_CASE("Newton inequalities on rho - Lambda") {
  const auto p = profile(independence_jll());
  const auto c = shifted_newton_coefficients(p, 2.0);
  // Oracle: subset sums on the shifted list {0, 4, 4, 1-i, 1+i}.
  const auto e = oracle::elementary_by_subsets({0.0, 4.0, 4.0, {1.0, -1.0}, {1.0, 1.0}});
  const std::vector<double> want{2.0, 3.4, 4.8, 6.4, 0.0};
  for (std::size_t k = 1; k <= 5; ++k) {
    const double unit = std::pow(p.scale(), double(k));
    CHECK(c[k] * unit == doctest::Approx(want[k - 1]));
    CHECK(c[k] * unit == doctest::Approx(e[k].real() / binomial(5, k)));
  }
  CHECK(check_newton_h(p).verdict == Verdict::Satisfied);
  CHECK(check_newton_h(profile({1, 1, 1})).verdict == Verdict::Satisfied);
  CHECK(check_newton_h(profile(independence_taamp())).verdict == Verdict::Satisfied);
  CHECK(check_newton_h(profile({-2, 1})).verdict == Verdict::Inapplicable);
}

TEST_CASE("TAAMP coefficient bounds") {
  const auto r = check_taamp(profile(independence_taamp()));
  REQUIRE(r.verdict == Verdict::Violated);
  CHECK(r.witness->indices == std::vector<long long>{3});
  // Frozen from an independent expansion: k3 = 3600 sqrt2 - 200, second branch.
  CHECK(r.witness->lhs == doctest::Approx(4891.168824543142));
  CHECK(r.witness->rhs == doctest::Approx(4791.919907732864));
  CHECK(r.note.find("second branch") != std::string::npos);

  CHECK(check_taamp(profile(not_sufficient())).verdict == Verdict::Satisfied);
  CHECK(check_taamp(profile({1, 1})).verdict == Verdict::Satisfied);
  // Realizable by a diagonal matrix, so every necessary condition holds.
  CHECK(check_taamp(profile({1, 1, 1, 0, 0})).verdict == Verdict::Satisfied);
  CHECK(check_taamp(profile({-1})).verdict == Verdict::Violated);
}

TEST_CASE("CL Phi") {
  const auto r = check_cl(profile({2, -1, -1}));
  CHECK(r.verdict == Verdict::Satisfied);
  CHECK(r.witness->rhs == doctest::Approx(108.0));
  const auto zero = check_cl(profile({0, 0, 0}));
  CHECK(zero.verdict == Verdict::Satisfied);
  CHECK(zero.witness->rhs == doctest::Approx(0.0));
  CHECK(check_cl(profile(independence_taamp())).verdict == Verdict::Satisfied);
  CHECK(check_cl(profile({1})).verdict == Verdict::Inapplicable);
}

TEST_CASE("refined LM") {
  const auto r = check_lm_refined(profile({3, 3, -2, -2, -2}));
  REQUIRE(r.verdict == Verdict::Violated);
  CHECK(r.witness->indices == std::vector<long long>{2});
  CHECK(r.witness->lhs == doctest::Approx(900.0));
  CHECK(r.witness->rhs == doctest::Approx(840.0));
  const auto ok = check_lm_refined(profile({4, 2, -2, -2, -2}));
  CHECK(ok.verdict == Verdict::Satisfied);
  CHECK(check_lm_refined(profile({1, -1})).verdict == Verdict::Satisfied);
}

TEST_CASE("LM moment form agrees with the coefficient form") {
  // k_{2p} <= (1/2)(1 - 1/floor(n/p)) k_p^2 whenever s_1 = ... = s_{p-1} = 0.
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 4 + trial % 5;
    std::vector<double> v(n);
    double sum = 0.0;
    for (std::size_t i = 1; i < n; ++i) sum += (v[i] = u(rng));
    v[0] = -sum;  // trace zero, so p = 2 is applicable
    const auto p = profile(oracle::to_complex(v));
    const auto k = oracle::coeffs_by_subsets(oracle::to_complex(v));
    if (std::abs(k[1]) < 1e-6) continue;
    const double q = double(n / 2);
    const bool coeff_ok = k[3] <= 0.5 * (1.0 - 1.0 / q) * k[1] * k[1] + 1e-9 * std::max(1.0, k[1] * k[1]);
    const auto r = check_lm_refined(p);
    const bool p2_violated = r.verdict == Verdict::Violated && r.witness->indices[0] == 2;
    const bool p1_violated = r.verdict == Verdict::Violated && r.witness->indices[0] == 1;
    if (!p1_violated) CHECK(coeff_ok == !p2_violated);
  }
}

TEST_CASE("independence fixtures aggregate") {
  CHECK(run_all_necessary(independence_jll()).aggregate == Aggregate::NotRealizable);
  CHECK(run_all_necessary(independence_taamp()).aggregate == Aggregate::NotRealizable);
  const auto last = run_all_necessary(not_sufficient());
  CHECK(last.aggregate == Aggregate::Undecided);
  for (const auto& r : last.reports) CHECK(r.verdict != Verdict::Violated);

  const auto unpaired = run_all_necessary(std::vector<Complex>{{0, 1}, {0, 1}});
  CHECK(unpaired.aggregate == Aggregate::NotRealizable);
  CHECK(unpaired.find("reality")->verdict == Verdict::Violated);
  CHECK(unpaired.find("jll")->verdict == Verdict::Inapplicable);
}

TEST_CASE("Perron root of a matrix profile without eigenvalues") {
  // Repeated and cyclic Perron roots are the hard cases for a root search.
  CHECK(*SpectralProfile::from_matrix(SquareMatrix::identity(6)).perron_root() == doctest::Approx(1.0));
  SquareMatrix cycle(5);
  for (std::size_t i = 0; i < 5; ++i) cycle(i, (i + 1) % 5) = 2.0;
  CHECK(*SpectralProfile::from_matrix(cycle).perron_root() == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(*SpectralProfile::from_matrix(SquareMatrix(3)).perron_root() == doctest::Approx(0.0));
  const auto j = SquareMatrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(*SpectralProfile::from_matrix(j).perron_root() == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("matrix and spectrum routes agree on the shifted Newton coefficients") {
  // {3,-1,-1,-1} is the spectrum of J - I.
  SquareMatrix a(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) a(i, k) = i == k ? 0.0 : 1.0;
  const auto from_matrix = SpectralProfile::from_matrix(a);
  const auto from_values = profile({3, -1, -1, -1});
  const auto cm = shifted_newton_coefficients(from_matrix, *from_matrix.perron_root());
  const auto cv = shifted_newton_coefficients(from_values, 3.0);
  for (std::size_t k = 0; k <= 4; ++k) CHECK(cm[k] == doctest::Approx(cv[k]).epsilon(1e-8));
}

TEST_CASE("property: nonnegative matrices never violate a necessary condition") {
  std::mt19937_64 rng(31337);
  CheckConfig cfg;
  cfg.tol = 1e-8;
  int violations = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const double density = trial % 3 == 0 ? 0.35 : 1.0;
    const auto a = random_nonnegative(rng, n, density);
    const auto report = run_all_necessary(SpectralProfile::from_matrix(a, 0, cfg.tol), cfg);
    for (const auto& r : report.reports)
      if (r.verdict == Verdict::Violated) {
        ++violations;
        MESSAGE("order ", n, " violated ", r.condition, " note ", r.note);
      }
  }
  CHECK(violations == 0);
}

TEST_CASE("property: verdicts are scale invariant") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Complex> v{3.0 + std::abs(u(rng))};
    const std::size_t n = 2 + trial % 6;
    while (v.size() < n) {
      if (n - v.size() >= 2 && u(rng) > 0) {
        const Complex z{u(rng), u(rng)};
        v.push_back(z);
        v.push_back(std::conj(z));
      } else {
        v.push_back(u(rng));
      }
    }
    const auto base = validate_spectrum(v);
    const auto a = run_all_necessary(SpectralProfile::from_spectrum(base));
    for (double c : {0.01, 0.5, 7.0, 1000.0}) {
      const auto b = run_all_necessary(SpectralProfile::from_spectrum(base.scaled(c)));
      for (std::size_t i = 0; i < a.reports.size(); ++i)
        CHECK_MESSAGE(a.reports[i].verdict == b.reports[i].verdict, a.reports[i].condition, " at scale ", c);
    }
  }
}

TEST_CASE("property: implications and equivalences among conditions") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  CheckConfig first_pair;
  first_pair.jll_km_bound = 2;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + trial % 7;
    std::vector<Complex> v{2.0 + std::abs(u(rng))};
    while (v.size() < n) {
      if (n - v.size() >= 2 && u(rng) > 0.5) {
        const Complex z{u(rng), u(rng)};
        v.push_back(z);
        v.push_back(std::conj(z));
      } else {
        v.push_back(u(rng));
      }
    }
    const auto p = profile(v);
    const auto moments = check_moments(p);
    const auto jll = check_jll(p);
    // s_1^k <= n^(k-1) s_k picks up every negative moment once the trace is positive
    if (moments.verdict == Verdict::Violated && p.moment(1) > 1e-6)
      CHECK(jll.verdict == Verdict::Violated);

    if (!p.spectrum()->perron_index() || p.moment(1) < 0.0) continue;
    // JLL (1,2), the first Newton inequality on rho - Lambda and the TAAMP k2
    // clause describe the same set.
    const bool jll12 = check_jll(p, first_pair).verdict != Verdict::Violated;
    const auto c = shifted_newton_coefficients(p, p.radius());
    const bool h1 = !exceeds(c[2], c[1] * c[1], 1e-9);
    const auto taamp = check_taamp(p);
    const bool k2 = !(taamp.verdict == Verdict::Violated && taamp.witness->indices[0] == 2);
    CHECK(jll12 == h1);
    CHECK(jll12 == k2);
  }
}
