#include "niep/deciders.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "niep/error.hpp"
#include "niep/regions.hpp"

namespace niep {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Realizable: return "Realizable";
    case Outcome::NotRealizable: return "NotRealizable";
    case Outcome::Inapplicable: return "Inapplicable";
    case Outcome::Undetermined: return "Undetermined";
  }
  return "Unknown";
}

namespace {

Decision realizable(std::string reason) { return {Outcome::Realizable, std::move(reason), std::nullopt, {}}; }

Decision inapplicable(std::string reason) { return {Outcome::Inapplicable, std::move(reason), std::nullopt, {}}; }

Decision refuted(std::string reason, std::vector<long long> at, double lhs, double rhs) {
  return {Outcome::NotRealizable, std::move(reason), Witness{std::move(at), lhs, rhs}, {}};
}

void require_dimension(std::size_t got, std::size_t n) {
  if (got != n)
    throw Error(ErrorCode::WrongDimension, "expected " + std::to_string(n) + " values, got " + std::to_string(got));
}

// Tolerance tests on quantities homogeneous of a given degree.
struct Scaled {
  double unit;
  double tol;
  bool over(double lhs, double rhs, int degree = 1) const {
    const double u = std::pow(unit, degree);
    return exceeds(lhs / u, rhs / u, tol);
  }
};

Scaled scaled(const Spectrum& s) { return {s.scale(), s.tolerance()}; }

// s_0..s_count with s_0 = n.
std::vector<double> power_sums(const Spectrum& s, std::size_t count) {
  const auto m = moments(s, count);
  std::vector<double> out(count + 1, static_cast<double>(s.size()));
  for (std::size_t k = 1; k <= count; ++k) out[k] = m.at(k);
  return out;
}

// Witness: the spectral radius against the largest real value.
std::optional<Decision> perron_failure(const Spectrum& s) {
  if (s.perron_index()) return std::nullopt;
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& z : s.values())
    if (z.imag() == 0.0) best = std::max(best, z.real());
  return refuted("perron", {}, s.radius(), std::isfinite(best) ? best : 0.0);
}

std::optional<Decision> trace_perron_failure(const Spectrum& s) {
  const double trace = power_sums(s, 1)[1];
  if (scaled(s).over(0.0, trace)) return refuted("trace", {1}, 0.0, trace);
  return perron_failure(s);
}

bool trace_is_zero(const Spectrum& s) { return std::abs(power_sums(s, 1)[1]) <= s.tolerance() * s.scale(); }

std::optional<Decision> reams_failure(const std::vector<double>& s, const Scaled& c) {
  if (c.over(0.0, s[2], 2)) return refuted("s2_nonnegative", {2}, 0.0, s[2]);
  if (c.over(0.0, s[3], 3)) return refuted("s3_nonnegative", {3}, 0.0, s[3]);
  if (c.over(s[2] * s[2], 4.0 * s[4], 4)) return refuted("s2_squared_le_4s4", {2, 4}, s[2] * s[2], 4.0 * s[4]);
  return std::nullopt;
}

// Largest real value first.
std::vector<double> descending(const Spectrum& s) {
  auto v = s.real_values();
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace

Decision decide_niep_n3(const Spectrum& spectrum) {
  require_dimension(spectrum.size(), 3);
  if (spectrum.is_real()) {
    if (auto f = trace_perron_failure(spectrum)) return *f;
    return realizable("trace_and_perron");
  }
  double lambda = 0.0;
  Complex z;
  for (const auto& v : spectrum.values()) {
    if (v.imag() == 0.0) lambda = v.real();
    else if (v.imag() > 0.0) z = v;
  }
  const double tol = spectrum.tolerance();
  if (!(lambda > tol * spectrum.scale())) return refuted("perron", {1}, std::abs(z), lambda);
  const Complex w = z / lambda;
  if (in_pi_k(w, 3, tol)) return realizable("pi3");
  const double apothem = std::cos(std::numbers::pi / 3.0);
  return refuted("pi3", {2}, pi_k_margin(w, 3) + apothem, apothem);
}

Decision decide_rniep_n_le4(const Spectrum& spectrum) {
  if (spectrum.size() > 4)
    throw Error(ErrorCode::WrongDimension, "expected at most 4 values, got " + std::to_string(spectrum.size()));
  if (!spectrum.is_real()) return inapplicable("non_real_values");
  if (auto f = trace_perron_failure(spectrum)) return *f;
  return realizable("trace_and_perron");
}

Decision decide_trace0_n4(const Spectrum& spectrum) {
  require_dimension(spectrum.size(), 4);
  if (!trace_is_zero(spectrum)) return inapplicable("trace_not_zero");
  if (auto f = reams_failure(power_sums(spectrum, 4), scaled(spectrum))) return *f;
  return realizable("reams");
}

Decision decide_trace0_n5(const Spectrum& spectrum) {
  require_dimension(spectrum.size(), 5);
  if (!trace_is_zero(spectrum)) return inapplicable("trace_not_zero");
  const auto s = power_sums(spectrum, 5);
  const auto c = scaled(spectrum);
  if (auto f = reams_failure(s, c)) return *f;
  if (c.over(0.0, s[5], 5)) return refuted("s5_nonnegative", {5}, 0.0, s[5]);
  if (auto f = perron_failure(spectrum)) return *f;
  const double root = std::sqrt(std::max(0.0, 4.0 * s[4] - s[2] * s[2]));
  const double lhs = 5.0 * s[2] * s[3];
  const double rhs = 12.0 * s[5] + 5.0 * s[3] * root;
  if (c.over(lhs, rhs, 5)) return refuted("laffey_meehan", {5}, lhs, rhs);
  return realizable("laffey_meehan");
}

Decision decide_coeff_gap(const PolynomialCoeffs& coeffs, std::size_t p, double tol) {
  const std::size_t n = coeffs.degree();
  if (p < 2 || p > n || n > 2 * p + 1) return inapplicable("gap_out_of_range");
  double unit = 1.0;
  for (std::size_t j = 1; j <= n; ++j)
    unit = std::max(unit, std::pow(std::abs(coeffs.at(j)), 1.0 / static_cast<double>(j)));
  const Scaled c{unit, tol};
  auto k = [&](std::size_t j) { return coeffs.at(j); };
  auto deg = [](std::size_t j) { return static_cast<int>(j); };
  for (std::size_t j = 1; j < p; ++j)
    if (std::abs(k(j)) / std::pow(unit, deg(j)) > tol) return inapplicable("leading_coefficients_not_zero");
  for (std::size_t j = p; j <= std::min(2 * p - 1, n); ++j)
    if (c.over(k(j), 0.0, deg(j))) return refuted("k_nonpositive", {static_cast<long long>(j)}, k(j), 0.0);
  const auto at = [](std::size_t j) { return static_cast<long long>(j); };
  if (2 * p <= n) {
    const double bound = k(p) * k(p) / 4.0;
    if (c.over(k(2 * p), bound, deg(2 * p))) return refuted("k2p_bound", {at(2 * p)}, k(2 * p), bound);
  }
  if (2 * p + 1 <= n) {
    const double bound = k(2 * p) <= 0.0
                             ? k(p) * k(p + 1)
                             : k(p + 1) * (k(p) / 2.0 - std::sqrt(std::max(0.0, k(p) * k(p) / 4.0 - k(2 * p))));
    if (c.over(k(2 * p + 1), bound, deg(2 * p + 1)))
      return refuted("k2p1_bound", {at(2 * p + 1)}, k(2 * p + 1), bound);
  }
  return realizable("coefficient_gap");
}

Decision decide_sniep_n5_gated(const Spectrum& spectrum) {
  require_dimension(spectrum.size(), 5);
  if (!spectrum.is_real()) return inapplicable("non_real_values");
  const auto l = descending(spectrum);
  const double trace = std::accumulate(l.begin(), l.end(), 0.0);
  const auto c = scaled(spectrum);
  if (c.over(l[0], 2.0 * trace)) return inapplicable("gate_2s1_below_lambda1");
  if (c.over(-l[4], l[0])) return refuted("perron", {1, 5}, -l[4], l[0]);
  if (c.over(l[1] + l[4], trace)) return refuted("lambda2_plus_lambda5", {2, 5}, l[1] + l[4], trace);
  if (c.over(l[2], trace)) return refuted("lambda3", {3}, l[2], trace);
  return realizable("loewy_spector");
}

Decision decide_trace0_sniep_n5(const Spectrum& spectrum) {
  require_dimension(spectrum.size(), 5);
  if (!spectrum.is_real()) return inapplicable("non_real_values");
  if (!trace_is_zero(spectrum)) return inapplicable("trace_not_zero");
  if (auto f = perron_failure(spectrum)) return *f;
  const auto l = descending(spectrum);
  const auto c = scaled(spectrum);
  if (c.over(l[1] + l[4], 0.0)) return refuted("lambda2_plus_lambda5", {2, 5}, l[1] + l[4], 0.0);
  const double s3 = power_sums(spectrum, 3)[3];
  if (c.over(0.0, s3, 3)) return refuted("s3_nonnegative", {3}, 0.0, s3);
  return realizable("spector");
}

namespace {

Scaled diagonal_scale(const Spectrum& s, const std::vector<double>& d) {
  double unit = s.scale();
  for (double x : d) unit = std::max(unit, std::abs(x));
  return {unit, s.tolerance()};
}

double pair_sum(const std::vector<double>& v) { return v[0] * v[1] + v[0] * v[2] + v[1] * v[2]; }

}  // namespace

Decision decide_diag_n3(const Spectrum& spectrum, const DiagonalSpec& diagonal) {
  require_dimension(spectrum.size(), 3);
  if (diagonal.d.size() != 3) throw Error(ErrorCode::DimensionMismatch, "diagonal must have 3 entries");
  if (!spectrum.is_real()) return inapplicable("non_real_values");
  const auto l = descending(spectrum);
  const auto& d = diagonal.d;
  const auto c = diagonal_scale(spectrum, d);
  for (std::size_t i = 0; i < 3; ++i) {
    const long long at = static_cast<long long>(i) + 1;
    if (c.over(0.0, d[i])) return refuted("diagonal_nonnegative", {at}, 0.0, d[i]);
    if (c.over(d[i], l[0])) return refuted("diagonal_le_lambda1", {at}, d[i], l[0]);
  }
  const double sd = d[0] + d[1] + d[2], sl = l[0] + l[1] + l[2];
  if (c.over(sd, sl) || c.over(sl, sd)) return refuted("trace_equal", {}, sd, sl);
  if (c.over(pair_sum(l), pair_sum(d), 2)) return refuted("pair_products", {}, pair_sum(l), pair_sum(d));
  const double dmax = *std::max_element(d.begin(), d.end());
  if (c.over(l[1], dmax)) return refuted("max_diagonal_ge_lambda2", {2}, l[1], dmax);
  return realizable("perfect_diagonal");
}

Decision decide_sym_diag_n3(const Spectrum& spectrum, const DiagonalSpec& diagonal) {
  require_dimension(spectrum.size(), 3);
  if (diagonal.d.size() != 3) throw Error(ErrorCode::DimensionMismatch, "diagonal must have 3 entries");
  if (!spectrum.is_real()) return inapplicable("non_real_values");
  const auto l = descending(spectrum);
  auto d = diagonal.d;
  std::sort(d.begin(), d.end(), std::greater<>());
  const auto c = diagonal_scale(spectrum, d);
  if (c.over(0.0, d[2])) return inapplicable("negative_diagonal");
  if (c.over(d[0], l[0])) return refuted("majorization", {1}, d[0], l[0]);
  if (c.over(d[0] + d[1], l[0] + l[1])) return refuted("majorization", {2}, d[0] + d[1], l[0] + l[1]);
  const double sd = d[0] + d[1] + d[2], sl = l[0] + l[1] + l[2];
  if (c.over(sd, sl) || c.over(sl, sd)) return refuted("majorization", {3}, sd, sl);
  if (c.over(l[1], d[0])) return refuted("d1_ge_lambda2", {2}, l[1], d[0]);
  return realizable("fiedler_diagonal");
}

}  // namespace niep
