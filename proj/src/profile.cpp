#include "niep/profile.hpp"

#include <algorithm>
#include <cmath>

#include "niep/error.hpp"

namespace niep {

namespace {

std::size_t default_moment_count(std::size_t n) { return std::max<std::size_t>({2 * n, 20, 3}); }

}  // namespace

std::vector<double> taylor_coefficients(const PolynomialCoeffs& p, double x) {
  // Repeated synthetic division by (t - x).
  const std::size_t n = p.degree();
  std::vector<double> a(n + 1);
  a[0] = 1.0;
  for (std::size_t j = 1; j <= n; ++j) a[j] = p.at(j);
  std::vector<double> taylor(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    const std::size_t len = n + 1 - j;
    for (std::size_t i = 1; i < len; ++i) a[i] += x * a[i - 1];
    taylor[j] = a[len - 1];
  }
  return taylor;
}

std::optional<double> taylor_nonnegative_bound(const PolynomialCoeffs& p, double tol) {
  const std::size_t n = p.degree();
  if (n == 0) return std::nullopt;
  // Fujiwara: every root has modulus <= 2 max |k_j|^{1/j}. Rescale so the
  // roots sit in the unit disc and offsets |x - lambda| are at most 2.
  double radius = 0.0;
  for (std::size_t j = 1; j <= n; ++j)
    radius = std::max(radius, std::pow(std::abs(p.at(j)), 1.0 / static_cast<double>(j)));
  radius *= 2.0;
  if (radius == 0.0) return 0.0;
  std::vector<double> unit(n);
  for (std::size_t j = 1; j <= n; ++j) unit[j - 1] = p.at(j) / std::pow(radius, static_cast<double>(j));
  const PolynomialCoeffs q(std::move(unit));

  auto accepted = [&](double x) {
    const auto t = taylor_coefficients(q, x);
    for (std::size_t j = 0; j <= n; ++j) {
      // T_j sums C(n, j) products of n - j offsets, each of modulus <= 2.
      const double weight = binomial(n, j) * std::pow(2.0, static_cast<double>(n - j));
      if (t[j] < -tol * weight) return false;
    }
    return true;
  };

  double lo = -1.0, hi = 1.0;
  if (accepted(lo)) return std::nullopt;  // no real root at all
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    (accepted(mid) ? hi : lo) = mid;
  }

  // Polish with Newton steps while they shrink the residual. Near a repeated
  // root T_1 vanishes and the bisection answer is as good as rounding allows.
  double x = hi;
  auto t = taylor_coefficients(q, x);
  for (int it = 0; it < 60 && t[1] > 0.0; ++it) {
    const double next = x - t[0] / t[1];
    if (!(std::abs(next - x) < 0.1)) break;
    const auto tn = taylor_coefficients(q, next);
    if (!(std::abs(tn[0]) < std::abs(t[0]))) break;
    x = next;
    t = tn;
  }
  return x * radius;
}

SpectralProfile SpectralProfile::from_spectrum(const Spectrum& spectrum, std::size_t moment_count) {
  SpectralProfile p;
  p.n_ = spectrum.size();
  p.moments_ = niep::moments(spectrum, moment_count == 0 ? default_moment_count(p.n_) : moment_count);
  p.coeffs_ = characteristic_coeffs(spectrum);
  p.perron_ = spectrum.perron_value();
  p.radius_ = spectrum.radius();
  p.tol_ = spectrum.tolerance();
  p.spectrum_ = spectrum;
  return p;
}

SpectralProfile SpectralProfile::from_matrix(const SquareMatrix& a, std::size_t moment_count,
                                             double tol) {
  if (a.order() == 0) throw Error(ErrorCode::EmptyInput, "matrix of order 0");
  SpectralProfile p;
  p.n_ = a.order();
  const std::size_t count = std::max(p.n_, moment_count == 0 ? default_moment_count(p.n_) : moment_count);
  p.moments_ = moments_of_matrix(a, count);
  p.coeffs_ = coeffs_from_moments(p.moments_, p.n_);
  p.tol_ = tol;
  p.perron_ = taylor_nonnegative_bound(p.coeffs_, tol * 1e-3);
  p.radius_ = p.perron_ ? std::max(0.0, *p.perron_) : 0.0;
  return p;
}

SpectralProfile SpectralProfile::padded(std::size_t zeros) const {
  SpectralProfile p = *this;
  p.n_ += zeros;
  p.coeffs_ = coeffs_.with_zero_roots(zeros);
  if (spectrum_) p.spectrum_ = spectrum_->padded(zeros);
  return p;
}

SpectralProfile SpectralProfile::with_moment_count(std::size_t count) const {
  if (moments_.count() >= count) return *this;
  SpectralProfile p = *this;
  if (spectrum_) {
    p.moments_ = niep::moments(*spectrum_, count);
  } else {
    // Cayley-Hamilton recurrence continues the traces exactly.
    std::vector<double> s(moments_.values().begin(), moments_.values().end());
    for (std::size_t m = s.size() + 1; m <= count; ++m) {
      double acc = 0.0;
      for (std::size_t j = 1; j <= n_ && j < m; ++j) acc += coeffs_.at(j) * s[m - j - 1];
      s.push_back(-acc);
    }
    p.moments_ = Moments(std::move(s));
  }
  return p;
}

}  // namespace niep
