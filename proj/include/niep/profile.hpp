#pragma once

#include <cstddef>
#include <optional>

#include "niep/matrix.hpp"
#include "niep/spectrum.hpp"

namespace niep {

/// Everything the necessary conditions read: dimension, power sums,
/// characteristic coefficients and the Perron root.
///
/// A profile built from a matrix never sees eigenvalues. Moments are traces
/// of powers, coefficients come from the Newton identities, and the Perron
/// root is the least x at which every Taylor coefficient of det(xI - A) is
/// nonnegative (for nonnegative A this set is exactly [rho, inf)).
class SpectralProfile {
 public:
  static SpectralProfile from_spectrum(const Spectrum& spectrum, std::size_t moment_count = 0);
  static SpectralProfile from_matrix(const SquareMatrix& a, std::size_t moment_count = 0,
                                     double tol = kDefaultTolerance);

  std::size_t dimension() const noexcept { return n_; }
  const Moments& moments() const noexcept { return moments_; }
  double moment(std::size_t k) const { return moments_.at(k); }
  const PolynomialCoeffs& coeffs() const noexcept { return coeffs_; }

  /// Spectrum mode: the Perron value if one exists. Matrix mode: the
  /// Taylor-coefficient bound described above.
  std::optional<double> perron_root() const noexcept { return perron_; }
  /// max |lambda| (spectrum mode) or the Perron root (matrix mode).
  double radius() const noexcept { return radius_; }
  double scale() const noexcept { return radius_ > 1.0 ? radius_ : 1.0; }
  double tolerance() const noexcept { return tol_; }
  const std::optional<Spectrum>& spectrum() const noexcept { return spectrum_; }

  /// Appends zero eigenvalues: n grows, moments are unchanged.
  SpectralProfile padded(std::size_t zeros) const;
  /// Same profile with at least `count` moments available.
  SpectralProfile with_moment_count(std::size_t count) const;

 private:
  std::size_t n_ = 0;
  Moments moments_;
  PolynomialCoeffs coeffs_;
  std::optional<double> perron_;
  double radius_ = 0.0;
  double tol_ = kDefaultTolerance;
  std::optional<Spectrum> spectrum_;
};

/// Taylor coefficients of the monic polynomial at x: p(x + t) = sum_j T_j t^j,
/// returned as T_0..T_n.
std::vector<double> taylor_coefficients(const PolynomialCoeffs& p, double x);

/// Least x such that all Taylor coefficients at x are >= -tol (relative to
/// their natural size). For the characteristic polynomial of a nonnegative
/// matrix this is the Perron root. Returns nullopt when no real root exists.
std::optional<double> taylor_nonnegative_bound(const PolynomialCoeffs& p, double tol);

}  // namespace niep
