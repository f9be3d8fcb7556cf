#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "niep/matrix.hpp"

namespace niep {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;

/// A conjugate-closed multiset of complex numbers, the candidate spectrum.
///
/// Values are kept sorted by real part descending, then imaginary part
/// descending, so two spectra with the same multiset compare equal and
/// serialize identically. Conjugate pairs are stored exactly conjugate and
/// near-real values exactly real. `perron_index()` names the largest real
/// value when it is of maximal modulus (within tolerance).
class Spectrum {
 public:
  std::span<const Complex> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const Complex& operator[](std::size_t i) const { return values_[i]; }

  std::optional<std::size_t> perron_index() const noexcept { return perron_index_; }
  /// The Perron value lambda_1, when one exists.
  std::optional<double> perron_value() const;

  /// max |lambda_i|.
  double radius() const noexcept { return radius_; }
  /// max(1, radius()); the normalization every tolerance test is made against.
  double scale() const noexcept { return radius_ > 1.0 ? radius_ : 1.0; }
  double tolerance() const noexcept { return tol_; }

  bool is_real() const noexcept;
  /// Real parts in descending order; throws InvalidArgument unless is_real().
  std::vector<double> real_values() const;

  /// The same spectrum with `zeros` zero values appended.
  Spectrum padded(std::size_t zeros) const;
  /// c * Lambda for c > 0.
  Spectrum scaled(double factor) const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  friend Spectrum validate_spectrum(std::span<const Complex>, double);
  std::vector<Complex> values_;
  std::optional<std::size_t> perron_index_;
  double radius_ = 0.0;
  double tol_ = kDefaultTolerance;
};

/// Pairs conjugates greedily (nearest partner, ties by input order) and
/// canonicalizes. Throws EmptyInput or UnpairedConjugate.
Spectrum validate_spectrum(std::span<const Complex> values, double tol = kDefaultTolerance);
Spectrum validate_spectrum(std::span<const double> values, double tol = kDefaultTolerance);
Spectrum validate_spectrum(std::initializer_list<double> values, double tol = kDefaultTolerance);

/// Power sums s_1..s_K, 1-based access.
class Moments {
 public:
  Moments() = default;
  explicit Moments(std::vector<double> sums) : s_(std::move(sums)) {}

  /// s_k for 1 <= k <= count().
  double at(std::size_t k) const;
  std::size_t count() const noexcept { return s_.size(); }
  std::span<const double> values() const noexcept { return s_; }

  friend bool operator==(const Moments&, const Moments&) = default;

 private:
  std::vector<double> s_;
};

/// k_1..k_n of x^n + k_1 x^{n-1} + ... + k_n, 1-based access.
class PolynomialCoeffs {
 public:
  PolynomialCoeffs() = default;
  explicit PolynomialCoeffs(std::vector<double> k) : k_(std::move(k)) {}

  double at(std::size_t j) const;
  std::size_t degree() const noexcept { return k_.size(); }
  std::span<const double> values() const noexcept { return k_; }

  /// Evaluates the monic polynomial at x (Horner).
  double evaluate(double x) const;
  /// Coefficients of x^z p(x).
  PolynomialCoeffs with_zero_roots(std::size_t zeros) const;

  friend bool operator==(const PolynomialCoeffs&, const PolynomialCoeffs&) = default;

 private:
  std::vector<double> k_;
};

struct SymmetricFunctions {
  std::vector<double> elementary;  // E_1..E_n
  std::vector<double> newton;      // c_0..c_n, c_0 = 1

  double E(std::size_t k) const { return k == 0 ? 1.0 : elementary.at(k - 1); }
  double c(std::size_t k) const { return newton.at(k); }
};

/// s_k = Re sum lambda_i^k, k = 1..K. Throws ImaginaryResidue if the
/// imaginary part exceeds n * tol after normalization.
Moments moments(const Spectrum& spectrum, std::size_t count);

SymmetricFunctions elementary_symmetric(const Spectrum& spectrum);
/// E_k and c_k of an arbitrary real list (no conjugate bookkeeping needed).
SymmetricFunctions elementary_symmetric(std::span<const double> values);

/// Coefficients of prod (x - lambda_i): k_j = (-1)^j E_j.
PolynomialCoeffs characteristic_coeffs(const Spectrum& spectrum);

/// Newton identities: s_m + k_1 s_{m-1} + ... + k_{m-1} s_1 + m k_m = 0.
PolynomialCoeffs coeffs_from_moments(const Moments& moments, std::size_t degree);
/// Inverse direction; beyond the degree uses s_m = -sum_j k_j s_{m-j}.
Moments moments_from_coeffs(const PolynomialCoeffs& coeffs, std::size_t count);

/// s_k = Tr(A^k) by iterated multiplication.
Moments moments_of_matrix(const SquareMatrix& a, std::size_t count);
/// det(xI - A) from the traces of A^k (no eigensolver involved).
PolynomialCoeffs charpoly_of_matrix(const SquareMatrix& a);

double binomial(std::size_t n, std::size_t k);

}  // namespace niep
