#include "niep/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "niep/error.hpp"
#include "niep/kernels.hpp"

namespace niep {

namespace {

bool canonical_before(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() > b.real();
  return a.imag() > b.imag();
}

std::string describe(const Complex& z) {
  return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}

}  // namespace

std::optional<double> Spectrum::perron_value() const {
  if (!perron_index_) return std::nullopt;
  return values_[*perron_index_].real();
}

bool Spectrum::is_real() const noexcept {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Complex& z) { return z.imag() == 0.0; });
}

std::vector<double> Spectrum::real_values() const {
  if (!is_real()) throw Error(ErrorCode::InvalidArgument, "spectrum has non-real values");
  std::vector<double> out;
  out.reserve(values_.size());
  for (const auto& z : values_) out.push_back(z.real());
  return out;
}

Spectrum Spectrum::padded(std::size_t zeros) const {
  std::vector<Complex> v(values_.begin(), values_.end());
  v.insert(v.end(), zeros, Complex{0.0, 0.0});
  return validate_spectrum(v, tol_);
}

Spectrum Spectrum::scaled(double factor) const {
  if (!(factor > 0.0)) throw Error(ErrorCode::InvalidArgument, "scale factor must be positive");
  std::vector<Complex> v(values_.begin(), values_.end());
  for (auto& z : v) z *= factor;
  return validate_spectrum(v, tol_);
}

Spectrum validate_spectrum(std::span<const Complex> input, double tol) {
  if (input.empty()) throw Error(ErrorCode::EmptyInput, "spectrum has no values");
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");

  double radius = 0.0;
  for (const auto& z : input) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(ErrorCode::InvalidArgument, "non-finite value " + describe(z));
    radius = std::max(radius, std::abs(z));
  }
  const double slack = tol * std::max(1.0, radius);

  std::vector<Complex> values(input.begin(), input.end());
  std::vector<bool> settled(values.size(), false);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (std::abs(values[i].imag()) <= slack) {
      values[i] = {values[i].real(), 0.0};
      settled[i] = true;
    }
  }

  for (std::size_t i = 0; i < values.size(); ++i) {
    if (settled[i]) continue;
    const Complex target = std::conj(values[i]);
    std::size_t best = values.size();
    double best_distance = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (j == i || settled[j]) continue;
      const double d = std::abs(values[j] - target);
      if (d < best_distance) {
        best_distance = d;
        best = j;
      }
    }
    if (best == values.size() || best_distance > slack)
      throw Error(ErrorCode::UnpairedConjugate, "no conjugate partner for " + describe(values[i]));
    const double re = 0.5 * (values[i].real() + values[best].real());
    const double im = 0.5 * (std::abs(values[i].imag()) + std::abs(values[best].imag()));
    values[i] = {re, im};
    values[best] = {re, -im};
    settled[i] = settled[best] = true;
  }

  std::stable_sort(values.begin(), values.end(), canonical_before);

  Spectrum s;
  s.tol_ = tol;
  s.radius_ = 0.0;
  for (const auto& z : values) s.radius_ = std::max(s.radius_, std::abs(z));
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].imag() != 0.0) continue;
    // First real value in canonical order is the largest real value.
    if (values[i].real() >= s.radius_ - slack) s.perron_index_ = i;
    break;
  }
  s.values_ = std::move(values);
  return s;
}

Spectrum validate_spectrum(std::span<const double> values, double tol) {
  std::vector<Complex> v(values.begin(), values.end());
  return validate_spectrum(v, tol);
}

Spectrum validate_spectrum(std::initializer_list<double> values, double tol) {
  std::vector<Complex> v(values.begin(), values.end());
  return validate_spectrum(v, tol);
}

double Moments::at(std::size_t k) const {
  if (k == 0 || k > s_.size())
    throw Error(ErrorCode::InvalidArgument,
                "moment s_" + std::to_string(k) + " outside 1.." + std::to_string(s_.size()));
  return s_[k - 1];
}

double PolynomialCoeffs::at(std::size_t j) const {
  if (j == 0) return 1.0;
  if (j > k_.size())
    throw Error(ErrorCode::InvalidArgument,
                "coefficient k_" + std::to_string(j) + " outside 1.." + std::to_string(k_.size()));
  return k_[j - 1];
}

double PolynomialCoeffs::evaluate(double x) const {
  double acc = 1.0;
  for (double c : k_) acc = acc * x + c;
  return acc;
}

PolynomialCoeffs PolynomialCoeffs::with_zero_roots(std::size_t zeros) const {
  std::vector<double> k = k_;
  k.insert(k.end(), zeros, 0.0);
  return PolynomialCoeffs(std::move(k));
}

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return std::round(r);
}

Moments moments(const Spectrum& spectrum, std::size_t count) {
  if (count == 0) throw Error(ErrorCode::InvalidArgument, "moment count must be positive");
  std::vector<Complex> values(spectrum.values().begin(), spectrum.values().end());
  const auto sums = kernels::power_sums(values, count);
  const double n = static_cast<double>(spectrum.size());
  const double scale = spectrum.scale();
  std::vector<double> s(count);
  double unit = 1.0;
  for (std::size_t k = 1; k <= count; ++k) {
    unit *= scale;
    if (std::abs(sums[k - 1].imag()) > n * spectrum.tolerance() * unit)
      throw Error(ErrorCode::ImaginaryResidue,
                  "s_" + std::to_string(k) + " has imaginary part " +
                      std::to_string(sums[k - 1].imag()));
    s[k - 1] = sums[k - 1].real();
  }
  return Moments(std::move(s));
}

namespace {

// Coefficients of prod (x - z_i), leading 1 first.
std::vector<Complex> expand_roots(std::span<const Complex> roots) {
  std::vector<Complex> p{Complex{1.0, 0.0}};
  for (const auto& z : roots) {
    p.push_back(Complex{0.0, 0.0});
    for (std::size_t j = p.size() - 1; j >= 1; --j) p[j] -= z * p[j - 1];
  }
  return p;
}

SymmetricFunctions from_expansion(const std::vector<Complex>& p, double tol, double scale) {
  const std::size_t n = p.size() - 1;
  SymmetricFunctions f;
  f.elementary.resize(n);
  f.newton.resize(n + 1);
  f.newton[0] = 1.0;
  double unit = 1.0;
  const double slack = static_cast<double>(n * n) * tol;
  for (std::size_t k = 1; k <= n; ++k) {
    unit *= scale;
    const Complex e = (k % 2 == 0 ? 1.0 : -1.0) * p[k];
    if (std::abs(e.imag()) > slack * unit)
      throw Error(ErrorCode::ImaginaryResidue,
                  "E_" + std::to_string(k) + " has imaginary part " + std::to_string(e.imag()));
    f.elementary[k - 1] = e.real();
    f.newton[k] = e.real() / binomial(n, k);
  }
  return f;
}

}  // namespace

SymmetricFunctions elementary_symmetric(const Spectrum& spectrum) {
  return from_expansion(expand_roots(spectrum.values()), spectrum.tolerance(), spectrum.scale());
}

SymmetricFunctions elementary_symmetric(std::span<const double> values) {
  std::vector<Complex> roots(values.begin(), values.end());
  double radius = 0.0;
  for (double v : values) radius = std::max(radius, std::abs(v));
  return from_expansion(expand_roots(roots), kDefaultTolerance, std::max(1.0, radius));
}

PolynomialCoeffs characteristic_coeffs(const Spectrum& spectrum) {
  const auto f = elementary_symmetric(spectrum);
  std::vector<double> k(f.elementary.size());
  for (std::size_t j = 1; j <= k.size(); ++j)
    k[j - 1] = (j % 2 == 0 ? 1.0 : -1.0) * f.elementary[j - 1];
  return PolynomialCoeffs(std::move(k));
}

PolynomialCoeffs coeffs_from_moments(const Moments& m, std::size_t degree) {
  if (m.count() < degree)
    throw Error(ErrorCode::InvalidArgument, "need at least " + std::to_string(degree) + " moments");
  std::vector<double> k(degree);
  for (std::size_t j = 1; j <= degree; ++j) {
    double acc = m.at(j);
    for (std::size_t i = 1; i < j; ++i) acc += k[i - 1] * m.at(j - i);
    k[j - 1] = -acc / static_cast<double>(j);
  }
  return PolynomialCoeffs(std::move(k));
}

Moments moments_from_coeffs(const PolynomialCoeffs& p, std::size_t count) {
  if (count == 0) throw Error(ErrorCode::InvalidArgument, "moment count must be positive");
  const std::size_t n = p.degree();
  std::vector<double> s(count);
  for (std::size_t m = 1; m <= count; ++m) {
    double acc = m <= n ? static_cast<double>(m) * p.at(m) : 0.0;
    for (std::size_t j = 1; j < m && j <= n; ++j) acc += p.at(j) * s[m - j - 1];
    s[m - 1] = -acc;
  }
  return Moments(std::move(s));
}

Moments moments_of_matrix(const SquareMatrix& a, std::size_t count) {
  if (count == 0) throw Error(ErrorCode::InvalidArgument, "moment count must be positive");
  return Moments(kernels::power_traces(a, count));
}

PolynomialCoeffs charpoly_of_matrix(const SquareMatrix& a) {
  if (a.order() == 0) return PolynomialCoeffs{};
  return coeffs_from_moments(moments_of_matrix(a, a.order()), a.order());
}

}  // namespace niep
