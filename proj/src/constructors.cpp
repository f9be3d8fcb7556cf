#include "niep/constructors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "niep/error.hpp"

namespace niep {

double coeff_residual(const SquareMatrix& a, const PolynomialCoeffs& target, double scale) {
  if (a.order() != target.degree())
    throw Error(ErrorCode::DimensionMismatch, "matrix order and polynomial degree differ");
  const auto got = charpoly_of_matrix(a.scaled(1.0 / scale));
  double worst = 0.0, unit = 1.0;
  for (std::size_t j = 1; j <= target.degree(); ++j) {
    unit *= scale;
    worst = std::max(worst, std::abs(got.at(j) - target.at(j) / unit));
  }
  return worst;
}

RealizationCertificate verify_realization(const SquareMatrix& a, const Spectrum& target) {
  if (a.order() != target.size())
    throw Error(ErrorCode::DimensionMismatch, "matrix of order " + std::to_string(a.order()) + " against " +
                                                  std::to_string(target.size()) + " values");
  RealizationCertificate c{a, target, 0.0, 0.0, std::nullopt, std::nullopt, false};
  const double scale = target.scale();
  c.coeff_residual = coeff_residual(a, characteristic_coeffs(target), scale);
  c.min_entry = a.order() == 0 ? 0.0 : a.min_entry();
  c.valid = c.coeff_residual <= kCertificateResidual && c.min_entry >= -target.tolerance() * scale;
  return c;
}

RealizationCertificate realize_companion(const Spectrum& spectrum) {
  if (!spectrum.is_real()) throw Error(ErrorCode::InvalidArgument, "companion construction needs real values");
  const auto k = characteristic_coeffs(spectrum);
  const std::size_t n = k.degree();
  const double scale = spectrum.scale(), tol = spectrum.tolerance();
  SquareMatrix a(n);
  for (std::size_t i = 0; i + 1 < n; ++i) a(i, i + 1) = 1.0;
  double unit = 1.0;
  for (std::size_t j = 1; j <= n; ++j) {
    unit *= scale;
    if (k.at(j) / unit > tol)
      throw Error(ErrorCode::NotCompanionNonnegative,
                  "k_" + std::to_string(j) + " = " + std::to_string(k.at(j)) + " is positive");
    a(n - 1, n - j) = std::max(0.0, -k.at(j));
  }
  return verify_realization(a, spectrum);
}

RealizationCertificate realize_circulant_n3(double lambda1, Complex z, double tol) {
  if (!(lambda1 > 0.0)) throw Error(ErrorCode::InvalidArgument, "lambda_1 must be positive");
  const Complex w = z / lambda1;
  const double sum12 = 2.0 / 3.0 * (1.0 - w.real());
  const double diff12 = 2.0 * w.imag() / std::sqrt(3.0);
  double alpha[3] = {1.0 - sum12, (sum12 + diff12) / 2.0, (sum12 - diff12) / 2.0};
  for (double& x : alpha) {
    if (x < -tol) throw Error(ErrorCode::OutsidePi3, "z / lambda_1 lies outside the hull of the cube roots of unity");
    x = std::max(0.0, x);
  }
  SquareMatrix a(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t p = 0; p < 3; ++p) a(i, (i + p) % 3) = lambda1 * alpha[p];
  const std::vector<Complex> target{Complex{lambda1, 0.0}, z, std::conj(z)};
  return verify_realization(a, validate_spectrum(target, tol));
}

SquareMatrix HadamardMatrix::to_matrix() const {
  SquareMatrix m(order);
  for (std::size_t i = 0; i < order * order; ++i) m.entries()[i] = entries[i];
  return m;
}

HadamardMatrix hadamard(std::size_t k) {
  if (k > 10) throw Error(ErrorCode::InvalidArgument, "Hadamard order capped at 2^10");
  HadamardMatrix h{1, {1}};
  for (std::size_t step = 0; step < k; ++step) {
    const std::size_t n = h.order, m = 2 * n;
    std::vector<int> next(m * m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const int v = h(i, j);
        next[i * m + j] = v;
        next[i * m + j + n] = v;
        next[(i + n) * m + j] = v;
        next[(i + n) * m + j + n] = -v;
      }
    h = {m, std::move(next)};
  }
  const long long n = static_cast<long long>(h.order);
  for (std::size_t i = 0; i < h.order; ++i)
    for (std::size_t j = 0; j < h.order; ++j) {
      long long dot = 0;
      for (std::size_t t = 0; t < h.order; ++t) dot += h(i, t) * h(j, t);
      if (dot != (i == j ? n : 0)) throw Error(ErrorCode::InvalidCertificate, "H H^T != N I");
    }
  return h;
}

SquareMatrix inverse(const SquareMatrix& s) {
  const std::size_t n = s.order();
  SquareMatrix a = s, inv = SquareMatrix::identity(n);
  const double size = std::max(1e-300, s.max_abs_entry());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    if (std::abs(a(pivot, col)) <= 1e-14 * size) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const double p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0.0) continue;
      const double f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

namespace {

double norm1(const SquareMatrix& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.order(); ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < a.order(); ++i) col += std::abs(a(i, j));
    best = std::max(best, col);
  }
  return best;
}

}  // namespace

SpectraconeResult spectracone_contains(const SquareMatrix& s, std::span<const double> x, double tol) {
  const std::size_t n = s.order();
  if (x.size() != n) throw Error(ErrorCode::DimensionMismatch, "x must have one entry per column of S");
  const auto inv = inverse(s);
  SpectraconeResult r;
  r.witness = SquareMatrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += s(i, k) * x[k] * inv(k, j);
      r.witness(i, j) = acc;
    }
  double unit = 1.0;
  for (double v : x) unit = std::max(unit, std::abs(v));
  r.contains = n == 0 || r.witness.min_entry() >= -tol * unit;
  r.condition_estimate = norm1(s) * norm1(inv);
  r.ill_conditioned = r.condition_estimate > 1e12;
  return r;
}

RealizationCertificate realize_hadamard_suleimanova(const Spectrum& spectrum) {
  if (!spectrum.is_real()) throw Error(ErrorCode::NotSuleimanova, "values must be real");
  auto l = spectrum.real_values();
  std::sort(l.begin(), l.end(), std::greater<>());
  const double unit = spectrum.scale(), tol = spectrum.tolerance();
  double budget = l[0];
  if (l[0] < -tol * unit) throw Error(ErrorCode::NotSuleimanova, "lambda_1 is negative");
  for (std::size_t i = 1; i < l.size(); ++i) {
    if (l[i] > tol * unit) throw Error(ErrorCode::NotSuleimanova, "more than one positive value");
    budget += std::min(0.0, l[i]);
  }
  if (budget < -tol * unit) throw Error(ErrorCode::NotSuleimanova, "lambda_1 + sum of negatives < 0");

  std::size_t k = 0;
  while ((std::size_t{1} << k) < l.size()) ++k;
  const auto h = hadamard(k);
  const std::size_t n = h.order;
  l.resize(n, 0.0);
  std::sort(l.begin() + 1, l.end(), std::greater<>());

  SquareMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t t = 0; t < n; ++t) acc += h(i, t) * h(j, t) * l[t];
      a(i, j) = a(j, i) = acc / static_cast<double>(n);
    }
  auto cert = verify_realization(a, validate_spectrum(std::span<const double>(l), tol));
  cert.symmetry_defect = max_abs_difference(a, a.transpose());
  double dev = 0.0;
  for (double r : a.row_sums()) dev = std::max(dev, std::abs(r - l[0]));
  cert.row_sum_deviation = dev;
  return cert;
}

}  // namespace niep
