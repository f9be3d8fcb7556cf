#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "niep/matrix.hpp"
#include "niep/spectrum.hpp"

namespace niep {

inline constexpr double kCertificateResidual = 1e-8;

/// A matrix offered as a realization of `target`, with the evidence.
struct RealizationCertificate {
  SquareMatrix matrix;
  Spectrum target;
  /// max_j |k_j(A) - k_j(target)| / scale^j.
  double coeff_residual = 0.0;
  double min_entry = 0.0;
  std::optional<double> symmetry_defect;     // max |a_ij - a_ji|
  std::optional<double> row_sum_deviation;   // max |row sum - lambda_1|
  bool valid = false;

  friend bool operator==(const RealizationCertificate&, const RealizationCertificate&) = default;
};

/// Normalized distance between det(xI - A) and the target coefficients;
/// both sides are divided through by scale^j.
double coeff_residual(const SquareMatrix& a, const PolynomialCoeffs& target, double scale);

RealizationCertificate verify_realization(const SquareMatrix& a, const Spectrum& target);

/// Companion matrix of prod (x - lambda_i): ones on the superdiagonal, last
/// row (-k_n, ..., -k_1). Throws NotCompanionNonnegative if some k_j > tol.
RealizationCertificate realize_companion(const Spectrum& spectrum);

/// lambda_1 (a0 I + a1 C + a2 C^2) for the 3-cycle C, where (a0, a1, a2) are
/// the barycentric coordinates of z / lambda_1 in Pi_3. Throws OutsidePi3.
RealizationCertificate realize_circulant_n3(double lambda1, Complex z, double tol = kDefaultTolerance);

/// Sylvester Hadamard matrix of order 2^k.
struct HadamardMatrix {
  std::size_t order = 1;
  std::vector<int> entries;

  int operator()(std::size_t i, std::size_t j) const { return entries[i * order + j]; }
  SquareMatrix to_matrix() const;
};

HadamardMatrix hadamard(std::size_t k);

/// S^{-1} by Gaussian elimination with partial pivoting. Throws SingularMatrix.
SquareMatrix inverse(const SquareMatrix& s);

struct SpectraconeResult {
  bool contains = false;
  SquareMatrix witness;              // S diag(x) S^{-1}
  double condition_estimate = 0.0;   // ||S||_1 ||S^{-1}||_1
  bool ill_conditioned = false;      // estimate above 1e12
};

SpectraconeResult spectracone_contains(const SquareMatrix& s, std::span<const double> x,
                                       double tol = kDefaultTolerance);

/// Pads a Suleimanova list with zeros to the next power of two N and returns
/// (1/N) H diag(lambda) H^T, lambda_1 paired with the all-ones row.
/// Throws NotSuleimanova.
RealizationCertificate realize_hadamard_suleimanova(const Spectrum& spectrum);

}  // namespace niep
