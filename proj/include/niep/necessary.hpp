#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "niep/profile.hpp"
#include "niep/spectrum.hpp"

namespace niep {

enum class Verdict { Satisfied, Violated, Inapplicable };

std::string_view to_string(Verdict v);

/// The inequality "lhs <= rhs" a condition needs; a Violated report carries
/// the first one that fails.
struct Witness {
  std::vector<long long> indices;
  double lhs = 0.0;
  double rhs = 0.0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct ConditionReport {
  std::string condition;
  Verdict verdict = Verdict::Inapplicable;
  std::optional<Witness> witness;
  std::string note;

  friend bool operator==(const ConditionReport&, const ConditionReport&) = default;
};

struct CheckConfig {
  double tol = kDefaultTolerance;
  std::size_t jll_km_bound = 20;
  std::size_t moment_bound = 0;  // 0 means 2n

  std::size_t moment_bound_for(std::size_t n) const { return moment_bound == 0 ? 2 * n : moment_bound; }
  void validate() const;
};

enum class Aggregate { NotRealizable, Undecided };

std::string_view to_string(Aggregate a);

struct NecessaryReport {
  std::vector<ConditionReport> reports;
  Aggregate aggregate = Aggregate::Undecided;

  const ConditionReport* find(std::string_view condition) const;
  friend bool operator==(const NecessaryReport&, const NecessaryReport&) = default;
};

/// True when lhs exceeds rhs by more than tol, measured relative to the
/// larger of 1, |lhs| and |rhs|.
bool exceeds(double lhs, double rhs, double tol);

ConditionReport check_reality(std::span<const Complex> values, double tol = kDefaultTolerance);
ConditionReport check_trace(const SpectralProfile& profile);
ConditionReport check_moments(const SpectralProfile& profile, const CheckConfig& cfg = {});
ConditionReport check_perron(const SpectralProfile& profile);
ConditionReport check_jll(const SpectralProfile& profile, const CheckConfig& cfg = {});
ConditionReport check_newton_h(const SpectralProfile& profile);
ConditionReport check_taamp(const SpectralProfile& profile);
ConditionReport check_cl(const SpectralProfile& profile);
ConditionReport check_lm_refined(const SpectralProfile& profile, const CheckConfig& cfg = {});

/// Newton coefficients c_0..c_n of rho - Lambda, in normalized units
/// (divided by scale^k). Uses the eigenvalues when the profile has them and
/// the binomial shift of the characteristic coefficients otherwise.
std::vector<double> shifted_newton_coefficients(const SpectralProfile& profile, double rho);
std::vector<double> shifted_newton_coefficients_from_coeffs(const SpectralProfile& profile, double rho);

NecessaryReport run_all_necessary(const SpectralProfile& profile, const CheckConfig& cfg = {});
/// Starts from raw values so a Reality failure is reported instead of thrown.
NecessaryReport run_all_necessary(std::span<const Complex> values, const CheckConfig& cfg = {});

}  // namespace niep
