#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "niep/necessary.hpp"
#include "niep/spectrum.hpp"

namespace niep {

inline constexpr std::size_t kDefaultExtendedTraceBound = 40;

inline constexpr std::string_view kAugmentCaveat =
    "Passing every implemented necessary condition does not prove realizability; "
    "the padded list may still fail to be the spectrum of a nonnegative matrix.";

/// s_k >= 0 for k <= k_max, and s_k > 0 forces s_km > 0 for km <= k_max.
ConditionReport check_extended_trace(const Spectrum& spectrum, std::size_t k_max = kDefaultExtendedTraceBound);

struct BhReport {
  std::vector<ConditionReport> reports;  // strict_perron, reality, extended_trace
  /// All three satisfied: the list is the nonzero spectrum of some primitive
  /// matrix, as far as moments up to k_max can tell.
  bool nonzero_spectrum_realizable = false;
  std::size_t k_max = kDefaultExtendedTraceBound;

  friend bool operator==(const BhReport&, const BhReport&) = default;
};

/// Hypotheses of the primitive-nonzero-spectrum theorem. Values within tol of
/// zero make every report Inapplicable.
BhReport check_bh_hypotheses(std::span<const Complex> values, std::size_t k_max = kDefaultExtendedTraceBound,
                             double tol = kDefaultTolerance);

struct AugmentReport {
  std::size_t original_n = 0;
  std::optional<std::size_t> zeros_added;  // empty: nothing in range clears the conditions
  std::size_t k_max = 0;
  std::size_t n_max = 0;
  /// Whether every N above the first passing one also passes.
  bool monotone = true;
  std::string caveat{kAugmentCaveat};

  friend bool operator==(const AugmentReport&, const AugmentReport&) = default;
};

/// Smallest N in [n, n_max] at which the list padded with N - n zeros draws
/// no Violated report from run_all_necessary. The scan runs in parallel.
AugmentReport min_zeros_for_necessary(const Spectrum& spectrum, std::size_t n_max, const CheckConfig& cfg = {});

}  // namespace niep
